#pragma once

#include "klrcell/laurent.hpp"
#include "klrcell/partition.hpp"
#include "klrcell/permutation.hpp"
#include "klrcell/quiver.hpp"

#include <string>
#include <vector>

namespace klrcell {

// Standard tableau: bijection [shape] -> {1..n} increasing along rows and
// columns of every component. Stored as the node of each entry, with the
// restriction chain Shape(t|k) cached.
class Tableau {
public:
    Tableau(Multipartition shape, std::vector<Node> pos_of_entry);

    const Multipartition& shape() const { return shape_; }
    int size() const { return static_cast<int>(pos_.size()); }
    int level() const { return shape_.level(); }

    Node node_of(int k) const { return pos_[k - 1]; }
    // 0 when the node is not in the diagram.
    int entry(const Node& a) const;

    const Multipartition& restricted_shape(int k) const;
    Tableau restrict(int k) const;

    Tableau conjugate() const;
    // d(t) with t = t^shape * d(t); the right action permutes entries.
    Perm d_perm() const;
    std::vector<int> d_word() const { return d_perm().word(); }
    Tableau act(const Perm& w) const;

    bool operator==(const Tableau& o) const { return pos_ == o.pos_; }
    bool operator!=(const Tableau& o) const { return pos_ != o.pos_; }

    // Rows per component: "{1,2|3}" for rows {1,2},{3}; components joined by "/".
    std::string str() const;

private:
    Multipartition shape_;
    std::vector<Node> pos_;
    std::vector<Multipartition> chain_;  // chain_[k] = Shape(t|k), k = 0..n
};

Tableau initial_tableau(const Multipartition& shape);  // t^lambda
Tableau t_lambda(const Multipartition& shape);         // (t^{lambda'})'
Perm w_lambda(const Multipartition& shape);            // d(t_lambda)

// Std(lambda) in the canonical order (t^lambda first); cached per shape.
const std::vector<Tableau>& standard_tableaux(const Multipartition& shape);
// All standard tableaux of all level-ell shapes of n, shapes in canonical
// order; cached.
const std::vector<Tableau>& all_standard_tableaux(int n, int ell);
// Position of t within standard_tableaux(t.shape()).
int tableau_index(const Tableau& t);

// Chain dominance s >= t: Shape(s|k) dominates Shape(t|k) for all k.
bool dominates(const Tableau& s, const Tableau& t);
// (u,v) >= (s,t): strictly more dominant shape, or equal shape with u >= s
// and v >= t. Reflexive.
bool pair_dominates(const Tableau& u, const Tableau& v, const Tableau& s,
                    const Tableau& t);
// Total order refining dominance: lexicographic on the restriction chain
// (Shape(t|n-1), ..., Shape(t|1)) under the multipartition order.
bool canonical_before(const Tableau& a, const Tableau& b);

std::vector<long long> residue_sequence(const Tableau& t, const Quiver& q);

struct NodeSets {
    std::vector<Node> A, R;            // addable/removable of Shape(t|k) below t^{-1}(k)
    std::vector<Node> A_prime, R_prime;  // same, above t^{-1}(k)
    std::vector<Node> AddL, RemL;      // residue-matching subsets of A, R
    std::vector<Node> AddL_prime;      // residue-matching subset of A_prime
};
NodeSets node_sets(const Tableau& t, int k, const Quiver& q);

long long degree(const Tableau& t, const Quiver& q);
long long codegree(const Tableau& t, const Quiver& q);

bool is_positive(const Tableau& t, const Quiver& q);
std::vector<int> positive_exponents(const Tableau& t, const Quiver& q);

std::vector<Tableau> std_of_residue(const std::vector<long long>& i, int ell,
                                    const Quiver& q);

Laurent graded_dim(const Multipartition& shape, const Quiver& q);
Laurent graded_dim_algebra(int n, const Quiver& q);

// Blocks of H_n: root vector beta with the shapes whose residue content is
// beta, shapes in canonical order, blocks ordered by first shape.
std::vector<std::pair<RootVector, std::vector<Multipartition>>> blocks(
    int n, const Quiver& q);

} // namespace klrcell
