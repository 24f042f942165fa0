#pragma once

#include <string>
#include <vector>

namespace klrcell {

// Box coordinates, all 1-based: row r, column c, component l.
struct Node {
    int row = 0;
    int col = 0;
    int comp = 1;

    bool operator==(const Node& o) const {
        return row == o.row && col == o.col && comp == o.comp;
    }
    bool operator!=(const Node& o) const { return !(*this == o); }
    bool operator<(const Node& o) const {
        if (comp != o.comp) return comp < o.comp;
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
    std::string str() const;
};

// a is strictly below b: later component, or same component and lower row.
inline bool node_below(const Node& a, const Node& b) {
    return a.comp > b.comp || (a.comp == b.comp && a.row > b.row);
}
inline bool node_above(const Node& a, const Node& b) { return node_below(b, a); }

class Multipartition {
public:
    Multipartition() : comps_(1) {}
    explicit Multipartition(std::vector<std::vector<int>> comps);

    int level() const { return static_cast<int>(comps_.size()); }
    int size() const;
    const std::vector<std::vector<int>>& components() const { return comps_; }
    int rows(int l) const { return static_cast<int>(comps_[l - 1].size()); }
    // lambda^{(l)}_r, zero past the last row.
    int part(int l, int r) const;

    bool contains(const Node& a) const;
    std::vector<Node> nodes() const;
    std::vector<Node> addable_nodes() const;
    std::vector<Node> removable_nodes() const;
    Multipartition add(const Node& a) const;
    Multipartition remove(const Node& a) const;

    Multipartition conjugate() const;
    // delta = 1/2 sum_{s,i} (lambda^{(s)}_i - 1) lambda^{(s)}_i, an integer.
    long long delta() const;

    // Cumulative dominance vector: entry (l,i) for i = 1..pad_rows is
    // |lambda^{(1)}| + ... + |lambda^{(l-1)}| + lambda^{(l)}_1 + ... + lambda^{(l)}_i.
    std::vector<long long> partial_sum_vector(int pad_rows) const;

    bool operator==(const Multipartition& o) const { return comps_ == o.comps_; }
    bool operator!=(const Multipartition& o) const { return comps_ != o.comps_; }

    // "2,1|1"; an empty component prints as the empty string.
    std::string str() const;
    static Multipartition parse(const std::string& s, int expect_level = -1);

private:
    std::vector<std::vector<int>> comps_;
};

// a dominates b (same size and level required).
bool dominates(const Multipartition& a, const Multipartition& b);

// Strict total order refining dominance, most dominant first: lexicographic
// on the padded partial-sum vector, larger first.
bool canonical_before(const Multipartition& a, const Multipartition& b);

std::vector<Multipartition> partitions(int n);
// All level-ell multipartitions of n in canonical order.
std::vector<Multipartition> multipartitions(int n, int ell);

} // namespace klrcell
