#include "klrcell/quiver.hpp"

#include <stdexcept>

namespace klrcell {

std::string RootVector::str() const {
    if (c.empty()) return "0";
    std::string s;
    for (auto& [i, m] : c) {
        if (!s.empty()) s += "+";
        if (m != 1) s += std::to_string(m) + "*";
        s += "a" + std::to_string(i);
    }
    return s;
}

Quiver::Quiver(long long e, std::vector<long long> kappa)
    : e_(e), kappa_(std::move(kappa)) {
    if (e_ < 0 || e_ == 1)
        throw std::invalid_argument("quantum characteristic must be 0 or >= 2");
    if (kappa_.empty()) throw std::invalid_argument("multicharge must be nonempty");
}

long long Quiver::vertex(long long i) const {
    if (e_ == 0) return i;
    long long m = i % e_;
    return m < 0 ? m + e_ : m;
}

long long Quiver::residue(const Node& a) const {
    return vertex(a.col - a.row + kappa_[a.comp - 1]);
}

long long Quiver::weight(long long i) const {
    long long w = 0;
    for (long long k : kappa_)
        if (same_vertex(k, i)) ++w;
    return w;
}

long long Quiver::cartan(long long i, long long j) const {
    i = vertex(i);
    j = vertex(j);
    if (i == j) return 2;
    if (e_ == 2) return -2;  // the two distinct vertices are doubly linked
    bool adjacent = same_vertex(i, j + 1) || same_vertex(i, j - 1);
    return adjacent ? -1 : 0;
}

RootVector Quiver::block(const std::vector<long long>& residues) const {
    RootVector beta;
    for (long long i : residues) beta.c[vertex(i)] += 1;
    return beta;
}

long long Quiver::defect(const RootVector& beta) const {
    long long lin = 0, quad = 0;
    for (auto& [i, ci] : beta.c) {
        lin += weight(i) * ci;
        for (auto& [j, cj] : beta.c) quad += ci * cj * cartan(i, j);
    }
    if (quad % 2 != 0) throw std::logic_error("(beta,beta) must be even");
    return lin - quad / 2;
}

} // namespace klrcell
