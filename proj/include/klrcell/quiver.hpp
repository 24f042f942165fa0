#pragma once

#include "klrcell/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace klrcell {

// beta = sum_i c_i alpha_i as a finitely supported map on vertex labels.
struct RootVector {
    std::map<long long, long long> c;

    long long height() const {
        long long h = 0;
        for (auto& [i, m] : c) h += m;
        return h;
    }
    bool operator==(const RootVector& o) const { return c == o.c; }
    bool operator<(const RootVector& o) const { return c < o.c; }
    std::string str() const;
};

// Quiver of type A_{e-1}^{(1)} (e >= 2) or A_infinity (e = 0), together with
// the dominant weight Lambda given by a multicharge kappa of length ell.
class Quiver {
public:
    Quiver(long long e, std::vector<long long> kappa);

    long long e() const { return e_; }
    int level() const { return static_cast<int>(kappa_.size()); }
    const std::vector<long long>& kappa() const { return kappa_; }

    // Representative of i in I: i mod e in [0,e) when e > 0, i itself when e = 0.
    long long vertex(long long i) const;
    bool same_vertex(long long i, long long j) const { return vertex(i) == vertex(j); }

    // res(r,c,l) = c - r + kappa_l as an element of I.
    long long residue(const Node& a) const;

    // (Lambda, alpha_i) = #{ s : kappa_s = i in I }.
    long long weight(long long i) const;

    // Symmetric Cartan entries a_{ij}.
    long long cartan(long long i, long long j) const;

    RootVector block(const std::vector<long long>& residues) const;
    // defect beta = (Lambda, beta) - (beta, beta)/2.
    long long defect(const RootVector& beta) const;

private:
    long long e_;
    std::vector<long long> kappa_;
};

} // namespace klrcell
