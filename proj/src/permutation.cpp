#include "klrcell/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace klrcell {

Perm::Perm(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 1);
}

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 1 || v > n() || seen[v - 1])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[v - 1] = 1;
    }
}

bool Perm::is_identity() const {
    for (int k = 1; k <= n(); ++k)
        if (img_[k - 1] != k) return false;
    return true;
}

Perm Perm::operator*(const Perm& v) const {
    assert(n() == v.n());
    std::vector<int> r(img_.size());
    for (int k = 1; k <= n(); ++k) r[k - 1] = v.img_[img_[k - 1] - 1];
    return Perm(std::move(r));
}

Perm Perm::inverse() const {
    std::vector<int> r(img_.size());
    for (int k = 1; k <= n(); ++k) r[img_[k - 1] - 1] = k;
    return Perm(std::move(r));
}

int Perm::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

Perm Perm::transposition(int n, int r) {
    assert(1 <= r && r < n);
    Perm s(n);
    std::swap(s.img_[r - 1], s.img_[r]);
    return s;
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
    Perm w(n);
    for (int r : word) w = w * transposition(n, r);
    return w;
}

std::vector<int> Perm::word() const {
    std::vector<int> out;
    Perm cur = *this;
    for (;;) {
        int r = 0;
        for (int k = 1; k < n(); ++k)
            if (cur(k) > cur(k + 1)) { r = k; break; }
        if (r == 0) break;
        out.push_back(r);
        cur = transposition(n(), r) * cur;
    }
    return out;
}

std::string Perm::str() const {
    std::string s = "[";
    for (int k = 1; k <= n(); ++k) {
        if (k > 1) s += ",";
        s += std::to_string(img_[k - 1]);
    }
    return s + "]";
}

std::vector<Perm> sym_group(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Perm> young_subgroup(int n, const std::vector<int>& blocks) {
    std::vector<Perm> out{Perm(n)};
    int offset = 0;
    for (int b : blocks) {
        assert(b >= 0 && offset + b <= n);
        if (b >= 2) {
            std::vector<int> vals(b);
            std::iota(vals.begin(), vals.end(), offset + 1);
            std::vector<Perm> next;
            next.reserve(out.size() * 24);
            do {
                for (const Perm& w : out) {
                    std::vector<int> img = w.one_line();
                    for (int j = 0; j < b; ++j) img[offset + j] = vals[j];
                    next.emplace_back(std::move(img));
                }
            } while (std::next_permutation(vals.begin(), vals.end()));
            out = std::move(next);
        }
        offset += b;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace klrcell
