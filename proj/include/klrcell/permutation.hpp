#pragma once

#include <string>
#include <vector>

namespace klrcell {

// Permutation of {1,...,n} in one-line notation: img[k-1] = w(k).
// Products compose left to right, (u*v)(x) = v(u(x)), so a word
// s_{i1} s_{i2} ... s_{ik} denotes the permutation applying s_{i1} first.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);
    explicit Perm(std::vector<int> one_line);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    bool is_identity() const;
    Perm operator*(const Perm& v) const;
    Perm inverse() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    // Coxeter length = inversion count.
    int length() const;

    static Perm transposition(int n, int r);
    static Perm from_word(int n, const std::vector<int>& word);

    // Lexicographically smallest reduced word, by greedy extraction of the
    // smallest left descent r (w(r) > w(r+1), then w <- s_r * w).
    std::vector<int> word() const;

    std::string str() const;

private:
    std::vector<int> img_;
};

// All of Sym_n in lexicographic one-line order.
std::vector<Perm> sym_group(int n);

// The Young subgroup permuting each consecutive block {o+1,...,o+b}
// independently, where o runs over the partial sums of blocks.
// Blocks of size 0 are allowed and contribute nothing.
std::vector<Perm> young_subgroup(int n, const std::vector<int>& blocks);

} // namespace klrcell
