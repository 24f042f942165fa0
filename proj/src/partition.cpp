#include "klrcell/partition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace klrcell {

std::string Node::str() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + "," +
           std::to_string(comp) + ")";
}

Multipartition::Multipartition(std::vector<std::vector<int>> comps)
    : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("level must be positive");
    for (auto& c : comps_) {
        while (!c.empty() && c.back() == 0) c.pop_back();
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] <= 0 || (i > 0 && c[i - 1] < c[i]))
                throw std::invalid_argument("component is not a partition");
        }
    }
}

int Multipartition::size() const {
    int n = 0;
    for (const auto& c : comps_)
        for (int p : c) n += p;
    return n;
}

int Multipartition::part(int l, int r) const {
    const auto& c = comps_[l - 1];
    return (r >= 1 && r <= static_cast<int>(c.size())) ? c[r - 1] : 0;
}

bool Multipartition::contains(const Node& a) const {
    if (a.comp < 1 || a.comp > level() || a.row < 1 || a.col < 1) return false;
    return a.col <= part(a.comp, a.row);
}

std::vector<Node> Multipartition::nodes() const {
    std::vector<Node> out;
    for (int l = 1; l <= level(); ++l)
        for (int r = 1; r <= rows(l); ++r)
            for (int c = 1; c <= part(l, r); ++c) out.push_back({r, c, l});
    return out;
}

std::vector<Node> Multipartition::addable_nodes() const {
    std::vector<Node> out;
    for (int l = 1; l <= level(); ++l)
        for (int r = 1; r <= rows(l) + 1; ++r) {
            int c = part(l, r) + 1;
            if (r == 1 || part(l, r - 1) >= c) out.push_back({r, c, l});
        }
    return out;
}

std::vector<Node> Multipartition::removable_nodes() const {
    std::vector<Node> out;
    for (int l = 1; l <= level(); ++l)
        for (int r = 1; r <= rows(l); ++r) {
            int c = part(l, r);
            if (c > part(l, r + 1)) out.push_back({r, c, l});
        }
    return out;
}

Multipartition Multipartition::add(const Node& a) const {
    auto comps = comps_;
    auto& c = comps[a.comp - 1];
    if (a.row == static_cast<int>(c.size()) + 1)
        c.push_back(1);
    else
        c[a.row - 1] += 1;
    Multipartition out(std::move(comps));
    assert(out.contains(a) && out.size() == size() + 1);
    return out;
}

Multipartition Multipartition::remove(const Node& a) const {
    assert(contains(a) && a.col == part(a.comp, a.row));
    auto comps = comps_;
    comps[a.comp - 1][a.row - 1] -= 1;
    return Multipartition(std::move(comps));
}

Multipartition Multipartition::conjugate() const {
    std::vector<std::vector<int>> out;
    for (int l = level(); l >= 1; --l) {
        const auto& c = comps_[l - 1];
        std::vector<int> conj;
        int cols = c.empty() ? 0 : c[0];
        for (int j = 1; j <= cols; ++j) {
            int cnt = 0;
            for (int p : c)
                if (p >= j) ++cnt;
            conj.push_back(cnt);
        }
        out.push_back(std::move(conj));
    }
    return Multipartition(std::move(out));
}

long long Multipartition::delta() const {
    long long d = 0;
    for (const auto& c : comps_)
        for (long long p : c) d += p * (p - 1) / 2;
    return d;
}

std::vector<long long> Multipartition::partial_sum_vector(int pad_rows) const {
    std::vector<long long> v;
    v.reserve(static_cast<size_t>(level()) * pad_rows);
    long long offset = 0;
    for (int l = 1; l <= level(); ++l) {
        long long run = 0;
        for (int r = 1; r <= pad_rows; ++r) {
            run += part(l, r);
            v.push_back(offset + run);
        }
        offset += run;
    }
    return v;
}

std::string Multipartition::str() const {
    std::string s;
    for (int l = 1; l <= level(); ++l) {
        if (l > 1) s += "|";
        for (int r = 1; r <= rows(l); ++r) {
            if (r > 1) s += ",";
            s += std::to_string(part(l, r));
        }
    }
    return s;
}

Multipartition Multipartition::parse(const std::string& s, int expect_level) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    std::string num;
    auto flush_num = [&] {
        if (!num.empty()) {
            cur.push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char ch : s) {
        if (ch == '|') {
            flush_num();
            comps.push_back(std::move(cur));
            cur.clear();
        } else if (ch == ',') {
            flush_num();
        } else if (ch >= '0' && ch <= '9') {
            num += ch;
        } else if (ch != ' ') {
            throw std::invalid_argument("bad shape string: " + s);
        }
    }
    flush_num();
    comps.push_back(std::move(cur));
    if (expect_level > 0 && static_cast<int>(comps.size()) != expect_level)
        throw std::invalid_argument("shape has wrong number of components: " + s);
    return Multipartition(std::move(comps));
}

bool dominates(const Multipartition& a, const Multipartition& b) {
    if (a.level() != b.level() || a.size() != b.size())
        throw std::invalid_argument("dominance needs equal size and level");
    int pad = std::max(1, a.size());
    auto va = a.partial_sum_vector(pad);
    auto vb = b.partial_sum_vector(pad);
    for (size_t i = 0; i < va.size(); ++i)
        if (va[i] < vb[i]) return false;
    return true;
}

bool canonical_before(const Multipartition& a, const Multipartition& b) {
    int pad = std::max(1, std::max(a.size(), b.size()));
    return a.partial_sum_vector(pad) > b.partial_sum_vector(pad);
}

std::vector<Multipartition> partitions(int n) {
    std::vector<Multipartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(std::vector<std::vector<int>>{cur});
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, std::max(n, 1));
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
}

std::vector<Multipartition> multipartitions(int n, int ell) {
    std::vector<Multipartition> out;
    std::vector<std::vector<int>> cur(ell);
    auto rec = [&](auto&& self, int comp, int rest) -> void {
        if (comp == ell) {
            if (rest == 0) out.emplace_back(cur);
            return;
        }
        for (int k = rest; k >= 0; --k) {
            for (const auto& p : partitions(k)) {
                cur[comp] = p.components()[0];
                self(self, comp + 1, rest - k);
            }
        }
        cur[comp].clear();
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
}

} // namespace klrcell
