#include "klrcell/tableau.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace klrcell {

Tableau::Tableau(Multipartition shape, std::vector<Node> pos_of_entry)
    : shape_(std::move(shape)), pos_(std::move(pos_of_entry)) {
    if (static_cast<int>(pos_.size()) != shape_.size())
        throw std::invalid_argument("tableau entry count differs from shape size");
    chain_.reserve(pos_.size() + 1);
    chain_.emplace_back(
        std::vector<std::vector<int>>(shape_.level(), std::vector<int>{}));
    for (const Node& a : pos_) {
        bool addable = false;
        for (const Node& b : chain_.back().addable_nodes())
            if (a == b) { addable = true; break; }
        if (!addable) throw std::invalid_argument("tableau is not standard");
        chain_.push_back(chain_.back().add(a));
    }
    if (!(chain_.back() == shape_))
        throw std::invalid_argument("tableau does not fill its shape");
}

int Tableau::entry(const Node& a) const {
    for (int k = 1; k <= size(); ++k)
        if (pos_[k - 1] == a) return k;
    return 0;
}

const Multipartition& Tableau::restricted_shape(int k) const { return chain_[k]; }

Tableau Tableau::restrict(int k) const {
    return Tableau(chain_[k], std::vector<Node>(pos_.begin(), pos_.begin() + k));
}

Tableau Tableau::conjugate() const {
    int ell = level();
    std::vector<Node> pos(pos_.size());
    for (int k = 1; k <= size(); ++k) {
        Node a = pos_[k - 1];
        pos[k - 1] = Node{a.col, a.row, ell + 1 - a.comp};
    }
    return Tableau(shape_.conjugate(), std::move(pos));
}

Perm Tableau::d_perm() const {
    Tableau t0 = initial_tableau(shape_);
    std::vector<int> img(size());
    for (int k = 1; k <= size(); ++k) img[k - 1] = entry(t0.node_of(k));
    return Perm(std::move(img));
}

Tableau Tableau::act(const Perm& w) const {
    std::vector<Node> pos(pos_.size());
    for (int k = 1; k <= size(); ++k) pos[w(k) - 1] = pos_[k - 1];
    return Tableau(shape_, std::move(pos));
}

std::string Tableau::str() const {
    std::string s;
    for (int l = 1; l <= level(); ++l) {
        if (l > 1) s += "/";
        s += "{";
        bool first_row = true;
        for (int r = 1; r <= shape_.rows(l); ++r) {
            if (!first_row) s += "|";
            first_row = false;
            for (int c = 1; c <= shape_.part(l, r); ++c) {
                if (c > 1) s += ",";
                s += std::to_string(entry(Node{r, c, l}));
            }
        }
        s += "}";
    }
    return s;
}

Tableau initial_tableau(const Multipartition& shape) {
    std::vector<Node> pos;
    pos.reserve(shape.size());
    for (int l = 1; l <= shape.level(); ++l)
        for (int r = 1; r <= shape.rows(l); ++r)
            for (int c = 1; c <= shape.part(l, r); ++c)
                pos.push_back(Node{r, c, l});
    return Tableau(shape, std::move(pos));
}

Tableau t_lambda(const Multipartition& shape) {
    return initial_tableau(shape.conjugate()).conjugate();
}

Perm w_lambda(const Multipartition& shape) { return t_lambda(shape).d_perm(); }

namespace {

std::vector<Tableau> build_standard(const Multipartition& shape) {
    std::vector<Tableau> out;
    int n = shape.size();
    if (n == 0) {
        out.emplace_back(shape, std::vector<Node>{});
        return out;
    }
    for (const Node& a : shape.removable_nodes()) {
        for (const Tableau& t : standard_tableaux(shape.remove(a))) {
            std::vector<Node> pos;
            pos.reserve(n);
            for (int k = 1; k < n; ++k) pos.push_back(t.node_of(k));
            pos.push_back(a);
            out.emplace_back(shape, std::move(pos));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return canonical_before(a, b); });
    return out;
}

} // namespace

const std::vector<Tableau>& standard_tableaux(const Multipartition& shape) {
    static std::map<std::string, std::vector<Tableau>> cache;
    static std::mutex mtx;
    std::string key = std::to_string(shape.level()) + ":" + shape.str();
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto built = build_standard(shape);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key, std::move(built)).first->second;
}

const std::vector<Tableau>& all_standard_tableaux(int n, int ell) {
    static std::map<std::pair<int, int>, std::vector<Tableau>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({n, ell});
    if (it != cache.end()) return it->second;
    std::vector<Tableau> out;
    for (const Multipartition& shape : multipartitions(n, ell))
        for (const Tableau& t : standard_tableaux(shape)) out.push_back(t);
    return cache.emplace(std::make_pair(n, ell), std::move(out)).first->second;
}

int tableau_index(const Tableau& t) {
    const auto& list = standard_tableaux(t.shape());
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == t) return static_cast<int>(i);
    throw std::logic_error("tableau not found in its shape's list");
}

bool dominates(const Tableau& s, const Tableau& t) {
    if (s.size() != t.size() || s.level() != t.level())
        throw std::invalid_argument("tableau dominance needs equal size and level");
    for (int k = 1; k <= s.size(); ++k)
        if (!dominates(s.restricted_shape(k), t.restricted_shape(k))) return false;
    return true;
}

bool pair_dominates(const Tableau& u, const Tableau& v, const Tableau& s,
                    const Tableau& t) {
    if (u == s && v == t) return true;
    if (u.shape() == s.shape()) return dominates(u, s) && dominates(v, t);
    return dominates(u.shape(), s.shape());
}

bool canonical_before(const Tableau& a, const Tableau& b) {
    for (int k = a.size(); k >= 1; --k) {
        const auto& sa = a.restricted_shape(k);
        const auto& sb = b.restricted_shape(k);
        if (!(sa == sb)) return canonical_before(sa, sb);
    }
    return false;
}

std::vector<long long> residue_sequence(const Tableau& t, const Quiver& q) {
    std::vector<long long> out(t.size());
    for (int k = 1; k <= t.size(); ++k) out[k - 1] = q.residue(t.node_of(k));
    return out;
}

NodeSets node_sets(const Tableau& t, int k, const Quiver& q) {
    NodeSets ns;
    const Multipartition& shape = t.restricted_shape(k);
    Node here = t.node_of(k);
    long long res_k = q.residue(here);
    for (const Node& a : shape.addable_nodes()) {
        if (node_below(a, here)) {
            ns.A.push_back(a);
            if (q.residue(a) == res_k) ns.AddL.push_back(a);
        } else if (node_above(a, here)) {
            ns.A_prime.push_back(a);
            if (q.residue(a) == res_k) ns.AddL_prime.push_back(a);
        }
    }
    for (const Node& a : shape.removable_nodes()) {
        if (node_below(a, here)) {
            ns.R.push_back(a);
            if (q.residue(a) == res_k) ns.RemL.push_back(a);
        } else if (node_above(a, here)) {
            ns.R_prime.push_back(a);
        }
    }
    return ns;
}

long long degree(const Tableau& t, const Quiver& q) {
    long long d = 0;
    for (int k = 1; k <= t.size(); ++k) {
        NodeSets ns = node_sets(t, k, q);
        d += static_cast<long long>(ns.AddL.size()) -
             static_cast<long long>(ns.RemL.size());
    }
    return d;
}

long long codegree(const Tableau& t, const Quiver& q) {
    return degree(t.conjugate(), q);
}

std::vector<Tableau> std_of_residue(const std::vector<long long>& i, int ell,
                                    const Quiver& q) {
    std::vector<Tableau> out;
    for (const Tableau& t : all_standard_tableaux(static_cast<int>(i.size()), ell)) {
        bool match = true;
        for (int k = 1; k <= t.size() && match; ++k)
            if (!q.same_vertex(q.residue(t.node_of(k)), i[k - 1])) match = false;
        if (match) out.push_back(t);
    }
    return out;
}

bool is_positive(const Tableau& s, const Quiver& q) {
    int n = s.size();
    std::vector<NodeSets> sets;
    sets.reserve(n);
    for (int k = 1; k <= n; ++k) {
        sets.push_back(node_sets(s, k, q));
        if (!sets.back().RemL.empty()) return false;
    }
    auto ires = residue_sequence(s, q);
    for (int k = 1; k <= n; ++k) {
        const NodeSets& ns = sets[k - 1];
        if (ns.AddL.empty()) continue;
        std::vector<long long> prefix(ires.begin(), ires.begin() + (k - 1));
        Tableau below_s = s.restrict(k - 1);
        for (const Tableau& u : std_of_residue(prefix, s.level(), q)) {
            if (!dominates(u, below_s)) continue;
            for (const Node& a : u.shape().addable_nodes()) {
                if (!q.same_vertex(q.residue(a), ires[k - 1])) continue;
                if (!node_below(a, s.node_of(k))) continue;
                if (std::find(ns.AddL.begin(), ns.AddL.end(), a) == ns.AddL.end())
                    return false;
            }
        }
    }
    return true;
}

std::vector<int> positive_exponents(const Tableau& t, const Quiver& q) {
    std::vector<int> out(t.size());
    for (int k = 1; k <= t.size(); ++k)
        out[k - 1] = static_cast<int>(node_sets(t, k, q).AddL.size());
    return out;
}

Laurent graded_dim(const Multipartition& shape, const Quiver& q) {
    Laurent out;
    for (const Tableau& t : standard_tableaux(shape)) out.add(1, degree(t, q));
    return out;
}

Laurent graded_dim_algebra(int n, const Quiver& q) {
    Laurent out;
    for (const Multipartition& shape : multipartitions(n, q.level())) {
        Laurent g = graded_dim(shape, q);
        out = out + g * g;
    }
    return out;
}

std::vector<std::pair<RootVector, std::vector<Multipartition>>> blocks(
    int n, const Quiver& q) {
    std::vector<std::pair<RootVector, std::vector<Multipartition>>> out;
    for (const Multipartition& shape : multipartitions(n, q.level())) {
        RootVector beta = q.block(residue_sequence(initial_tableau(shape), q));
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const auto& p) { return p.first == beta; });
        if (it == out.end())
            out.push_back({beta, {shape}});
        else
            it->second.push_back(shape);
    }
    return out;
}

} // namespace klrcell
