#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pistar/errors.hpp"

namespace pistar {

struct Arrow {
    std::size_t source;
    std::size_t target;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Graded dimension: one nonnegative integer per vertex.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::size_t n) : v_(n, 0) {}
    DimVector(std::initializer_list<int> v) : v_(v) {}
    explicit DimVector(std::vector<int> v) : v_(std::move(v)) {}

    static DimVector unit(std::size_t n, std::size_t i) {
        DimVector d(n);
        d[i] = 1;
        return d;
    }

    std::size_t size() const noexcept { return v_.size(); }
    int& operator[](std::size_t i) { return v_[i]; }
    int operator[](std::size_t i) const { return v_[i]; }
    const std::vector<int>& values() const noexcept { return v_; }

    int total() const { return std::accumulate(v_.begin(), v_.end(), 0); }
    bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
    }
    bool nonnegative() const {
        return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
    }

    /// Componentwise <=.
    bool fits_in(const DimVector& bound) const {
        check_same(bound);
        for (std::size_t i = 0; i < size(); ++i)
            if (v_[i] > bound[i]) return false;
        return true;
    }

    DimVector operator+(const DimVector& o) const {
        check_same(o);
        DimVector r(*this);
        for (std::size_t i = 0; i < size(); ++i) r[i] += o[i];
        return r;
    }
    DimVector operator-(const DimVector& o) const {
        check_same(o);
        DimVector r(*this);
        for (std::size_t i = 0; i < size(); ++i) r[i] -= o[i];
        return r;
    }
    DimVector operator*(int k) const {
        DimVector r(*this);
        for (auto& x : r.v_) x *= k;
        return r;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
        return s + "]";
    }

    friend auto operator<=>(const DimVector&, const DimVector&) = default;
    friend bool operator==(const DimVector&, const DimVector&) = default;

private:
    void check_same(const DimVector& o) const {
        if (o.size() != size()) throw InvalidArgument("dimension vectors of different length");
    }

    std::vector<int> v_;
};

/// Finite quiver without loops. Vertices are 0..n-1 with display labels.
class Quiver {
public:
    Quiver() = default;

    Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows)
        : labels_(std::move(labels)), arrows_(std::move(arrows)) {
        for (const auto& a : arrows_) {
            if (a.source >= labels_.size() || a.target >= labels_.size())
                throw InvalidArgument("arrow endpoint out of range");
            if (a.source == a.target) throw InvalidArgument("quiver has a loop at vertex " + labels_[a.source]);
        }
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size()) throw InvalidArgument("duplicate vertex label");
    }

    /// Built-ins: A<n> (n>=1), D<n> (n>=4), E6/E7/E8. Arrows point from lower
    /// to higher index; for D<n> the branch vertex is last.
    static Quiver builtin(std::string_view name) {
        auto parse_n = [&](std::size_t from) -> int {
            std::string rest(name.substr(from));
            if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
                throw InvalidArgument("unknown quiver '" + std::string(name) + "'");
            return std::stoi(rest);
        };
        if (name.empty()) throw InvalidArgument("empty quiver name");
        const char kind = name[0];
        const int n = parse_n(1);
        std::vector<std::string> labels;
        for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
        std::vector<Arrow> arrows;
        auto arrow = [&](int s, int t) { arrows.push_back({std::size_t(s - 1), std::size_t(t - 1)}); };
        if (kind == 'A' && n >= 1) {
            for (int i = 1; i < n; ++i) arrow(i, i + 1);
        } else if (kind == 'D' && n >= 4) {
            // legs 1 and 2 on the center n; chain 3 -> 4 -> ... -> n-1 -> n
            arrow(1, n);
            arrow(2, n);
            for (int i = 3; i < n - 1; ++i) arrow(i, i + 1);
            arrow(n - 1, n);
        } else if (kind == 'E' && n >= 6 && n <= 8) {
            // chain 1 -> 2 -> ... -> n-1, branch vertex n attached to 3
            for (int i = 1; i < n - 1; ++i) arrow(i, i + 1);
            arrow(3, n);
        } else {
            throw InvalidArgument("unknown quiver '" + std::string(name) + "'");
        }
        return Quiver(std::move(labels), std::move(arrows));
    }

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const Arrow& arrow(std::size_t h) const { return arrows_.at(h); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::size_t vertex_index(std::string_view label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        throw InvalidArgument("unknown vertex '" + std::string(label) + "'");
    }

    bool is_sink(std::size_t i) const {
        return std::none_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.source == i; });
    }
    bool is_source(std::size_t i) const {
        return std::none_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.target == i; });
    }

    /// True iff Q has an oriented cycle.
    bool has_cycle() const {
        std::vector<int> indeg(vertex_count(), 0);
        for (const auto& a : arrows_) ++indeg[a.target];
        std::vector<std::size_t> stack;
        for (std::size_t i = 0; i < vertex_count(); ++i)
            if (indeg[i] == 0) stack.push_back(i);
        std::size_t visited = 0;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            ++visited;
            for (const auto& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
        }
        return visited != vertex_count();
    }

    Quiver opposite() const {
        Quiver q = *this;
        for (auto& a : q.arrows_) std::swap(a.source, a.target);
        return q;
    }

    /// Reverse every arrow incident to vertex i (a BGP reflection of the quiver).
    Quiver reflected_at(std::size_t i) const {
        Quiver q = *this;
        for (auto& a : q.arrows_)
            if (a.source == i || a.target == i) std::swap(a.source, a.target);
        return q;
    }

    DimVector zero_dim() const { return DimVector(vertex_count()); }

    void check_dim(const DimVector& d) const {
        if (d.size() != vertex_count())
            throw InvalidArgument("dimension vector has length " + std::to_string(d.size()) + ", quiver has " +
                                  std::to_string(vertex_count()) + " vertices");
    }

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Arrow> arrows_;
};

/// <d,e>_Q = sum_i d(i)e(i) - sum_h d(h')e(h'')
inline int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    q.check_dim(d);
    q.check_dim(e);
    int s = 0;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) s += d[i] * e[i];
    for (const auto& a : q.arrows()) s -= d[a.source] * e[a.target];
    return s;
}

inline int sym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    return euler_form(q, d, e) + euler_form(q, e, d);
}

/// dim R_Q(V) for grdim V = d.
inline int rep_space_dim(const Quiver& q, const DimVector& d) {
    q.check_dim(d);
    int s = 0;
    for (const auto& a : q.arrows()) s += d[a.source] * d[a.target];
    return s;
}

/// dim G_V = sum d(i)^2.
inline int group_dim(const DimVector& d) {
    int s = 0;
    for (int x : d.values()) s += x * x;
    return s;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> connected_components(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : q.arrows()) parent[find(a.source)] = find(a.target);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, vs] : groups) out.push_back(std::move(vs));
    return out;
}

/// ADE label of one connected vertex set, or nullopt.
inline std::optional<std::string> ade_label(const Quiver& q, const std::vector<std::size_t>& comp) {
    const std::size_t n = comp.size();
    std::map<std::size_t, std::vector<std::size_t>> adj;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    std::size_t edge_count = 0;
    for (const auto& a : q.arrows()) {
        if (std::find(comp.begin(), comp.end(), a.source) == comp.end()) continue;
        auto key = std::minmax(a.source, a.target);
        if (!edges.insert(key).second) return std::nullopt; // multiple edge
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
        ++edge_count;
    }
    if (edge_count != n - 1) return std::nullopt; // not a tree
    std::vector<std::size_t> branch;
    for (auto v : comp) {
        std::size_t deg = adj[v].size();
        if (deg > 3) return std::nullopt;
        if (deg == 3) branch.push_back(v);
    }
    if (branch.empty()) return "A" + std::to_string(n);
    if (branch.size() > 1) return std::nullopt;
    std::vector<int> arms;
    for (auto start : adj[branch[0]]) {
        int len = 1;
        std::size_t prev = branch[0], cur = start;
        while (adj[cur].size() == 2) {
            std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return "E" + std::to_string(n);
    return std::nullopt;
}

} // namespace detail

/// ADE type of the underlying graph ("A3", "D4", "A1+A2", ...), or nullopt
/// when some connected component is not simply laced Dynkin.
inline std::optional<std::string> dynkin_type(const Quiver& q) {
    if (q.vertex_count() == 0) return std::nullopt;
    std::string label;
    for (const auto& comp : detail::connected_components(q)) {
        auto l = detail::ade_label(q, comp);
        if (!l) return std::nullopt;
        label += (label.empty() ? "" : "+") + *l;
    }
    return label;
}

inline bool is_dynkin(const Quiver& q) { return dynkin_type(q).has_value(); }

/// Positive roots of a Dynkin quiver, ordered lexicographically descending so
/// that iterating ids in order reproduces the canonical multiset spelling.
class RootSystem {
public:
    RootSystem() = default;
    explicit RootSystem(std::vector<DimVector> roots) : roots_(std::move(roots)) {
        std::sort(roots_.begin(), roots_.end(), std::greater<>{});
        for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;
    }

    std::size_t size() const noexcept { return roots_.size(); }
    const DimVector& root(std::size_t id) const { return roots_.at(id); }
    const std::vector<DimVector>& roots() const noexcept { return roots_; }

    std::optional<std::size_t> find(const DimVector& d) const {
        auto it = index_.find(d);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t id_of(const DimVector& d) const {
        auto id = find(d);
        if (!id) throw InvalidArgument(d.to_string() + " is not a positive root");
        return *id;
    }

    std::size_t simple_root_id(std::size_t vertex) const {
        return id_of(DimVector::unit(roots_.empty() ? 0 : roots_[0].size(), vertex));
    }

    bool is_simple(std::size_t id) const { return root(id).total() == 1; }

private:
    std::vector<DimVector> roots_;
    std::map<DimVector, std::size_t> index_;
};

/// Psi = { d >= 0 : <d,d>_Q = 1 }. Every positive root is reached from a
/// simple root by adding simple roots one at a time through roots, so the
/// search closes the simple roots under that step.
inline RootSystem positive_roots(const Quiver& q) {
    if (!is_dynkin(q)) throw UnsupportedQuiver("positive roots requested for a non-Dynkin quiver");
    const std::size_t n = q.vertex_count();
    std::set<DimVector> found;
    std::vector<DimVector> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        found.insert(DimVector::unit(n, i));
        frontier.push_back(DimVector::unit(n, i));
    }
    while (!frontier.empty()) {
        std::vector<DimVector> next;
        for (const auto& b : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                DimVector c = b + DimVector::unit(n, i);
                if (euler_form(q, c, c) == 1 && found.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    return RootSystem(std::vector<DimVector>(found.begin(), found.end()));
}

} // namespace pistar
