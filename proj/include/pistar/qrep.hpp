#pragma once

// Representations of a quiver over F_p: Hom/Ext^1, generic points, the
// indecomposables of Dynkin quivers and Krull-Schmidt decomposition.

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pistar/blocks.hpp"
#include "pistar/exactalg.hpp"
#include "pistar/quiver.hpp"

namespace pistar {

/// A degree-preserving linear map between graded spaces: one block per vertex,
/// block i of shape dim(N_i) x dim(M_i).
struct GradedMap {
    std::vector<Mat> blocks;

    friend bool operator==(const GradedMap&, const GradedMap&) = default;
};

inline GradedMap identity_map(const DimVector& d) {
    GradedMap g;
    for (int x : d.values()) g.blocks.push_back(Mat::identity(static_cast<std::size_t>(x)));
    return g;
}

inline GradedMap zero_map(const DimVector& from, const DimVector& to) {
    GradedMap g;
    for (std::size_t i = 0; i < from.size(); ++i)
        g.blocks.emplace_back(static_cast<std::size_t>(to[i]), static_cast<std::size_t>(from[i]));
    return g;
}

/// g o f
inline GradedMap compose(const Field& f, const GradedMap& g, const GradedMap& fm) {
    if (g.blocks.size() != fm.blocks.size()) throw InvalidArgument("compose: vertex counts differ");
    GradedMap r;
    for (std::size_t i = 0; i < g.blocks.size(); ++i) r.blocks.push_back(mul(f, g.blocks[i], fm.blocks[i]));
    return r;
}

inline GradedMap combine(const Field& f, const GradedMap& a, elem_t ca, const GradedMap& b, elem_t cb) {
    GradedMap r;
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        r.blocks.push_back(add(f, scale(f, ca, a.blocks[i]), scale(f, cb, b.blocks[i])));
    return r;
}

inline bool is_zero(const GradedMap& g) {
    for (const auto& b : g.blocks)
        if (!b.is_zero()) return false;
    return true;
}

/// Representation of Q: maps[h] has shape dim(h'') x dim(h').
struct QRep {
    DimVector dim;
    std::vector<Mat> maps;

    friend bool operator==(const QRep&, const QRep&) = default;
};

inline void check_rep(const Quiver& q, const QRep& m) {
    q.check_dim(m.dim);
    if (!m.dim.nonnegative()) throw InvalidArgument("negative dimension");
    if (m.maps.size() != q.arrow_count()) throw InvalidArgument("representation has wrong number of maps");
    for (std::size_t h = 0; h < q.arrow_count(); ++h) {
        const auto& a = q.arrow(h);
        if (m.maps[h].rows() != std::size_t(m.dim[a.target]) || m.maps[h].cols() != std::size_t(m.dim[a.source]))
            throw InvalidArgument("map of arrow " + std::to_string(h) + " has the wrong shape");
    }
}

inline QRep zero_rep(const Quiver& q, const DimVector& d) {
    q.check_dim(d);
    QRep m{d, {}};
    for (const auto& a : q.arrows()) m.maps.emplace_back(std::size_t(d[a.target]), std::size_t(d[a.source]));
    return m;
}

inline QRep simple_rep(const Quiver& q, std::size_t i) { return zero_rep(q, DimVector::unit(q.vertex_count(), i)); }

inline QRep direct_sum(const QRep& a, const QRep& b) {
    if (a.maps.size() != b.maps.size()) throw InvalidArgument("direct_sum: different quivers");
    QRep s{a.dim + b.dim, {}};
    for (std::size_t h = 0; h < a.maps.size(); ++h) s.maps.push_back(block_diagonal({a.maps[h], b.maps[h]}));
    return s;
}

inline BlockLayout vertex_layout(const DimVector& from, const DimVector& to) {
    BlockLayout l;
    for (std::size_t i = 0; i < from.size(); ++i) l.add(std::size_t(to[i]), std::size_t(from[i]));
    return l;
}

/// Matrix of (f_i) |-> (nu_h f_{h'} - f_{h''} mu_h)_h; its kernel is Hom_Q(M,N).
inline LinearMapBuilder hom_q_system(const Field& f, const Quiver& q, const QRep& m, const QRep& n) {
    BlockLayout out;
    for (const auto& a : q.arrows()) out.add(std::size_t(n.dim[a.target]), std::size_t(m.dim[a.source]));
    LinearMapBuilder b(f, vertex_layout(m.dim, n.dim), out);
    for (std::size_t h = 0; h < q.arrow_count(); ++h) {
        const auto& a = q.arrow(h);
        b.add_left(h, a.source, n.maps[h]);
        b.add_right(h, a.target, m.maps[h], f.neg(1));
    }
    return b;
}

/// Basis of Hom_Q(M,N).
inline std::vector<GradedMap> hom_q_space(const Field& f, const Quiver& q, const QRep& m, const QRep& n) {
    check_rep(q, m);
    check_rep(q, n);
    auto sys = hom_q_system(f, q, m, n);
    std::vector<GradedMap> basis;
    for (auto& blocks : sys.domain().unflatten_columns(kernel_basis(f, sys.matrix())))
        basis.push_back(GradedMap{std::move(blocks)});
    return basis;
}

inline int hom_q_dim(const Field& f, const Quiver& q, const QRep& m, const QRep& n) {
    check_rep(q, m);
    check_rep(q, n);
    auto sys = hom_q_system(f, q, m, n);
    return static_cast<int>(sys.domain().total() - rank(f, sys.matrix()));
}

/// dim Ext^1_Q(M,N) = dim Hom_Q(M,N) - <dim M, dim N>_Q.
inline int ext1_q_dim(const Field& f, const Quiver& q, const QRep& m, const QRep& n) {
    int e = hom_q_dim(f, q, m, n) - euler_form(q, m.dim, n.dim);
    if (e < 0) throw InternalAssertion("negative Ext^1_Q dimension");
    return e;
}

inline bool is_q_morphism(const Field& f, const Quiver& q, const QRep& m, const QRep& n, const GradedMap& g) {
    if (g.blocks.size() != q.vertex_count()) return false;
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        if (g.blocks[i].rows() != std::size_t(n.dim[i]) || g.blocks[i].cols() != std::size_t(m.dim[i])) return false;
    for (std::size_t h = 0; h < q.arrow_count(); ++h) {
        const auto& a = q.arrow(h);
        if (mul(f, n.maps[h], g.blocks[a.source]) != mul(f, g.blocks[a.target], m.maps[h])) return false;
    }
    return true;
}

inline QRep generic_rep(const Quiver& q, const DimVector& d, FieldCtx& ctx) {
    q.check_dim(d);
    QRep m{d, {}};
    for (const auto& a : q.arrows())
        m.maps.push_back(random_mat(std::size_t(d[a.target]), std::size_t(d[a.source]), ctx));
    return m;
}

/// Dual over Q^op: each map replaced by its transpose.
inline QRep dual_rep(const QRep& x) {
    QRep d{x.dim, {}};
    for (const auto& m : x.maps) d.maps.push_back(m.transpose());
    return d;
}

/// Multiset of positive roots, stored as a multiplicity per root id of a
/// fixed RootSystem.
class RootMultiset {
public:
    RootMultiset() = default;
    explicit RootMultiset(std::size_t root_count) : counts_(root_count, 0) {}
    explicit RootMultiset(std::vector<int> counts) : counts_(std::move(counts)) {}

    static RootMultiset single(std::size_t root_count, std::size_t id, int mult = 1) {
        RootMultiset m(root_count);
        m.add(id, mult);
        return m;
    }

    std::size_t root_count() const noexcept { return counts_.size(); }
    int count(std::size_t id) const { return counts_.at(id); }
    void add(std::size_t id, int k = 1) {
        counts_.at(id) += k;
        if (counts_[id] < 0) throw InvalidArgument("negative multiplicity");
    }
    const std::vector<int>& counts() const noexcept { return counts_; }

    int cardinality() const {
        int s = 0;
        for (int c : counts_) s += c;
        return s;
    }
    bool empty() const { return cardinality() == 0; }

    RootMultiset operator+(const RootMultiset& o) const {
        if (o.root_count() != root_count()) throw InvalidArgument("multisets over different root systems");
        RootMultiset r(*this);
        for (std::size_t i = 0; i < counts_.size(); ++i) r.counts_[i] += o.counts_[i];
        return r;
    }

    friend auto operator<=>(const RootMultiset&, const RootMultiset&) = default;
    friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

private:
    std::vector<int> counts_;
};

inline DimVector grdim(const RootSystem& roots, const RootMultiset& m) {
    DimVector d(roots.size() ? roots.root(0).size() : 0);
    for (std::size_t id = 0; id < m.root_count(); ++id)
        if (m.count(id)) d = d + roots.root(id) * m.count(id);
    return d;
}

/// Kostant partitions of d: all multisets with grdim = d, in canonical order
/// (the descending root spelling, compared lexicographically, descending).
inline std::vector<RootMultiset> kostant_partitions(const RootSystem& roots, const DimVector& d) {
    std::vector<RootMultiset> out;
    RootMultiset cur(roots.size());
    auto rec = [&](auto&& self, std::size_t id, const DimVector& rest) -> void {
        if (rest.is_zero()) {
            out.push_back(cur);
            return;
        }
        if (id == roots.size()) return;
        // take the current root as many times as possible first
        int max_k = 0;
        for (DimVector r = rest; (r = r - roots.root(id)).nonnegative();) ++max_k;
        for (int k = max_k; k >= 0; --k) {
            cur.add(id, k);
            self(self, id + 1, rest - roots.root(id) * k);
            cur.add(id, -k);
        }
    };
    if (!d.nonnegative()) return out;
    rec(rec, 0, d);
    return out;
}

/// M_Q(beta): a generic representation of dimension beta, certified to be a
/// brick. Retries with fresh randomness up to `retries` times.
inline QRep indecomposable(const Quiver& q, const DimVector& beta, FieldCtx& ctx, int retries = 7) {
    if (euler_form(q, beta, beta) != 1 || !beta.nonnegative())
        throw InvalidArgument(beta.to_string() + " is not a positive root");
    for (int t = 0; t < retries; ++t) {
        QRep m = generic_rep(q, beta, ctx);
        if (hom_q_dim(ctx.field(), q, m, m) == 1) return m;
    }
    throw GenericityFailure("could not certify an indecomposable of dimension " + beta.to_string());
}

/// Indecomposables of a Dynkin quiver with their Hom-dimension matrix;
/// identifies isomorphism classes by Hom counts.
class RepCatalog {
public:
    using Rational = boost::rational<long long>;

    RepCatalog(Quiver q, Field f, std::uint64_t seed = 0)
        : quiver_(std::move(q)), field_(f), roots_(positive_roots(quiver_)) {
        FieldCtx ctx = FieldCtx::derived(field_, seed, 0xCA7A10ULL);
        for (const auto& beta : roots_.roots()) indec_.push_back(pistar::indecomposable(quiver_, beta, ctx));
        const std::size_t n = roots_.size();
        hom_.assign(n, std::vector<int>(n, 0));
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g) hom_[b][g] = hom_q_dim(field_, quiver_, indec_[b], indec_[g]);
        invert_hom_matrix();
    }

    const Quiver& quiver() const noexcept { return quiver_; }
    const Field& field() const noexcept { return field_; }
    const RootSystem& roots() const noexcept { return roots_; }
    std::size_t root_count() const noexcept { return roots_.size(); }

    const QRep& indecomposable(std::size_t id) const { return indec_.at(id); }
    /// A[b][g] = dim Hom_Q(M(beta_b), M(beta_g)).
    const std::vector<std::vector<int>>& hom_matrix() const noexcept { return hom_; }

    RootMultiset empty_multiset() const { return RootMultiset(roots_.size()); }
    RootMultiset simple(std::size_t vertex) const {
        return RootMultiset::single(roots_.size(), roots_.simple_root_id(vertex));
    }
    DimVector grdim(const RootMultiset& m) const { return pistar::grdim(roots_, m); }

    /// M_Q(m) built from the catalog's fixed indecomposables.
    QRep rep_of_multiset(const RootMultiset& m) const {
        check_multiset(m);
        QRep r = zero_rep(quiver_, quiver_.zero_dim());
        for (std::size_t id = 0; id < m.root_count(); ++id)
            for (int k = 0; k < m.count(id); ++k) r = direct_sum(r, indec_[id]);
        return r;
    }

    /// M_Q(m) with freshly sampled indecomposable summands.
    QRep rep_of_multiset(const RootMultiset& m, FieldCtx& ctx) const {
        check_multiset(m);
        QRep r = zero_rep(quiver_, quiver_.zero_dim());
        for (std::size_t id = 0; id < m.root_count(); ++id)
            for (int k = 0; k < m.count(id); ++k)
                r = direct_sum(r, pistar::indecomposable(quiver_, roots_.root(id), ctx));
        return r;
    }

    /// The unique m with X = M_Q(m), from h[b] = dim Hom_Q(M(beta_b), X) = sum_g A[b][g] m[g].
    RootMultiset decompose(const QRep& x) const {
        check_rep(quiver_, x);
        const std::size_t n = roots_.size();
        std::vector<int> h(n);
        for (std::size_t b = 0; b < n; ++b) h[b] = hom_q_dim(field_, quiver_, indec_[b], x);
        std::vector<int> counts(n);
        for (std::size_t g = 0; g < n; ++g) {
            Rational s = 0;
            for (std::size_t b = 0; b < n; ++b) s += inverse_[g][b] * Rational(h[b]);
            if (s.denominator() != 1 || s.numerator() < 0)
                throw InternalAssertion("no nonnegative integer solution for the Hom-count system");
            counts[g] = static_cast<int>(s.numerator());
        }
        RootMultiset m(std::move(counts));
        if (grdim(m) != x.dim) throw InternalAssertion("decomposition does not match the graded dimension");
        return m;
    }

    void check_multiset(const RootMultiset& m) const {
        if (m.root_count() != roots_.size()) throw InvalidArgument("multiset belongs to another root system");
    }

private:
    void invert_hom_matrix() {
        const std::size_t n = roots_.size();
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a[i][j] = hom_[i][j];
            a[i][n + i] = 1;
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && a[piv][c].numerator() == 0) ++piv;
            if (piv == n) throw InternalAssertion("hom-matrix singular");
            std::swap(a[piv], a[c]);
            Rational inv = 1 / a[c][c];
            for (auto& v : a[c]) v *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || a[r][c].numerator() == 0) continue;
                Rational fct = a[r][c];
                for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= fct * a[c][j];
            }
        }
        inverse_.assign(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inverse_[i][j] = a[i][n + j];
    }

    Quiver quiver_;
    Field field_;
    RootSystem roots_;
    std::vector<QRep> indec_;
    std::vector<std::vector<int>> hom_;
    std::vector<std::vector<Rational>> inverse_;
};

} // namespace pistar
