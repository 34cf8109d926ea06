#pragma once

// Pi-modules presented as pairs (M, theta) with theta : M -> tau M, and the
// maps T_{M;N}(f) = tau(f) theta_M - theta_N f.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pistar/coxeter.hpp"
#include "pistar/exactalg.hpp"
#include "pistar/qrep.hpp"
#include "pistar/quiver.hpp"

namespace pistar {

struct TauMod {
    TauImage image;             // M = image.source, tau M = image.object
    GradedMap theta;            // M -> tau M
    std::vector<elem_t> coords; // theta in the hom_q_space(M, tau M) basis, when sampled

    const QRep& rep() const noexcept { return image.source; }
    const QRep& tau_rep() const noexcept { return image.object; }
};

inline TauMod make_taumod(const Field& f, const Quiver& q, const QRep& m, const GradedMap& theta) {
    TauMod x{tau(f, q, m), theta, {}};
    if (!is_q_morphism(f, q, x.rep(), x.tau_rep(), theta)) throw InvalidArgument("tau-datum is not a Q-morphism M -> tau M");
    return x;
}

inline TauMod zero_taumod(const Field& f, const Quiver& q, const QRep& m) {
    TauImage img = tau(f, q, m);
    GradedMap z = zero_map(img.source.dim, img.object.dim);
    return TauMod{std::move(img), std::move(z), {}};
}

/// theta a uniformly random element of Hom_Q(M, tau M), drawn as coordinates.
inline TauMod random_tau_datum(const Quiver& q, const QRep& m, FieldCtx& ctx) {
    const Field& f = ctx.field();
    TauMod x = zero_taumod(f, q, m);
    for (const auto& b : hom_q_space(f, q, x.rep(), x.tau_rep())) {
        elem_t c = ctx.random_element();
        x.coords.push_back(c);
        x.theta = combine(f, x.theta, 1, b, c);
    }
    return x;
}

struct TMap {
    Mat matrix;             // columns: images of the Hom_Q(M,N) basis, in ambient coordinates
    std::size_t domain_dim; // dim Hom_Q(M,N)
    std::size_t target_dim; // dim Hom_Q(M, tau N)
    std::size_t rank;

    std::size_t kernel_dim() const { return domain_dim - rank; }
    std::size_t coker_dim() const { return target_dim - rank; }
    bool surjective() const { return rank == target_dim; }
};

/// T_{M;N} : Hom_Q(M,N) -> Hom_Q(M, tau N), f |-> tau(f) theta_M - theta_N f.
inline TMap t_map(const Field& f, const Quiver& q, const TauMod& m, const TauMod& n) {
    const auto basis = hom_q_space(f, q, m.rep(), n.rep());
    const BlockLayout layout = vertex_layout(m.rep().dim, n.tau_rep().dim);
    std::vector<std::vector<elem_t>> cols;
    for (const auto& g : basis) {
        GradedMap tg = tau_morphism(f, q, m.image, n.image, g);
        GradedMap img = combine(f, compose(f, tg, m.theta), 1, compose(f, n.theta, g), f.neg(1));
        cols.push_back(layout.flatten(img.blocks));
    }
    TMap t{Mat::from_columns(layout.total(), cols), basis.size(),
           std::size_t(hom_q_dim(f, q, m.rep(), n.tau_rep())), 0};
    t.rank = pistar::rank(f, t.matrix);
    return t;
}

/// dim Hom_Pi(x, y) = dim Ker T_{M;N}.
inline int hom_pi_via_t(const Field& f, const Quiver& q, const TauMod& m, const TauMod& n) {
    return static_cast<int>(t_map(f, q, m, n).kernel_dim());
}

/// dim Ext^1_Pi(x, y) = dim Coker T_{M;N} + dim Coker T_{N;M}.
inline int ext1_pi_via_t(const Field& f, const Quiver& q, const TauMod& m, const TauMod& n) {
    return static_cast<int>(t_map(f, q, m, n).coker_dim() + t_map(f, q, n, m).coker_dim());
}

inline bool is_rigid_taumod(const Field& f, const Quiver& q, const TauMod& x) {
    return ext1_pi_via_t(f, q, x, x) == 0;
}

/// Whether T_{N;M} is onto for random tau-data on (M_Q(m), M_Q(n)) in some trial.
inline bool star_criterion(const RepCatalog& cat, const RootMultiset& m, const RootMultiset& n,
                           const TrialConfig& cfg) {
    const Field& f = cat.field();
    const Quiver& q = cat.quiver();
    for (int t = 0; t < cfg.trials; ++t) {
        FieldCtx ctx = cfg.context(f, std::uint64_t(t), 0x5C1);
        TauMod xm = random_tau_datum(q, cat.rep_of_multiset(m, ctx), ctx);
        TauMod xn = random_tau_datum(q, cat.rep_of_multiset(n, ctx), ctx);
        if (t_map(f, q, xn, xm).surjective()) return true;
    }
    return false;
}

/// Coordinate inclusion of the first (or last) d1 basis vectors at each vertex.
inline GradedMap summand_inclusion(const DimVector& total, const DimVector& part, bool first) {
    GradedMap g;
    for (std::size_t i = 0; i < total.size(); ++i) {
        Mat m(std::size_t(total[i]), std::size_t(part[i]));
        const std::size_t off = first ? 0 : std::size_t(total[i] - part[i]);
        for (std::size_t k = 0; k < std::size_t(part[i]); ++k) m(off + k, k) = 1;
        g.blocks.push_back(std::move(m));
    }
    return g;
}

inline GradedMap summand_projection(const DimVector& total, const DimVector& part, bool first) {
    GradedMap g = summand_inclusion(total, part, first);
    for (auto& b : g.blocks) b = b.transpose();
    return g;
}

struct TauSplit {
    TauMod x1; // quotient, on M1
    TauMod x2; // submodule, on M2
};

/// For M = M1 + M2 (M1 on the first d1 coordinates at each vertex) with
/// Hom_Q(M2, tau M1) = 0, the pieces x_i = (M_i, tau(p_i) theta iota_i).
/// The inclusion of x2 and the projection onto x1 are verified to be
/// Pi-morphisms.
inline TauSplit split_by_tau_vanishing(const Field& f, const Quiver& q, const TauMod& x, const DimVector& d1) {
    const QRep& m = x.rep();
    q.check_dim(d1);
    if (!d1.nonnegative() || !d1.fits_in(m.dim)) throw InvalidArgument("split_by_tau_vanishing: summand dimension too large");
    const DimVector d2 = m.dim - d1;
    auto i1 = summand_inclusion(m.dim, d1, true), i2 = summand_inclusion(m.dim, d2, false);
    auto p1 = summand_projection(m.dim, d1, true), p2 = summand_projection(m.dim, d2, false);

    QRep m1{d1, {}}, m2{d2, {}};
    for (std::size_t h = 0; h < q.arrow_count(); ++h) {
        const auto& a = q.arrow(h);
        Mat off_diag = mul(f, mul(f, p2.blocks[a.target], m.maps[h]), i1.blocks[a.source]);
        Mat off_diag2 = mul(f, mul(f, p1.blocks[a.target], m.maps[h]), i2.blocks[a.source]);
        if (!off_diag.is_zero() || !off_diag2.is_zero())
            throw InvalidArgument("split_by_tau_vanishing: M is not block diagonal for the given split");
        m1.maps.push_back(mul(f, mul(f, p1.blocks[a.target], m.maps[h]), i1.blocks[a.source]));
        m2.maps.push_back(mul(f, mul(f, p2.blocks[a.target], m.maps[h]), i2.blocks[a.source]));
    }
    TauImage t1 = tau(f, q, m1), t2 = tau(f, q, m2);
    if (hom_q_dim(f, q, m2, t1.object) != 0) throw InvalidArgument("split_by_tau_vanishing: Hom_Q(M2, tau M1) is nonzero");

    GradedMap tp1 = tau_morphism(f, q, x.image, t1, p1);
    GradedMap tp2 = tau_morphism(f, q, x.image, t2, p2);
    TauSplit s{TauMod{t1, compose(f, tp1, compose(f, x.theta, i1)), {}},
               TauMod{t2, compose(f, tp2, compose(f, x.theta, i2)), {}}};

    // iota_2 : x2 -> x and p_1 : x -> x1 must commute with the data
    GradedMap ti2 = tau_morphism(f, q, t2, x.image, i2);
    if (!is_zero(combine(f, compose(f, ti2, s.x2.theta), 1, compose(f, x.theta, i2), f.neg(1))))
        throw InternalAssertion("split_by_tau_vanishing: inclusion of x2 is not a Pi-morphism");
    if (!is_zero(combine(f, compose(f, tp1, x.theta), 1, compose(f, s.x1.theta, p1), f.neg(1))))
        throw InternalAssertion("split_by_tau_vanishing: projection onto x1 is not a Pi-morphism");
    return s;
}

} // namespace pistar
