#pragma once

// Modules over the preprojective algebra as representations of the double
// quiver. Arrow a < |Omega| is the arrow h = a of Q; arrow |Omega| + h is h^op.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pistar/blocks.hpp"
#include "pistar/exactalg.hpp"
#include "pistar/qrep.hpp"
#include "pistar/quiver.hpp"

namespace pistar {

inline std::size_t double_arrow_count(const Quiver& q) { return 2 * q.arrow_count(); }

inline Arrow double_arrow(const Quiver& q, std::size_t a) {
    const std::size_t n = q.arrow_count();
    if (a < n) return q.arrow(a);
    const auto& h = q.arrow(a - n);
    return {h.target, h.source};
}

/// The opposite arrow a^op inside H.
inline std::size_t opposite_arrow(const Quiver& q, std::size_t a) {
    const std::size_t n = q.arrow_count();
    return a < n ? a + n : a - n;
}

struct PiMod {
    DimVector dim;
    std::vector<Mat> maps; // one per arrow of H, shape dim(a'') x dim(a')

    friend bool operator==(const PiMod&, const PiMod&) = default;
};

inline void check_shapes(const Quiver& q, const PiMod& x) {
    q.check_dim(x.dim);
    if (x.maps.size() != double_arrow_count(q)) throw InvalidArgument("Pi-module has wrong number of maps");
    for (std::size_t a = 0; a < x.maps.size(); ++a) {
        auto ar = double_arrow(q, a);
        if (x.maps[a].rows() != std::size_t(x.dim[ar.target]) || x.maps[a].cols() != std::size_t(x.dim[ar.source]))
            throw InvalidArgument("map of double-quiver arrow " + std::to_string(a) + " has the wrong shape");
    }
}

inline PiMod zero_pimod(const Quiver& q, const DimVector& d) {
    q.check_dim(d);
    PiMod x{d, {}};
    for (std::size_t a = 0; a < double_arrow_count(q); ++a) {
        auto ar = double_arrow(q, a);
        x.maps.emplace_back(std::size_t(d[ar.target]), std::size_t(d[ar.source]));
    }
    return x;
}

inline PiMod simple_pimod(const Quiver& q, std::size_t i) { return zero_pimod(q, DimVector::unit(q.vertex_count(), i)); }

/// Pi-module from a forward representation and reverse maps (reverse[h] : V_{h''} -> V_{h'}).
inline PiMod make_pimod(const Quiver& q, const QRep& forward, const std::vector<Mat>& reverse) {
    PiMod x{forward.dim, forward.maps};
    x.maps.insert(x.maps.end(), reverse.begin(), reverse.end());
    check_shapes(q, x);
    return x;
}

/// pi_Q: the underlying representation of Q.
inline QRep forward_part(const Quiver& q, const PiMod& x) {
    check_shapes(q, x);
    return QRep{x.dim, std::vector<Mat>(x.maps.begin(), x.maps.begin() + static_cast<std::ptrdiff_t>(q.arrow_count()))};
}

inline PiMod direct_sum(const Quiver& q, const PiMod& a, const PiMod& b) {
    check_shapes(q, a);
    check_shapes(q, b);
    PiMod s{a.dim + b.dim, {}};
    for (std::size_t k = 0; k < a.maps.size(); ++k) s.maps.push_back(block_diagonal({a.maps[k], b.maps[k]}));
    return s;
}

/// Value of sum_{h''=i} X_h X_{h^op} - sum_{h'=i} X_{h^op} X_h at every vertex.
inline std::vector<Mat> preprojective_defect(const Field& f, const Quiver& q, const PiMod& x) {
    check_shapes(q, x);
    std::vector<Mat> out;
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        out.emplace_back(std::size_t(x.dim[i]), std::size_t(x.dim[i]));
    const std::size_t n = q.arrow_count();
    for (std::size_t h = 0; h < n; ++h) {
        const auto& a = q.arrow(h);
        out[a.target] = add(f, out[a.target], mul(f, x.maps[h], x.maps[n + h]));
        out[a.source] = sub(f, out[a.source], mul(f, x.maps[n + h], x.maps[h]));
    }
    return out;
}

inline bool check_pi(const Field& f, const Quiver& q, const PiMod& x) {
    for (const auto& m : preprojective_defect(f, q, x))
        if (!m.is_zero()) return false;
    return true;
}

/// The sum of all arrow maps as one operator on the total space, each X_a
/// placed in block (a'', a').
inline Mat total_operator(const Field& f, const Quiver& q, const PiMod& x) {
    check_shapes(q, x);
    std::vector<std::size_t> off(q.vertex_count() + 1, 0);
    for (std::size_t i = 0; i < q.vertex_count(); ++i) off[i + 1] = off[i] + std::size_t(x.dim[i]);
    Mat t(off.back(), off.back());
    for (std::size_t a = 0; a < x.maps.size(); ++a) {
        auto ar = double_arrow(q, a);
        Mat cur = t.block(off[ar.target], off[ar.source], x.maps[a].rows(), x.maps[a].cols());
        t.set_block(off[ar.target], off[ar.source], add(f, cur, x.maps[a]));
    }
    return t;
}

/// (sum_a X_a)^N == 0 with N the total dimension.
inline bool check_nilpotent(const Field& f, const Quiver& q, const PiMod& x) {
    Mat t = total_operator(f, q, x);
    const std::size_t n = t.rows();
    if (n == 0) return true;
    Mat p = Mat::identity(n);
    for (std::size_t k = 0; k < n; ++k) p = mul(f, p, t);
    return p.is_zero();
}

/// Matrix of (f_i) |-> (Y_a f_{a'} - f_{a''} X_a)_{a in H}; kernel = Hom_Pi(x,y).
inline LinearMapBuilder hom_pi_system(const Field& f, const Quiver& q, const PiMod& x, const PiMod& y) {
    check_shapes(q, x);
    check_shapes(q, y);
    BlockLayout out;
    for (std::size_t a = 0; a < double_arrow_count(q); ++a) {
        auto ar = double_arrow(q, a);
        out.add(std::size_t(y.dim[ar.target]), std::size_t(x.dim[ar.source]));
    }
    LinearMapBuilder b(f, vertex_layout(x.dim, y.dim), out);
    for (std::size_t a = 0; a < double_arrow_count(q); ++a) {
        auto ar = double_arrow(q, a);
        b.add_left(a, ar.source, y.maps[a]);
        b.add_right(a, ar.target, x.maps[a], f.neg(1));
    }
    return b;
}

inline std::vector<GradedMap> hom_pi_space(const Field& f, const Quiver& q, const PiMod& x, const PiMod& y) {
    auto sys = hom_pi_system(f, q, x, y);
    std::vector<GradedMap> basis;
    for (auto& blocks : sys.domain().unflatten_columns(kernel_basis(f, sys.matrix())))
        basis.push_back(GradedMap{std::move(blocks)});
    return basis;
}

inline int hom_pi_dim(const Field& f, const Quiver& q, const PiMod& x, const PiMod& y) {
    auto sys = hom_pi_system(f, q, x, y);
    return static_cast<int>(sys.domain().total() - rank(f, sys.matrix()));
}

inline bool is_pi_morphism(const Field& f, const Quiver& q, const PiMod& x, const PiMod& y, const GradedMap& g) {
    auto sys = hom_pi_system(f, q, x, y);
    auto v = sys.domain().flatten(g.blocks);
    Mat col = Mat::from_columns(v.size(), {v});
    return mul(f, sys.matrix(), col).is_zero();
}

/// dim Ext^1_Pi(x,y) from the Crawley-Boevey count
/// hom(x,y) + hom(y,x) - (dim x, dim y).
inline int ext1_pi_dim_cb(const Field& f, const Quiver& q, const PiMod& x, const PiMod& y) {
    int e = hom_pi_dim(f, q, x, y) + hom_pi_dim(f, q, y, x) - sym_form(q, x.dim, y.dim);
    if (e < 0) throw InternalAssertion("negative Ext^1_Pi from the Crawley-Boevey count");
    return e;
}

/// Layout of the off-diagonal blocks C_a : V1_{a'} -> V2_{a''} of an extension
/// of x1 by x2.
inline BlockLayout cocycle_layout(const Quiver& q, const DimVector& d1, const DimVector& d2) {
    BlockLayout l;
    for (std::size_t a = 0; a < double_arrow_count(q); ++a) {
        auto ar = double_arrow(q, a);
        l.add(std::size_t(d2[ar.target]), std::size_t(d1[ar.source]));
    }
    return l;
}

/// Linearized preprojective relation on the lower-left blocks; kernel = Z.
inline LinearMapBuilder cocycle_system(const Field& f, const Quiver& q, const PiMod& x1, const PiMod& x2) {
    check_shapes(q, x1);
    check_shapes(q, x2);
    LinearMapBuilder b(f, cocycle_layout(q, x1.dim, x2.dim), vertex_layout(x1.dim, x2.dim));
    const std::size_t n = q.arrow_count();
    const elem_t minus = f.neg(1);
    for (std::size_t h = 0; h < n; ++h) {
        const auto& a = q.arrow(h);
        const std::size_t hop = n + h;
        b.add_right(a.target, h, x1.maps[hop]);
        b.add_left(a.target, hop, x2.maps[h]);
        b.add_right(a.source, hop, x1.maps[h], minus);
        b.add_left(a.source, h, x2.maps[hop], minus);
    }
    return b;
}

/// (g_i) |-> (g_{a''} X1_a - X2_a g_{a'})_a; image = B.
inline LinearMapBuilder coboundary_system(const Field& f, const Quiver& q, const PiMod& x1, const PiMod& x2) {
    check_shapes(q, x1);
    check_shapes(q, x2);
    LinearMapBuilder b(f, vertex_layout(x1.dim, x2.dim), cocycle_layout(q, x1.dim, x2.dim));
    for (std::size_t a = 0; a < double_arrow_count(q); ++a) {
        auto ar = double_arrow(q, a);
        b.add_right(a, ar.target, x1.maps[a]);
        b.add_left(a, ar.source, x2.maps[a], f.neg(1));
    }
    return b;
}

/// Extensions 0 -> x2 -> x -> x1 -> 0 as cocycles modulo coboundaries.
struct ExtSpace {
    BlockLayout layout;
    Mat cocycles;     // columns: basis of Z
    Mat coboundaries; // columns: basis of B, a subspace of Z
    Mat complement;   // columns: cocycles whose classes form a basis of Z/B

    int dim() const { return static_cast<int>(cocycles.cols() - coboundaries.cols()); }

    std::vector<Mat> cocycle(std::size_t j) const { return layout.unflatten(cocycles.column(j)); }
    std::vector<Mat> ext_class(std::size_t j) const { return layout.unflatten(complement.column(j)); }
};

/// Z and B computed directly, without consulting the Crawley-Boevey count.
inline ExtSpace cocycle_quotient(const Field& f, const Quiver& q, const PiMod& x1, const PiMod& x2) {
    auto z = cocycle_system(f, q, x1, x2);
    auto b = coboundary_system(f, q, x1, x2);
    ExtSpace e;
    e.layout = z.domain();
    e.cocycles = kernel_basis(f, z.matrix());
    e.coboundaries = column_space(f, b.matrix());
    Mat both = hcat(e.coboundaries, e.cocycles);
    Echelon ech = rref(f, both);
    std::vector<std::vector<elem_t>> extra;
    for (auto c : ech.pivots)
        if (c >= e.coboundaries.cols()) extra.push_back(both.column(c));
    e.complement = Mat::from_columns(e.layout.total(), extra);
    if (e.complement.cols() != std::size_t(e.dim()))
        throw InternalAssertion("coboundaries are not contained in the cocycles");
    return e;
}

/// Ext space with the quotient dimension checked against the Crawley-Boevey count.
inline ExtSpace ext_space(const Field& f, const Quiver& q, const PiMod& x1, const PiMod& x2) {
    ExtSpace e = cocycle_quotient(f, q, x1, x2);
    int cb = ext1_pi_dim_cb(f, q, x1, x2);
    if (e.dim() != cb)
        throw InternalAssertion("Ext^1 routes disagree: Z/B gives " + std::to_string(e.dim()) +
                                ", Crawley-Boevey gives " + std::to_string(cb));
    return e;
}

inline bool is_cocycle(const Field& f, const Quiver& q, const PiMod& x1, const PiMod& x2,
                       const std::vector<Mat>& cls) {
    auto z = cocycle_system(f, q, x1, x2);
    auto v = z.domain().flatten(cls);
    return mul(f, z.matrix(), Mat::from_columns(v.size(), {v})).is_zero();
}

/// Random class: an F_p combination of the complement of B in Z.
inline std::vector<Mat> random_ext_class(const ExtSpace& e, FieldCtx& ctx) {
    const Field& f = ctx.field();
    std::vector<elem_t> v(e.layout.total(), 0);
    for (std::size_t j = 0; j < e.complement.cols(); ++j) {
        elem_t c = ctx.random_element();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(c, e.complement(i, j)));
    }
    return e.layout.unflatten(v);
}

/// The extension of x1 by x2 with class `cls`: on V1 + V2 each map is
/// [[X1_a, 0], [C_a, X2_a]], so x2 is the submodule and x1 the quotient.
inline PiMod build_extension(const Field& f, const Quiver& q, const PiMod& x1, const PiMod& x2,
                             const std::vector<Mat>& cls) {
    if (!is_cocycle(f, q, x1, x2, cls)) throw InvalidArgument("build_extension: class is not a cocycle");
    PiMod x{x1.dim + x2.dim, {}};
    for (std::size_t a = 0; a < double_arrow_count(q); ++a) {
        const Mat& m1 = x1.maps[a];
        const Mat& m2 = x2.maps[a];
        Mat m(m1.rows() + m2.rows(), m1.cols() + m2.cols());
        m.set_block(0, 0, m1);
        m.set_block(m1.rows(), 0, cls[a]);
        m.set_block(m1.rows(), m1.cols(), m2);
        x.maps.push_back(std::move(m));
    }
    return x;
}

/// Reverse maps Y_h making (X, Y) a Pi-module: kernel of
/// Y |-> (sum_{h''=i} X_h Y_h - sum_{h'=i} Y_h X_h)_i.
inline LinearMapBuilder conormal_system(const Field& f, const Quiver& q, const QRep& m) {
    check_rep(q, m);
    BlockLayout in;
    for (const auto& a : q.arrows()) in.add(std::size_t(m.dim[a.source]), std::size_t(m.dim[a.target]));
    LinearMapBuilder b(f, in, vertex_layout(m.dim, m.dim));
    for (std::size_t h = 0; h < q.arrow_count(); ++h) {
        const auto& a = q.arrow(h);
        b.add_left(a.target, h, m.maps[h]);
        b.add_right(a.source, h, m.maps[h], f.neg(1));
    }
    return b;
}

inline int conormal_fiber_dim(const Field& f, const Quiver& q, const QRep& m) {
    auto sys = conormal_system(f, q, m);
    return static_cast<int>(sys.domain().total() - rank(f, sys.matrix()));
}

/// A generic Pi-module over the given forward part.
inline PiMod sample_over(const Quiver& q, const QRep& forward, FieldCtx& ctx) {
    const Field& f = ctx.field();
    auto sys = conormal_system(f, q, forward);
    Mat k = kernel_basis(f, sys.matrix());
    std::vector<elem_t> v(k.rows(), 0);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        elem_t c = ctx.random_element();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(c, k(i, j)));
    }
    return make_pimod(q, forward, sys.domain().unflatten(v));
}

/// A point of cn_Q(m): forward part M_Q(m), reverse part a random point of the fiber.
inline PiMod sample_conormal(const RepCatalog& cat, const RootMultiset& m, FieldCtx& ctx) {
    return sample_over(cat.quiver(), cat.rep_of_multiset(m, ctx), ctx);
}

/// x is rigid iff dim End_Pi(x) = dim G_V - dim R_Q(V).
inline bool is_rigid_module(const Field& f, const Quiver& q, const PiMod& x) {
    if (!check_pi(f, q, x)) throw InvalidArgument("is_rigid_module: not a Pi-module");
    if (!is_dynkin(q) && !check_nilpotent(f, q, x)) throw InvalidArgument("is_rigid_module: module is not nilpotent");
    return hom_pi_dim(f, q, x, x) == group_dim(x.dim) - rep_space_dim(q, x.dim);
}

struct RigidityVerdict {
    bool rigid = false;
    int trials = 0;
    int agreement = 0; // trials whose sample supports the verdict
};

/// A component is rigid iff it contains a rigid module; the rigid locus is
/// open, so one rigid sample settles it.
inline RigidityVerdict is_rigid_component(const RepCatalog& cat, const RootMultiset& m, const TrialConfig& cfg) {
    RigidityVerdict v;
    v.trials = cfg.trials;
    int rigid = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        FieldCtx ctx = cfg.context(cat.field(), std::uint64_t(t), 0x71D);
        if (is_rigid_module(cat.field(), cat.quiver(), sample_conormal(cat, m, ctx))) ++rigid;
    }
    v.rigid = rigid > 0;
    v.agreement = v.rigid ? rigid : cfg.trials;
    return v;
}

/// x*: X*_a = (X_{a^op})^T.
inline PiMod dual_pimod(const Quiver& q, const PiMod& x) {
    check_shapes(q, x);
    PiMod d{x.dim, {}};
    for (std::size_t a = 0; a < x.maps.size(); ++a) d.maps.push_back(x.maps[opposite_arrow(q, a)].transpose());
    return d;
}

/// dim of Ext^1_Pi(x1,x2) modulo the image of the differential of the orbit
/// map (f,g) |-> g C - C f of Aut(x1) x Aut(x2). Requires Hom_Pi(x2,x1) = 0.
inline int orbitmap_coker_dim(const Field& f, const Quiver& q, const PiMod& x1, const PiMod& x2,
                              const std::vector<Mat>& cls) {
    if (hom_pi_dim(f, q, x2, x1) != 0) throw InvalidArgument("orbitmap_coker_dim: Hom_Pi(x2,x1) is nonzero");
    if (!is_cocycle(f, q, x1, x2, cls)) throw InvalidArgument("orbitmap_coker_dim: class is not a cocycle");
    ExtSpace e = cocycle_quotient(f, q, x1, x2);
    std::vector<std::vector<elem_t>> image;
    for (const auto& fe : hom_pi_space(f, q, x1, x1)) {
        std::vector<Mat> v;
        for (std::size_t a = 0; a < cls.size(); ++a)
            v.push_back(negate(f, mul(f, cls[a], fe.blocks[double_arrow(q, a).source])));
        image.push_back(e.layout.flatten(v));
    }
    for (const auto& ge : hom_pi_space(f, q, x2, x2)) {
        std::vector<Mat> v;
        for (std::size_t a = 0; a < cls.size(); ++a)
            v.push_back(mul(f, ge.blocks[double_arrow(q, a).target], cls[a]));
        image.push_back(e.layout.flatten(v));
    }
    Mat span = hcat(e.coboundaries, Mat::from_columns(e.layout.total(), image));
    return static_cast<int>(e.cocycles.cols() - rank(f, span));
}

/// Restriction of x to the graded kernel of a surjective morphism phi : x -> y.
inline PiMod kernel_of_surjection(const Field& f, const Quiver& q, const PiMod& x, const PiMod& y,
                                  const GradedMap& phi) {
    if (!is_pi_morphism(f, q, x, y, phi)) throw InvalidArgument("kernel_of_surjection: not a Pi-morphism");
    std::vector<Mat> kernels;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        if (rank(f, phi.blocks[i]) != std::size_t(y.dim[i]))
            throw InvalidArgument("kernel_of_surjection: morphism is not surjective");
        kernels.push_back(kernel_basis(f, phi.blocks[i]));
    }
    PiMod k{q.zero_dim(), {}};
    for (std::size_t i = 0; i < q.vertex_count(); ++i) k.dim[i] = static_cast<int>(kernels[i].cols());
    for (std::size_t a = 0; a < x.maps.size(); ++a) {
        auto ar = double_arrow(q, a);
        k.maps.push_back(solve_unique(f, kernels[ar.target], mul(f, x.maps[a], kernels[ar.source])));
    }
    return k;
}

} // namespace pistar
