#pragma once

// BGP reflection functors, Coxeter functors and the Auslander-Reiten
// translation tau = eps o Phi+ on objects and morphisms.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pistar/exactalg.hpp"
#include "pistar/qrep.hpp"
#include "pistar/quiver.hpp"

namespace pistar {

/// Bookkeeping of one reflection at a sink: the new space at `vertex` is the
/// kernel of the sum map from the sources of the incoming arrows, embedded by
/// the columns of `inclusion`.
struct ReflectionStep {
    std::size_t vertex = 0;
    std::vector<std::size_t> arrows; // incoming arrows at the sink, in the order of the sum
    Mat inclusion;                   // (sum of dim M_{h'}) x (dim of new space)
};

struct Reflected {
    Quiver quiver;
    QRep rep;
    ReflectionStep step;
};

/// F+_i at a sink i.
inline Reflected reflect_plus(const Field& f, const Quiver& q, std::size_t i, const QRep& m) {
    check_rep(q, m);
    if (i >= q.vertex_count() || !q.is_sink(i)) throw InvalidArgument("reflect_plus: vertex is not a sink");
    ReflectionStep step;
    step.vertex = i;
    std::size_t total = 0;
    for (std::size_t h = 0; h < q.arrow_count(); ++h)
        if (q.arrow(h).target == i) {
            step.arrows.push_back(h);
            total += std::size_t(m.dim[q.arrow(h).source]);
        }
    Mat sum_map(std::size_t(m.dim[i]), total);
    std::size_t off = 0;
    for (auto h : step.arrows) {
        sum_map.set_block(0, off, m.maps[h]);
        off += m.maps[h].cols();
    }
    step.inclusion = kernel_basis(f, sum_map);

    Quiver q2 = q.reflected_at(i);
    QRep m2 = m;
    m2.dim[i] = static_cast<int>(step.inclusion.cols());
    off = 0;
    for (auto h : step.arrows) {
        std::size_t src_dim = std::size_t(m.dim[q.arrow(h).source]);
        m2.maps[h] = step.inclusion.block(off, 0, src_dim, step.inclusion.cols());
        off += src_dim;
    }
    return {std::move(q2), std::move(m2), std::move(step)};
}

/// F-_i at a source i: the new space at i is the cokernel of the stacked map
/// into the targets of the outgoing arrows.
inline Reflected reflect_minus(const Field& f, const Quiver& q, std::size_t i, const QRep& m) {
    check_rep(q, m);
    if (i >= q.vertex_count() || !q.is_source(i)) throw InvalidArgument("reflect_minus: vertex is not a source");
    ReflectionStep step;
    step.vertex = i;
    std::size_t total = 0;
    for (std::size_t h = 0; h < q.arrow_count(); ++h)
        if (q.arrow(h).source == i) {
            step.arrows.push_back(h);
            total += std::size_t(m.dim[q.arrow(h).target]);
        }
    Mat stacked(total, std::size_t(m.dim[i]));
    std::size_t off = 0;
    for (auto h : step.arrows) {
        stacked.set_block(off, 0, m.maps[h]);
        off += m.maps[h].rows();
    }
    // rows of `quotient` span the left kernel of `stacked`
    Mat quotient = kernel_basis(f, stacked.transpose()).transpose();
    step.inclusion = quotient.transpose();

    Quiver q2 = q.reflected_at(i);
    QRep m2 = m;
    m2.dim[i] = static_cast<int>(quotient.rows());
    off = 0;
    for (auto h : step.arrows) {
        std::size_t tgt_dim = std::size_t(m.dim[q.arrow(h).target]);
        m2.maps[h] = quotient.block(0, off, quotient.rows(), tgt_dim);
        off += tgt_dim;
    }
    return {std::move(q2), std::move(m2), std::move(step)};
}

/// Sinks extracted one at a time, smallest index first, each a sink of the
/// quiver reflected at all earlier ones.
inline std::vector<std::size_t> admissible_sink_order(const Quiver& q) {
    if (q.has_cycle()) throw UnsupportedQuiver("Coxeter functor needs a quiver without oriented cycles");
    std::vector<std::size_t> order;
    std::vector<bool> used(q.vertex_count(), false);
    Quiver cur = q;
    for (std::size_t k = 0; k < q.vertex_count(); ++k) {
        std::size_t pick = q.vertex_count();
        for (std::size_t i = 0; i < q.vertex_count(); ++i)
            if (!used[i] && cur.is_sink(i)) {
                pick = i;
                break;
            }
        if (pick == q.vertex_count()) throw InternalAssertion("no admissible sink found");
        used[pick] = true;
        order.push_back(pick);
        cur = cur.reflected_at(pick);
    }
    return order;
}

inline std::vector<std::size_t> admissible_source_order(const Quiver& q) {
    return admissible_sink_order(q.opposite());
}

/// tau M together with the kernel inclusions needed to push morphisms through.
struct TauImage {
    QRep source;                     // M
    QRep object;                     // tau M, a representation of Q
    std::vector<ReflectionStep> steps;
};

inline TauImage tau(const Field& f, const Quiver& q, const QRep& m) {
    TauImage img{m, m, {}};
    Quiver cur = q;
    for (auto i : admissible_sink_order(q)) {
        Reflected r = reflect_plus(f, cur, i, img.object);
        cur = std::move(r.quiver);
        img.object = std::move(r.rep);
        img.steps.push_back(std::move(r.step));
    }
    for (auto& a : img.object.maps) a = negate(f, a); // eps
    return img;
}

/// tau(g) : tau M -> tau N for g : M -> N. Both images must come from `tau`
/// on the same quiver. Sign twist acts trivially on morphisms.
inline GradedMap tau_morphism(const Field& f, const Quiver& q, const TauImage& src, const TauImage& dst,
                              const GradedMap& g) {
    if (src.steps.size() != dst.steps.size()) throw InvalidArgument("tau_morphism: images of different quivers");
    GradedMap cur = g;
    for (std::size_t s = 0; s < src.steps.size(); ++s) {
        const auto& sm = src.steps[s];
        const auto& sn = dst.steps[s];
        std::vector<Mat> parts;
        for (auto h : sm.arrows) {
            // at step s every incoming arrow of the sink points into it; h' is the other endpoint
            const auto& a = q.arrow(h);
            std::size_t other = a.source == sm.vertex ? a.target : a.source;
            parts.push_back(cur.blocks[other]);
        }
        Mat pushed = mul(f, block_diagonal(parts), sm.inclusion);
        cur.blocks[sm.vertex] = solve_unique(f, sn.inclusion, pushed);
    }
    return cur;
}

/// tau^- M = Phi^- (eps M).
inline QRep tau_minus(const Field& f, const Quiver& q, const QRep& m) {
    check_rep(q, m);
    if (q.has_cycle()) throw UnsupportedQuiver("tau^- needs a quiver without oriented cycles");
    QRep cur = m;
    for (auto& a : cur.maps) a = negate(f, a);
    Quiver cq = q;
    for (auto i : admissible_source_order(q)) {
        Reflected r = reflect_minus(f, cq, i, cur);
        cq = std::move(r.quiver);
        cur = std::move(r.rep);
    }
    return cur;
}

/// KQ e_i: paths starting at i, arrows acting by left composition.
inline QRep path_projective(const Quiver& q, std::size_t i) {
    if (q.has_cycle()) throw UnsupportedQuiver("path projective of a cyclic quiver is infinite-dimensional");
    // paths from i as (end vertex, arrow sequence)
    std::vector<std::vector<std::size_t>> paths{{}};
    std::vector<std::size_t> ends{i};
    for (std::size_t k = 0; k < paths.size(); ++k)
        for (std::size_t h = 0; h < q.arrow_count(); ++h)
            if (q.arrow(h).source == ends[k]) {
                auto p = paths[k];
                p.push_back(h);
                paths.push_back(std::move(p));
                ends.push_back(q.arrow(h).target);
            }
    DimVector d = q.zero_dim();
    std::vector<std::size_t> pos(paths.size());
    for (std::size_t k = 0; k < paths.size(); ++k) pos[k] = std::size_t(d[ends[k]]++);
    QRep m = zero_rep(q, d);
    for (std::size_t k = 0; k < paths.size(); ++k)
        for (std::size_t j = 0; j < paths.size(); ++j) {
            if (paths[j].size() != paths[k].size() + 1) continue;
            if (!std::equal(paths[k].begin(), paths[k].end(), paths[j].begin())) continue;
            m.maps[paths[j].back()](pos[j], pos[k]) = 1;
        }
    return m;
}

/// Underlying Q-representation of the indecomposable projective Pi-module
/// P(i) = sum_{m >= 0} (tau^-)^m (KQ e_i).
inline QRep projective_pi_module(const Field& f, const Quiver& q, std::size_t i) {
    if (!is_dynkin(q)) throw UnsupportedQuiver("projective Pi-module is infinite outside Dynkin type");
    QRep term = path_projective(q, i);
    QRep total = term;
    // the number of indecomposables bounds the length of any tau^- orbit
    const std::size_t bound = positive_roots(q).size() + 1;
    for (std::size_t k = 0; k < bound; ++k) {
        term = tau_minus(f, q, term);
        if (term.dim.is_zero()) return total;
        total = direct_sum(total, term);
    }
    throw InternalAssertion("tau^- orbit of a projective did not terminate");
}

/// Dimension-vector action of the Coxeter element (product of simple
/// reflections in the admissible sink order).
inline DimVector coxeter_transform(const Quiver& q, DimVector d) {
    Quiver cur = q;
    for (auto i : admissible_sink_order(q)) {
        int s = 0;
        for (const auto& a : cur.arrows())
            if (a.target == i) s += d[a.source];
        d[i] = s - d[i];
        cur = cur.reflected_at(i);
    }
    return d;
}

} // namespace pistar
