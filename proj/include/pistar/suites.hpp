#pragma once

// Named invariant suites. Each returns pass/fail with a one-line detail; the
// first counterexample is reported on failure.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pistar/coxeter.hpp"
#include "pistar/errors.hpp"
#include "pistar/pimod.hpp"
#include "pistar/qrep.hpp"
#include "pistar/quiver.hpp"
#include "pistar/starops.hpp"
#include "pistar/taudata.hpp"

namespace pistar {

struct SuiteOptions {
    elem_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
    int trials = 7;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace suites {

namespace detail {

inline ComponentCalculus calculus(const std::string& quiver, const SuiteOptions& o) {
    return ComponentCalculus(Quiver::builtin(quiver), Field(o.prime), TrialConfig{o.seed, o.trials});
}

inline SuiteResult ok(std::string name, std::string detail) { return {std::move(name), true, std::move(detail)}; }
inline SuiteResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

/// Every d in the box [0, bound] componentwise, in odometer order.
inline std::vector<DimVector> box(const DimVector& bound) {
    std::vector<DimVector> out;
    DimVector d(bound.size());
    while (true) {
        out.push_back(d);
        std::size_t k = 0;
        while (k < d.size() && d[k] == bound[k]) d[k++] = 0;
        if (k == d.size()) return out;
        ++d[k];
    }
}

/// Positive roots by a bounded search on the Tits form, written without the
/// library's root machinery.
inline std::vector<std::vector<int>> tits_roots(const Quiver& q, int max_coord) {
    std::vector<std::vector<int>> roots;
    const std::size_t n = q.vertex_count();
    std::vector<int> d(n, 0);
    while (true) {
        long s = 0;
        for (int x : d) s += long(x) * x;
        for (const auto& a : q.arrows()) s -= long(d[a.source]) * d[a.target];
        bool nonzero = false;
        for (int x : d) nonzero |= x != 0;
        if (nonzero && s == 1) roots.push_back(d);
        std::size_t k = 0;
        while (k < n && d[k] == max_coord) d[k++] = 0;
        if (k == n) return roots;
        ++d[k];
    }
}

/// Number of multisets of `roots` summing to each vector of the box, by the
/// coin-change recurrence.
inline std::map<std::vector<int>, long> kostant_counts(const std::vector<std::vector<int>>& roots, const std::vector<int>& bound) {
    std::vector<DimVector> cells = box(DimVector(bound));
    std::map<std::vector<int>, long> ways;
    for (const auto& c : cells) ways[c.values()] = 0;
    ways[std::vector<int>(bound.size(), 0)] = 1;
    for (const auto& r : roots)
        for (const auto& c : cells) {
            std::vector<int> prev = c.values();
            bool inside = true;
            for (std::size_t i = 0; i < prev.size(); ++i) inside &= (prev[i] -= r[i]) >= 0;
            if (inside) ways[c.values()] += ways[prev];
        }
    return ways;
}

} // namespace detail

// Worked A2 products: S(1)*S(2) and S(2)*S(1).
inline SuiteResult a2_table(const SuiteOptions& o) {
    const std::string name = "a2-table";
    auto start = std::chrono::steady_clock::now();
    auto c = detail::calculus("A2", o);
    StarResult r12 = c.star(c.simple(0), c.simple(1));
    StarResult r21 = c.star(c.simple(1), c.simple(0));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int need = (5 * o.trials + 6) / 7;
    std::ostringstream os;
    os << "S1*S2=" << c.name(r12.result) << " (" << r12.agreement << "/" << r12.trials << "), S2*S1="
       << c.name(r21.result) << " (" << r21.agreement << "/" << r21.trials << "), " << secs << " s";
    bool pass = r12.result == c.parse("[1,1]") && r21.result == c.parse("[1,0]+[0,1]") && r12.agreement >= need &&
                r21.agreement >= need && secs < 1.0;
    return {name, pass, os.str()};
}

inline SuiteResult associativity(const SuiteOptions& o) {
    const std::string name = "associativity";
    auto c = detail::calculus("A2", o);
    AssocRecord r = c.associativity_probe(c.simple(0), c.simple(1), c.simple(0));
    std::string detail = "left=" + c.name(r.left) + " right=" + c.name(r.right) + " equal=" + (r.equal ? "true" : "false");
    bool pass = r.left == c.parse("[1,1]+[1,0]") && r.right == c.parse("[1,0]^2+[0,1]") && !r.equal;
    return {name, pass, detail};
}

/// hom(x,y) - dim Z/B (x,y) + hom(y,x) = (dim x, dim y) on sampled pairs.
inline SuiteResult cb_identity(const SuiteOptions& o) {
    const std::string name = "cb-identity";
    std::mt19937_64 rng(o.seed ^ 0xCB1D);
    int checked = 0;
    for (const auto& [qname, bound] : std::vector<std::pair<std::string, DimVector>>{{"A2", {2, 2}}, {"A3", {2, 1, 1}}}) {
        auto c = detail::calculus(qname, o);
        const Quiver& q = c.quiver();
        const Field& f = c.field();
        auto pool = c.components_up_to(bound);
        auto pick = [&] { return pool[rng() % pool.size()]; };
        for (int k = 0; k < 50; ++k) {
            FieldCtx ctx = FieldCtx::derived(f, o.seed, 0xCB00 + std::uint64_t(checked));
            auto make = [&](bool extension) {
                if (!extension) return c.sample(pick(), ctx);
                PiMod x1 = c.sample(pick(), ctx), x2 = c.sample(pick(), ctx);
                return build_extension(f, q, x1, x2, random_ext_class(cocycle_quotient(f, q, x1, x2), ctx));
            };
            PiMod x = make(k % 2 == 1), y = make(k % 3 == 2);
            int lhs = hom_pi_dim(f, q, x, y) - cocycle_quotient(f, q, x, y).dim() + hom_pi_dim(f, q, y, x);
            int rhs = sym_form(q, x.dim, y.dim);
            ++checked;
            if (lhs != rhs)
                return detail::fail(name, qname + ": dims " + x.dim.to_string() + ", " + y.dim.to_string() + " give " +
                                              std::to_string(lhs) + " != " + std::to_string(rhs));
        }
    }
    return detail::ok(name, std::to_string(checked) + " pairs, 0 failures");
}

/// Generic Ext^1_Pi through conormal samples and through random tau-data.
inline SuiteResult route_agreement(const SuiteOptions& o) {
    const std::string name = "route-agreement";
    int checked = 0;
    for (const auto& [qname, bound] : std::vector<std::pair<std::string, DimVector>>{{"A2", {2, 2}}, {"A3", {1, 1, 1}}}) {
        auto c = detail::calculus(qname, o);
        auto pool = c.components_up_to(bound);
        for (const auto& m : pool)
            for (const auto& n : pool) {
                int a = c.generic_ext1(m, n), b = c.generic_ext1_via_tau(m, n);
                ++checked;
                if (a != b)
                    return detail::fail(name, qname + " (" + c.name(m) + ", " + c.name(n) + "): Pi-module route " +
                                                  std::to_string(a) + ", tau route " + std::to_string(b));
            }
    }
    return detail::ok(name, std::to_string(checked) + " ordered pairs agree");
}

/// dim Ext^1_Q(M,N) = dim Hom_Q(N, tau M) over all pairs of indecomposables.
inline SuiteResult ar_formula(const SuiteOptions& o) {
    const std::string name = "ar-formula";
    int checked = 0;
    for (std::string qname : {"A2", "A3"}) {
        Quiver q = Quiver::builtin(qname);
        Field f(o.prime);
        RepCatalog cat(q, f, o.seed);
        for (std::size_t a = 0; a < cat.root_count(); ++a) {
            TauImage tm = tau(f, q, cat.indecomposable(a));
            for (std::size_t b = 0; b < cat.root_count(); ++b) {
                int lhs = ext1_q_dim(f, q, cat.indecomposable(a), cat.indecomposable(b));
                int rhs = hom_q_dim(f, q, cat.indecomposable(b), tm.object);
                ++checked;
                if (lhs != rhs)
                    return detail::fail(name, qname + " " + cat.roots().root(a).to_string() + ", " +
                                                  cat.roots().root(b).to_string() + ": " + std::to_string(lhs) +
                                                  " != " + std::to_string(rhs));
            }
        }
    }
    return detail::ok(name, std::to_string(checked) + " pairs");
}

/// dim orbit(M_Q(m)) + dim Hom_Q(M_Q(m), tau M_Q(m)) = dim R_Q(V).
inline SuiteResult purity(const SuiteOptions& o) {
    const std::string name = "purity";
    auto c = detail::calculus("A3", o);
    const Quiver& q = c.quiver();
    const Field& f = c.field();
    int checked = 0;
    for (const auto& d : detail::box(DimVector{6, 6, 6})) {
        if (d.total() > 6) continue;
        for (const auto& m : c.enumerate_components(d)) {
            QRep rep = c.catalog().rep_of_multiset(m);
            int orbit = group_dim(d) - hom_q_dim(f, q, rep, rep);
            int fiber = hom_q_dim(f, q, rep, tau(f, q, rep).object);
            ++checked;
            if (orbit + fiber != rep_space_dim(q, d))
                return detail::fail(name, c.name(m) + ": " + std::to_string(orbit) + " + " + std::to_string(fiber) +
                                              " != " + std::to_string(rep_space_dim(q, d)));
        }
    }
    return detail::ok(name, std::to_string(checked) + " components of total dimension <= 6");
}

/// Every prm(beta) and every component on simple roots only is rigid.
inline SuiteResult rigidity(const SuiteOptions& o) {
    const std::string name = "rigidity";
    auto c = detail::calculus("A3", o);
    const int need = (5 * o.trials + 6) / 7;
    std::vector<RootMultiset> cases;
    for (std::size_t id = 0; id < c.roots().size(); ++id) cases.push_back(RootMultiset::single(c.roots().size(), id));
    for (const auto& d : detail::box(DimVector{2, 2, 2})) {
        if (d.is_zero()) continue;
        RootMultiset m = c.empty();
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i]) m.add(c.roots().simple_root_id(i), d[i]);
        cases.push_back(m);
    }
    int min_agree = o.trials;
    for (const auto& m : cases) {
        RigidityVerdict v = c.rigid(m);
        min_agree = std::min(min_agree, v.agreement);
        if (!v.rigid || v.agreement < need)
            return detail::fail(name, c.name(m) + ": rigid=" + (v.rigid ? "true" : "false") + " agreement " +
                                          std::to_string(v.agreement) + "/" + std::to_string(v.trials));
    }
    return detail::ok(name, std::to_string(cases.size()) + " components rigid, minimum agreement " +
                                std::to_string(min_agree) + "/" + std::to_string(o.trials));
}

/// (m * n)* = n* * m*.
inline SuiteResult duality(const SuiteOptions& o) {
    const std::string name = "duality";
    auto c = detail::calculus("A2", o);
    auto pool = c.components_up_to(DimVector{2, 2});
    int checked = 0;
    for (const auto& m : pool)
        for (const auto& n : pool) {
            RootMultiset lhs = c.dual(c.star(m, n).result).result;
            RootMultiset rhs = c.star(c.dual(n).result, c.dual(m).result).result;
            ++checked;
            if (lhs != rhs)
                return detail::fail(name, "(" + c.name(m) + ", " + c.name(n) + "): " + c.name(lhs) + " != " + c.name(rhs));
        }
    return detail::ok(name, std::to_string(checked) + " pairs");
}

/// n |-> S(1) * n injective, and e_1 f_1 = id, over grdim n <= (1,1,1).
inline SuiteResult cancellation(const SuiteOptions& o) {
    const std::string name = "cancellation";
    auto c = detail::calculus("A3", o);
    auto pool = c.components_up_to(DimVector{1, 1, 1}, true);
    CancellationReport r = c.cancellation_probe(c.simple(0), pool);
    if (!r.injective) return detail::fail(name, "n -> [1,0,0] * n is not injective");
    for (const auto& m : pool) {
        CrystalEResult e = c.crystal_e(0, c.crystal_f(0, m).result);
        if (!e.result || *e.result != m)
            return detail::fail(name, "e1 f1 " + c.name(m) + " = " + (e.result ? c.name(*e.result) : "none"));
    }
    return detail::ok(name, std::to_string(pool.size()) + " components, injective, e1 f1 = id");
}

/// Where one side is rigid, weak and strong commutativity coincide.
inline SuiteResult commutativity(const SuiteOptions& o) {
    const std::string name = "commutativity";
    auto c = detail::calculus("A2", o);
    auto pool = c.components_up_to(DimVector{2, 2});
    std::map<RootMultiset, bool> rigid;
    for (const auto& m : pool) rigid[m] = c.rigid(m).rigid;
    int checked = 0, commuting = 0;
    for (const auto& m : pool)
        for (const auto& n : pool) {
            if (!rigid[m] && !rigid[n]) continue;
            bool weak = c.weakly_commute(m, n), strong = c.strongly_commute(m, n);
            ++checked;
            commuting += strong;
            if (weak != strong)
                return detail::fail(name, "(" + c.name(m) + ", " + c.name(n) + "): weak=" + (weak ? "true" : "false") +
                                              " strong=" + (strong ? "true" : "false"));
        }
    return detail::ok(name, std::to_string(checked) + " pairs, " + std::to_string(commuting) + " commuting");
}

/// ext(x,x) = ext(x1,x1) + ext(x2,x2) + 2 coker(d omega) when Hom_Pi(x2,x1) = 0.
inline SuiteResult orbit_map(const SuiteOptions& o) {
    const std::string name = "orbit-map";
    auto c = detail::calculus("A3", o);
    const Quiver& q = c.quiver();
    const Field& f = c.field();
    auto pool = c.components_up_to(DimVector{2, 1, 1});
    std::mt19937_64 rng(o.seed ^ 0x0B17);
    int found = 0, nonzero_coker = 0;
    for (std::uint64_t attempt = 0; found < 30; ++attempt) {
        if (attempt > 3000) return detail::fail(name, "only " + std::to_string(found) + " triples with Hom(x2,x1)=0");
        FieldCtx ctx = FieldCtx::derived(f, o.seed, 0x0B00 + attempt);
        PiMod x1 = c.sample(pool[rng() % pool.size()], ctx);
        PiMod x2 = c.sample(pool[rng() % pool.size()], ctx);
        if (hom_pi_dim(f, q, x2, x1) != 0) continue;
        ExtSpace e = cocycle_quotient(f, q, x1, x2);
        if (e.dim() == 0) continue;
        // every third triple uses the split class
        auto cls = found % 3 == 2 ? e.layout.unflatten(std::vector<elem_t>(e.layout.total(), 0)) : random_ext_class(e, ctx);
        PiMod x = build_extension(f, q, x1, x2, cls);
        int coker = orbitmap_coker_dim(f, q, x1, x2, cls);
        int lhs = ext1_pi_dim_cb(f, q, x, x);
        int rhs = ext1_pi_dim_cb(f, q, x1, x1) + ext1_pi_dim_cb(f, q, x2, x2) + 2 * coker;
        ++found;
        nonzero_coker += coker > 0;
        if (lhs != rhs)
            return detail::fail(name, "dims " + x1.dim.to_string() + ", " + x2.dim.to_string() + ": " +
                                          std::to_string(lhs) + " != " + std::to_string(rhs));
    }
    return detail::ok(name, "30 triples, " + std::to_string(nonzero_coker) + " with nonzero cokernel");
}

/// |Irrcomp(d)| against an independent coin-change count, d <= (2,2,2).
inline SuiteResult census(const SuiteOptions& o) {
    const std::string name = "census";
    auto c = detail::calculus("A3", o);
    auto counts = detail::kostant_counts(detail::tits_roots(c.quiver(), 2), {2, 2, 2});
    for (const auto& d : detail::box(DimVector{2, 2, 2})) {
        long got = static_cast<long>(c.enumerate_components(d).size());
        if (got != counts[d.values()])
            return detail::fail(name, d.to_string() + ": " + std::to_string(got) + " != " + std::to_string(counts[d.values()]));
    }
    return detail::ok(name, "27 dimension vectors, |Irrcomp(1,1,1)| = " +
                                std::to_string(c.enumerate_components(DimVector{1, 1, 1}).size()));
}

// ---- extra suites ----

inline SuiteResult root_counts(const SuiteOptions&) {
    const std::string name = "roots";
    const std::vector<std::pair<std::string, std::size_t>> expect{{"A2", 3}, {"A3", 6}, {"A4", 10}, {"D4", 12}, {"D5", 20}, {"E6", 36}};
    for (const auto& [qname, n] : expect) {
        Quiver q = Quiver::builtin(qname);
        auto got = positive_roots(q);
        auto oracle = detail::tits_roots(q, qname[0] == 'E' ? 3 : 2);
        if (got.size() != n || oracle.size() != n)
            return detail::fail(name, qname + ": " + std::to_string(got.size()) + " roots, bounded search " +
                                          std::to_string(oracle.size()) + ", expected " + std::to_string(n));
        for (const auto& r : oracle)
            if (!got.find(DimVector(r))) return detail::fail(name, qname + ": missing root " + DimVector(r).to_string());
    }
    return detail::ok(name, "A2 A3 A4 D4 D5 E6 root systems match the bounded search");
}

inline SuiteResult decompose_roundtrip(const SuiteOptions& o) {
    const std::string name = "decompose";
    int checked = 0;
    for (const auto& [qname, bound] : std::vector<std::pair<std::string, DimVector>>{{"A2", {4, 4}}, {"A3", {3, 3, 2}}, {"D4", {1, 1, 1, 2}}}) {
        auto c = detail::calculus(qname, o);
        for (const auto& d : detail::box(bound)) {
            if (d.total() > 8) continue;
            for (const auto& m : c.enumerate_components(d)) {
                FieldCtx ctx = FieldCtx::derived(c.field(), o.seed, 0xDEC0 + std::uint64_t(checked++));
                RootMultiset back = c.catalog().decompose(c.catalog().rep_of_multiset(m, ctx));
                if (back != m) return detail::fail(name, qname + ": " + c.name(m) + " came back as " + c.name(back));
            }
        }
    }
    return detail::ok(name, std::to_string(checked) + " multisets round-trip");
}

inline SuiteResult tau_functor(const SuiteOptions& o) {
    const std::string name = "tau-functor";
    Quiver q = Quiver::builtin("A3");
    Field f(o.prime);
    RepCatalog cat(q, f, o.seed);
    FieldCtx ctx = FieldCtx::derived(f, o.seed, 0x7AF0);
    std::mt19937_64 rng(o.seed ^ 0x7AF0);
    const std::size_t n = cat.root_count();
    int checked = 0;
    auto random_hom = [&](const QRep& a, const QRep& b) {
        GradedMap g = zero_map(a.dim, b.dim);
        for (const auto& h : hom_q_space(f, q, a, b)) g = combine(f, g, 1, h, ctx.random_element());
        return g;
    };
    for (int k = 0; k < 50; ++k) {
        RootMultiset ma = RootMultiset::single(n, rng() % n), mb = RootMultiset::single(n, rng() % n),
                     mc = RootMultiset::single(n, rng() % n);
        ma.add(rng() % n);
        QRep a = cat.rep_of_multiset(ma), b = cat.rep_of_multiset(mb + ma), cc = cat.rep_of_multiset(mc + mb);
        GradedMap g1 = random_hom(a, b), g2 = random_hom(b, cc);
        TauImage ta = tau(f, q, a), tb = tau(f, q, b), tc = tau(f, q, cc);
        GradedMap lhs = tau_morphism(f, q, ta, tc, compose(f, g2, g1));
        GradedMap rhs = compose(f, tau_morphism(f, q, tb, tc, g2), tau_morphism(f, q, ta, tb, g1));
        GradedMap id = tau_morphism(f, q, ta, ta, identity_map(a.dim));
        ++checked;
        if (!is_zero(combine(f, lhs, 1, rhs, f.neg(1)))) return detail::fail(name, "tau(g f) != tau(g) tau(f)");
        if (id.blocks != identity_map(ta.object.dim).blocks) return detail::fail(name, "tau(id) != id");
    }
    return detail::ok(name, std::to_string(checked) + " composable pairs");
}

inline SuiteResult crystal_reach(const SuiteOptions& o) {
    const std::string name = "crystal-reach";
    for (const auto& [qname, bound] : std::vector<std::pair<std::string, DimVector>>{{"A2", {4, 4}}, {"A3", {4, 4, 4}}}) {
        auto c = detail::calculus(qname, o);
        CrystalGraph g = c.crystal_graph(4);
        std::set<RootMultiset> reached(g.nodes.begin(), g.nodes.end());
        for (const auto& d : detail::box(bound)) {
            if (d.total() > 4) continue;
            for (const auto& m : c.enumerate_components(d))
                if (!reached.count(m)) return detail::fail(name, qname + ": " + c.name(m) + " not reached");
        }
    }
    return detail::ok(name, "every component of total dimension <= 4 reached from 0 in A2, A3");
}

/// star_criterion(m,n) iff m * n = m + n, and strong implies weak.
inline SuiteResult star_consistency(const SuiteOptions& o) {
    const std::string name = "star-criterion";
    int checked = 0;
    for (const auto& [qname, bound] : std::vector<std::pair<std::string, DimVector>>{{"A2", {2, 2}}, {"A3", {1, 1, 1}}}) {
        auto c = detail::calculus(qname, o);
        for (const auto& m : c.components_up_to(bound))
            for (const auto& n : c.components_up_to(bound)) {
                if ((c.grdim(m) + c.grdim(n)).total() > 4) continue;
                bool crit = star_criterion(c.catalog(), m, n, c.config());
                bool sum = c.star(m, n).result == m + n;
                ++checked;
                if (crit != sum)
                    return detail::fail(name, qname + " (" + c.name(m) + ", " + c.name(n) + "): criterion " +
                                                  (crit ? "true" : "false") + ", product " + c.name(c.star(m, n).result));
                if (c.strongly_commute(m, n) && !(sum && c.star(n, m).result == m + n))
                    return detail::fail(name, qname + " (" + c.name(m) + ", " + c.name(n) + "): strong but products differ from m+n");
            }
    }
    return detail::ok(name, std::to_string(checked) + " pairs");
}

/// If m * n is rigid and generic Hom_Pi(cn n, cn m) = 0, then m and n are rigid.
inline SuiteResult rigid_factors(const SuiteOptions& o) {
    const std::string name = "rigid-factors";
    auto c = detail::calculus("A3", o);
    auto pool = c.components_up_to(DimVector{1, 1, 1});
    int applicable = 0;
    for (const auto& m : pool)
        for (const auto& n : pool) {
            if (c.generic_hom(n, m) != 0 || !c.rigid(c.star(m, n).result).rigid) continue;
            ++applicable;
            if (!c.rigid(m).rigid || !c.rigid(n).rigid)
                return detail::fail(name, "(" + c.name(m) + ", " + c.name(n) + ") has a non-rigid factor");
        }
    return detail::ok(name, std::to_string(applicable) + " applicable pairs");
}

/// Splitting (M, theta) along M = M1 + M2 with Hom_Q(M2, tau M1) = 0.
inline SuiteResult tau_split(const SuiteOptions& o) {
    const std::string name = "tau-split";
    auto c = detail::calculus("A3", o);
    const Quiver& q = c.quiver();
    const Field& f = c.field();
    const auto& cat = c.catalog();
    int applicable = 0;
    for (std::size_t a = 0; a < cat.root_count(); ++a)
        for (std::size_t b = 0; b < cat.root_count(); ++b) {
            const QRep &m1 = cat.indecomposable(a), &m2 = cat.indecomposable(b);
            if (hom_q_dim(f, q, m2, tau(f, q, m1).object) != 0) continue;
            FieldCtx ctx = FieldCtx::derived(f, o.seed, 0x5B11 + a * 64 + b);
            TauMod x = random_tau_datum(q, direct_sum(m1, m2), ctx);
            TauSplit s = split_by_tau_vanishing(f, q, x, m1.dim);
            ++applicable;
            // with Hom_Q(M2, M1) = 0, rigidity of x passes to both pieces
            if (hom_q_dim(f, q, m2, m1) == 0 && is_rigid_taumod(f, q, x) &&
                !(is_rigid_taumod(f, q, s.x1) && is_rigid_taumod(f, q, s.x2)))
                return detail::fail(name, "rigid x with non-rigid pieces at " + cat.roots().root(a).to_string() + ", " +
                                              cat.roots().root(b).to_string());
        }
    return detail::ok(name, std::to_string(applicable) + " splittings verified");
}

struct NamedSuite {
    std::string name;
    int criterion; // 0 for extra suites
    std::function<SuiteResult(const SuiteOptions&)> run;
};

inline const std::vector<NamedSuite>& registry() {
    static const std::vector<NamedSuite> all{
        {"a2-table", 1, a2_table},
        {"associativity", 2, associativity},
        {"cb-identity", 3, cb_identity},
        {"route-agreement", 4, route_agreement},
        {"ar-formula", 5, ar_formula},
        {"purity", 6, purity},
        {"rigidity", 7, rigidity},
        {"duality", 8, duality},
        {"cancellation", 9, cancellation},
        {"commutativity", 10, commutativity},
        {"orbit-map", 11, orbit_map},
        {"census", 12, census},
        {"roots", 0, root_counts},
        {"decompose", 0, decompose_roundtrip},
        {"tau-functor", 0, tau_functor},
        {"crystal-reach", 0, crystal_reach},
        {"star-criterion", 0, star_consistency},
        {"rigid-factors", 0, rigid_factors},
        {"tau-split", 0, tau_split},
    };
    return all;
}

/// Runs a suite, turning engine errors into a failed result.
inline SuiteResult run(const NamedSuite& s, const SuiteOptions& o) {
    try {
        return s.run(o);
    } catch (const Error& e) {
        return {s.name, false, std::string("error: ") + e.what()};
    }
}

} // namespace suites
} // namespace pistar
