#pragma once

// The component calculus in Dynkin type: components are named by root
// multisets, and every operation samples generic points of conormal strata.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pistar/errors.hpp"
#include "pistar/exactalg.hpp"
#include "pistar/notation.hpp"
#include "pistar/pimod.hpp"
#include "pistar/qrep.hpp"
#include "pistar/quiver.hpp"
#include "pistar/taudata.hpp"

namespace pistar {

/// Result of an operation decided by vote over trials.
struct Voted {
    RootMultiset result;
    int trials = 0;
    int agreement = 0;
};

struct StarResult {
    RootMultiset result;
    int trials = 0;
    int agreement = 0;
    int min_ext1 = 0;
};

struct CrystalEResult {
    std::optional<RootMultiset> result; // empty: not in the image of f_i
    int trials = 0;
    int agreement = 0;
    int min_hom = 0; // generic dim Hom_Pi(x, S(i))
};

struct AssocRecord {
    RootMultiset left;  // (m * n) * k
    RootMultiset right; // m * (n * k)
    bool equal = false;
};

struct CancellationReport {
    bool injective = true;
    std::vector<std::pair<RootMultiset, RootMultiset>> images; // (n, m * n)
};

struct CrystalEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t vertex = 0;
};

struct CrystalGraph {
    std::vector<RootMultiset> nodes; // BFS order, nodes[0] is the empty multiset
    std::vector<int> depth;
    std::vector<CrystalEdge> edges;
};

struct ExtTable {
    std::vector<RootMultiset> components;
    std::vector<std::vector<int>> ext1; // generic dim Ext^1_Pi(row, column)
};

enum class Side { left, right };

class ComponentCalculus {
public:
    ComponentCalculus(Quiver q, Field f = Field{}, TrialConfig cfg = {})
        : cat_(check_dynkin(std::move(q)), f, cfg.seed), cfg_(cfg) {
        if (cfg_.trials < 1) throw InvalidArgument("trials must be at least 1");
    }

    const RepCatalog& catalog() const noexcept { return cat_; }
    const Quiver& quiver() const noexcept { return cat_.quiver(); }
    const Field& field() const noexcept { return cat_.field(); }
    const RootSystem& roots() const noexcept { return cat_.roots(); }
    const TrialConfig& config() const noexcept { return cfg_; }

    std::string name(const RootMultiset& m) const { return format_multiset(m, roots()); }
    RootMultiset parse(std::string_view s) const { return parse_multiset(s, roots()); }
    RootMultiset empty() const { return cat_.empty_multiset(); }
    RootMultiset simple(std::size_t i) const { return cat_.simple(i); }
    DimVector grdim(const RootMultiset& m) const { return cat_.grdim(m); }

    /// Irrcomp(d) as Kostant partitions of d, canonically ordered.
    std::vector<RootMultiset> enumerate_components(const DimVector& d) const {
        quiver().check_dim(d);
        return kostant_partitions(roots(), d);
    }

    /// All components with 0 != grdim <= bound componentwise (zero included on request).
    std::vector<RootMultiset> components_up_to(const DimVector& bound, bool include_zero = false) const {
        quiver().check_dim(bound);
        std::vector<RootMultiset> out;
        DimVector d = quiver().zero_dim();
        while (true) {
            if (include_zero || !d.is_zero())
                for (auto& m : enumerate_components(d)) out.push_back(std::move(m));
            std::size_t k = 0;
            while (k < d.size() && d[k] == bound[k]) d[k++] = 0;
            if (k == d.size()) break;
            ++d[k];
        }
        return out;
    }

    RootMultiset oplus(const RootMultiset& m, const RootMultiset& n) const {
        cat_.check_multiset(m);
        cat_.check_multiset(n);
        return m + n;
    }

    PiMod sample(const RootMultiset& m, FieldCtx& ctx) const { return sample_conormal(cat_, m, ctx); }

    /// m * n: generic extensions 0 -> x2 -> x -> x1 -> 0 with x1 in cn(m),
    /// x2 in cn(n), over the trials that minimize dim Ext^1(x1, x2).
    StarResult star(const RootMultiset& m, const RootMultiset& n) const {
        auto key = std::make_pair(m, n);
        if (auto it = star_cache_.find(key); it != star_cache_.end()) return it->second;
        cat_.check_multiset(m);
        cat_.check_multiset(n);
        std::vector<int> ext(std::size_t(cfg_.trials));
        std::vector<RootMultiset> found;
        for (int t = 0; t < cfg_.trials; ++t) {
            FieldCtx ctx = cfg_.context(field(), std::uint64_t(t), kStarSalt);
            PiMod x1 = sample(m, ctx);
            PiMod x2 = sample(n, ctx);
            ExtSpace e = ext_space(field(), quiver(), x1, x2);
            PiMod x = build_extension(field(), quiver(), x1, x2, random_ext_class(e, ctx));
            ext[std::size_t(t)] = e.dim();
            found.push_back(cat_.decompose(forward_part(quiver(), x)));
        }
        const int min_ext = *std::min_element(ext.begin(), ext.end());
        std::vector<RootMultiset> kept;
        for (std::size_t t = 0; t < found.size(); ++t)
            if (ext[t] == min_ext) kept.push_back(found[t]);
        Voted v = vote(kept, "star product " + name(m) + " * " + name(n));
        if (grdim(v.result) != grdim(m) + grdim(n))
            throw InternalAssertion("star product changed the graded dimension");
        StarResult r{v.result, cfg_.trials, v.agreement, min_ext};
        star_cache_.emplace(std::move(key), r);
        return r;
    }

    /// Generic (minimal over trials) dim Ext^1_Pi between points of cn(m) and cn(n).
    int generic_ext1(const RootMultiset& m, const RootMultiset& n) const {
        int best = -1;
        for (int t = 0; t < cfg_.trials; ++t) {
            FieldCtx ctx = cfg_.context(field(), std::uint64_t(t), kExtSalt);
            PiMod x = sample(m, ctx);
            PiMod y = sample(n, ctx);
            int e = ext_space(field(), quiver(), x, y).dim();
            if (best < 0 || e < best) best = e;
        }
        return best;
    }

    /// The same generic value through random tau-data on M_Q(m), M_Q(n).
    int generic_ext1_via_tau(const RootMultiset& m, const RootMultiset& n) const {
        int best = -1;
        for (int t = 0; t < cfg_.trials; ++t) {
            FieldCtx ctx = cfg_.context(field(), std::uint64_t(t), kTauSalt);
            TauMod x = random_tau_datum(quiver(), cat_.rep_of_multiset(m, ctx), ctx);
            TauMod y = random_tau_datum(quiver(), cat_.rep_of_multiset(n, ctx), ctx);
            int e = ext1_pi_via_t(field(), quiver(), x, y);
            if (best < 0 || e < best) best = e;
        }
        return best;
    }

    /// Generic (minimal over trials) dim Hom_Pi from cn(m) to cn(n).
    int generic_hom(const RootMultiset& m, const RootMultiset& n) const {
        int best = -1;
        for (int t = 0; t < cfg_.trials; ++t) {
            FieldCtx ctx = cfg_.context(field(), std::uint64_t(t), kHomSalt);
            PiMod x = sample(m, ctx);
            PiMod y = sample(n, ctx);
            int h = hom_pi_dim(field(), quiver(), x, y);
            if (best < 0 || h < best) best = h;
        }
        return best;
    }

    RigidityVerdict rigid(const RootMultiset& m) const { return is_rigid_component(cat_, m, cfg_); }

    /// Some trial attains Ext^1_Pi(x1, x2) = 0.
    bool strongly_commute(const RootMultiset& m, const RootMultiset& n) const {
        for (int t = 0; t < cfg_.trials; ++t) {
            FieldCtx ctx = cfg_.context(field(), std::uint64_t(t), kExtSalt);
            PiMod x1 = sample(m, ctx);
            PiMod x2 = sample(n, ctx);
            if (ext1_pi_dim_cb(field(), quiver(), x1, x2) == 0) return true;
        }
        return false;
    }

    bool weakly_commute(const RootMultiset& m, const RootMultiset& n) const {
        return star(m, n).result == star(n, m).result;
    }

    StarResult crystal_f(std::size_t i, const RootMultiset& m, Side side = Side::left) const {
        check_vertex(i);
        return side == Side::left ? star(simple(i), m) : star(m, simple(i));
    }

    /// Kernel of a generic surjection x -> S(i) for generic x in cn(m).
    CrystalEResult crystal_e(std::size_t i, const RootMultiset& m) const {
        check_vertex(i);
        cat_.check_multiset(m);
        const PiMod s = simple_pimod(quiver(), i);
        std::vector<int> homs;
        std::vector<std::optional<RootMultiset>> found;
        for (int t = 0; t < cfg_.trials; ++t) {
            FieldCtx ctx = cfg_.context(field(), std::uint64_t(t), kCrystalSalt);
            PiMod x = sample(m, ctx);
            auto basis = hom_pi_space(field(), quiver(), x, s);
            homs.push_back(static_cast<int>(basis.size()));
            found.push_back(basis.empty() ? std::nullopt
                                          : std::optional(cat_.decompose(forward_part(
                                                quiver(), kernel_of_surjection(field(), quiver(), x, s,
                                                                               random_surjection(basis, i, ctx))))));
        }
        CrystalEResult r;
        r.trials = cfg_.trials;
        r.min_hom = *std::min_element(homs.begin(), homs.end());
        if (r.min_hom == 0) {
            r.agreement = static_cast<int>(std::count(homs.begin(), homs.end(), 0));
            return r;
        }
        std::vector<RootMultiset> kept;
        for (std::size_t t = 0; t < found.size(); ++t)
            if (homs[t] == r.min_hom) kept.push_back(*found[t]);
        Voted v = vote(kept, "crystal e" + quiver().label(i) + " of " + name(m));
        r.result = v.result;
        r.agreement = v.agreement;
        return r;
    }

    /// C -> C*: forward part of the dual of a generic point.
    Voted dual(const RootMultiset& m) const {
        if (auto it = dual_cache_.find(m); it != dual_cache_.end()) return it->second;
        cat_.check_multiset(m);
        std::vector<RootMultiset> found;
        for (int t = 0; t < cfg_.trials; ++t) {
            FieldCtx ctx = cfg_.context(field(), std::uint64_t(t), kDualSalt);
            found.push_back(cat_.decompose(forward_part(quiver(), dual_pimod(quiver(), sample(m, ctx)))));
        }
        Voted v = vote(found, "dual of " + name(m));
        v.trials = cfg_.trials;
        dual_cache_.emplace(m, v);
        return v;
    }

    AssocRecord associativity_probe(const RootMultiset& m, const RootMultiset& n, const RootMultiset& k) const {
        AssocRecord r;
        r.left = star(star(m, n).result, k).result;
        r.right = star(m, star(n, k).result).result;
        r.equal = r.left == r.right;
        return r;
    }

    /// Whether n |-> m * n is injective on `ns`; m must be rigid.
    CancellationReport cancellation_probe(const RootMultiset& m, const std::vector<RootMultiset>& ns) const {
        if (!rigid(m).rigid) throw InvalidArgument("cancellation probe needs a rigid component, got " + name(m));
        CancellationReport r;
        std::set<RootMultiset> seen;
        for (const auto& n : ns) {
            RootMultiset p = star(m, n).result;
            r.images.emplace_back(n, p);
            if (!seen.insert(p).second) r.injective = false;
        }
        return r;
    }

    /// Breadth-first closure of the empty multiset under left f_i, `depth` steps.
    CrystalGraph crystal_graph(int depth) const {
        if (depth < 0) throw InvalidArgument("crystal depth must be nonnegative");
        CrystalGraph g;
        std::map<RootMultiset, std::size_t> index;
        g.nodes.push_back(empty());
        g.depth.push_back(0);
        index.emplace(empty(), 0);
        for (std::size_t k = 0; k < g.nodes.size(); ++k) {
            if (g.depth[k] == depth) continue;
            for (std::size_t i = 0; i < quiver().vertex_count(); ++i) {
                RootMultiset next = crystal_f(i, g.nodes[k]).result;
                auto [it, inserted] = index.emplace(next, g.nodes.size());
                if (inserted) {
                    g.nodes.push_back(next);
                    g.depth.push_back(g.depth[k] + 1);
                }
                g.edges.push_back({k, it->second, i});
            }
        }
        return g;
    }

    ExtTable ext_table(const DimVector& d) const {
        ExtTable t;
        t.components = enumerate_components(d);
        for (const auto& a : t.components) {
            std::vector<int> row;
            for (const auto& b : t.components) row.push_back(generic_ext1(a, b));
            t.ext1.push_back(std::move(row));
        }
        return t;
    }

    /// Strict majority among `candidates`; raises NoMajority otherwise.
    Voted vote(const std::vector<RootMultiset>& candidates, const std::string& what) const {
        std::map<RootMultiset, int> counts;
        for (const auto& c : candidates) ++counts[c];
        for (const auto& [m, k] : counts)
            if (2 * k > static_cast<int>(candidates.size())) return Voted{m, cfg_.trials, k};
        std::vector<std::string> names;
        for (const auto& [m, k] : counts) names.push_back(name(m) + " x" + std::to_string(k));
        throw NoMajority("no majority for " + what, std::move(names));
    }

private:
    static constexpr std::uint64_t kStarSalt = 0x57A2;
    static constexpr std::uint64_t kExtSalt = 0xE171;
    static constexpr std::uint64_t kTauSalt = 0x7A0D;
    static constexpr std::uint64_t kHomSalt = 0x4011;
    static constexpr std::uint64_t kCrystalSalt = 0xC0E5;
    static constexpr std::uint64_t kDualSalt = 0xD0A1;

    static Quiver check_dynkin(Quiver q) {
        if (!is_dynkin(q)) throw UnsupportedQuiver("components are named by root multisets only in Dynkin type");
        return q;
    }

    void check_vertex(std::size_t i) const {
        if (i >= quiver().vertex_count()) throw InvalidArgument("vertex index out of range");
    }

    GradedMap random_surjection(const std::vector<GradedMap>& basis, std::size_t i, FieldCtx& ctx) const {
        for (int attempt = 0; attempt < 16; ++attempt) {
            GradedMap phi = basis.front();
            for (auto& b : phi.blocks) b = Mat(b.rows(), b.cols());
            for (const auto& b : basis) phi = combine(field(), phi, 1, b, ctx.random_element());
            if (!phi.blocks[i].is_zero()) return phi;
        }
        throw GenericityFailure("could not sample a surjection onto a simple module");
    }

    RepCatalog cat_;
    TrialConfig cfg_;
    mutable std::map<std::pair<RootMultiset, RootMultiset>, StarResult> star_cache_;
    mutable std::map<RootMultiset, Voted> dual_cache_;
};

} // namespace pistar
