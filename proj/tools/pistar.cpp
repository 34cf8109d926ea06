// pistar: command-line front end for the component calculus.
//
// Exit codes: 0 success, 1 failing check suite, 2 usage error,
// 3 no majority / genericity failure, 4 internal assertion.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pistar/io.hpp"
#include "pistar/notation.hpp"
#include "pistar/starops.hpp"
#include "pistar/suites.hpp"

namespace {

using namespace pistar;

struct RunConfig {
    std::string quiver = "A2";
    elem_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
    int trials = 7;
    std::string format = "text";
};

void emit(const RunConfig& rc, const Json& j, const std::string& text) {
    if (rc.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

ComponentCalculus calculus(const RunConfig& rc) {
    return ComponentCalculus(load_quiver(rc.quiver), Field(rc.prime), TrialConfig{rc.seed, rc.trials});
}

std::string provenance(int trials, int agreement) {
    return "trials=" + std::to_string(trials) + " agreement=" + std::to_string(agreement);
}

int run_check(const RunConfig& rc, const std::string& which) {
    SuiteOptions o{rc.prime, rc.seed, rc.trials};
    Json results = Json::array();
    std::string text;
    bool any = false, all_pass = true;
    for (const auto& s : suites::registry()) {
        if (which != "all" && which != "acceptance" && s.name != which) continue;
        if (which == "acceptance" && s.criterion == 0) continue;
        any = true;
        SuiteResult r = suites::run(s, o);
        all_pass &= r.passed;
        results.push_back(Json{{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        text += r.name + ": " + (r.passed ? "PASS" : "FAIL") + "  " + r.detail + "\n";
    }
    if (!any) throw InvalidArgument("unknown suite '" + which + "' (try 'all')");
    emit(rc, Json{{"suites", results}, {"passed", all_pass}}, text);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig rc;
    CLI::App app{"Exact computations with preprojective-algebra modules and their irreducible components"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--quiver,-q", rc.quiver, "built-in quiver (A2, A3, D4, ...) or quiver JSON file")->capture_default_str();
    app.add_option("--prime,-p", rc.prime, "prime field size")->capture_default_str();
    app.add_option("--seed,-s", rc.seed, "random seed")->capture_default_str();
    app.add_option("--trials,-t", rc.trials, "independent trials per randomized answer")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format,-f", rc.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();

    std::string m_arg, n_arg, k_arg, d_arg, suite;
    int depth = 2;
    bool dot = false;

    auto* roots = app.add_subcommand("roots", "list the positive roots");
    auto* comps = app.add_subcommand("components", "irreducible components of a graded dimension");
    comps->add_option("d", d_arg, "dimension vector, e.g. 1,1,1")->required();
    auto* star = app.add_subcommand("star", "the product m * n");
    star->add_option("m", m_arg)->required();
    star->add_option("n", n_arg)->required();
    auto* rigid = app.add_subcommand("rigid", "whether a component is rigid");
    rigid->add_option("m", m_arg)->required();
    auto* commute = app.add_subcommand("commute", "strong and weak commutativity of two components");
    commute->add_option("m", m_arg)->required();
    commute->add_option("n", n_arg)->required();
    auto* dual = app.add_subcommand("dual", "the dual component");
    dual->add_option("m", m_arg)->required();
    auto* crystal = app.add_subcommand("crystal", "crystal graph of left f_i from the empty multiset");
    crystal->add_option("--depth,-k", depth, "number of BFS layers")->check(CLI::NonNegativeNumber)->capture_default_str();
    crystal->add_flag("--dot", dot, "write Graphviz DOT");
    auto* assoc = app.add_subcommand("assoc", "compare (m * n) * k with m * (n * k)");
    assoc->add_option("m", m_arg)->required();
    assoc->add_option("n", n_arg)->required();
    assoc->add_option("k", k_arg)->required();
    auto* ext = app.add_subcommand("ext-table", "generic dim Ext^1 over pairs of components of d");
    ext->add_option("d", d_arg)->required();
    auto* sample = app.add_subcommand("sample", "dump a generic point of a conormal stratum as JSON");
    sample->add_option("m", m_arg)->required();
    auto* check = app.add_subcommand("check", "run a named invariant suite ('all', 'acceptance' or one name)");
    check->add_option("suite", suite)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(rc, suite);

        if (*roots) {
            Quiver q = load_quiver(rc.quiver);
            RootSystem rs = positive_roots(q);
            Json list = Json::array();
            std::string text;
            for (const auto& r : rs.roots()) {
                list.push_back(r.to_string());
                text += r.to_string() + "\n";
            }
            emit(rc, Json{{"type", dynkin_type(q).value_or("")}, {"count", rs.size()}, {"roots", list}}, text);
            return 0;
        }

        ComponentCalculus c = calculus(rc);
        auto parse = [&](const std::string& s) { return c.parse(s); };

        if (*comps) {
            DimVector d = parse_dimvector(d_arg, c.quiver());
            Json list = Json::array();
            std::string text;
            for (const auto& m : c.enumerate_components(d)) {
                list.push_back(c.name(m));
                text += c.name(m) + "\n";
            }
            emit(rc, Json{{"dim", d.to_string()}, {"count", list.size()}, {"components", list}}, text);
        } else if (*star) {
            StarResult r = c.star(parse(m_arg), parse(n_arg));
            emit(rc, star_to_json(c, r),
                 c.name(r.result) + "  (" + provenance(r.trials, r.agreement) + " min_ext1=" + std::to_string(r.min_ext1) + ")\n");
        } else if (*rigid) {
            RootMultiset m = parse(m_arg);
            RigidityVerdict v = c.rigid(m);
            emit(rc, Json{{"component", c.name(m)}, {"rigid", v.rigid}, {"trials", v.trials}, {"agreement", v.agreement}},
                 c.name(m) + (v.rigid ? " is rigid" : " is not rigid") + "  (" + provenance(v.trials, v.agreement) + ")\n");
        } else if (*commute) {
            RootMultiset m = parse(m_arg), n = parse(n_arg);
            bool strong = c.strongly_commute(m, n);
            StarResult mn = c.star(m, n), nm = c.star(n, m);
            bool weak = mn.result == nm.result;
            emit(rc,
                 Json{{"strong", strong}, {"weak", weak}, {"m*n", star_to_json(c, mn)}, {"n*m", star_to_json(c, nm)}},
                 std::string("strong: ") + (strong ? "yes" : "no") + "\nweak: " + (weak ? "yes" : "no") +
                     "\nm*n = " + c.name(mn.result) + "\nn*m = " + c.name(nm.result) + "\n");
        } else if (*dual) {
            Voted v = c.dual(parse(m_arg));
            emit(rc, Json{{"result", c.name(v.result)}, {"trials", v.trials}, {"agreement", v.agreement}},
                 c.name(v.result) + "  (" + provenance(v.trials, v.agreement) + ")\n");
        } else if (*crystal) {
            CrystalGraph g = c.crystal_graph(depth);
            if (dot || rc.format == "dot") {
                std::cout << crystal_to_dot(c, g);
            } else {
                Json nodes = Json::array(), edges = Json::array();
                std::string text;
                for (std::size_t k = 0; k < g.nodes.size(); ++k) nodes.push_back(Json{{"name", c.name(g.nodes[k])}, {"depth", g.depth[k]}});
                for (const auto& e : g.edges) {
                    std::string label = "f" + c.quiver().label(e.vertex);
                    edges.push_back(Json{{"from", c.name(g.nodes[e.from])}, {"to", c.name(g.nodes[e.to])}, {"label", label}});
                    text += c.name(g.nodes[e.from]) + " --" + label + "--> " + c.name(g.nodes[e.to]) + "\n";
                }
                emit(rc, Json{{"nodes", nodes}, {"edges", edges}}, text);
            }
        } else if (*assoc) {
            AssocRecord r = c.associativity_probe(parse(m_arg), parse(n_arg), parse(k_arg));
            emit(rc, Json{{"left", c.name(r.left)}, {"right", c.name(r.right)}, {"equal", r.equal}},
                 "(m*n)*k = " + c.name(r.left) + "\nm*(n*k) = " + c.name(r.right) + "\nequal: " + (r.equal ? "yes" : "no") + "\n");
        } else if (*ext) {
            ExtTable t = c.ext_table(parse_dimvector(d_arg, c.quiver()));
            Json names = Json::array();
            std::string text;
            for (std::size_t a = 0; a < t.components.size(); ++a) {
                names.push_back(c.name(t.components[a]));
                text += c.name(t.components[a]) + ":";
                for (int v : t.ext1[a]) text += " " + std::to_string(v);
                text += "\n";
            }
            emit(rc, Json{{"components", names}, {"ext1", t.ext1}}, text);
        } else if (*sample) {
            FieldCtx ctx = FieldCtx::derived(c.field(), rc.seed, 0x5A3D);
            std::cout << pimod_to_json(c.quiver(), c.sample(parse(m_arg), ctx)).dump(2) << "\n";
        }
        return 0;
    } catch (const NoMajority& e) {
        std::cerr << "pistar: " << e.what() << "\n";
        for (const auto& s : e.candidates()) std::cerr << "  candidate " << s << "\n";
        return 3;
    } catch (const GenericityFailure& e) {
        std::cerr << "pistar: " << e.what() << "\n";
        return 3;
    } catch (const InternalAssertion& e) {
        std::cerr << "pistar: internal assertion: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "pistar: " << e.what() << "\n";
        return 2;
    }
}
