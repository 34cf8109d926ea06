#pragma once

// JSON and DOT serialization (nlohmann/json single header).

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "pistar/errors.hpp"
#include "pistar/pimod.hpp"
#include "pistar/quiver.hpp"
#include "pistar/starops.hpp"

namespace pistar {

using Json = nlohmann::ordered_json;

inline Quiver quiver_from_json(const Json& j) {
    try {
        std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
        std::vector<Arrow> arrows;
        for (const auto& a : j.at("arrows")) {
            if (!a.is_array() || a.size() != 2) throw InvalidArgument("arrow must be a [source, target] pair");
            auto s = index.find(a[0].get<std::string>()), t = index.find(a[1].get<std::string>());
            if (s == index.end() || t == index.end()) throw InvalidArgument("arrow names an unknown vertex");
            arrows.push_back({s->second, t->second});
        }
        return Quiver(std::move(labels), std::move(arrows));
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed quiver JSON: ") + e.what());
    }
}

inline Json quiver_to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows()) arrows.push_back({q.label(a.source), q.label(a.target)});
    return Json{{"vertices", q.labels()}, {"arrows", arrows}};
}

/// A built-in name (A3, D4, ...) or the path of a quiver JSON file.
inline Quiver load_quiver(const std::string& spec) {
    try {
        return Quiver::builtin(spec);
    } catch (const InvalidArgument&) {
    }
    std::ifstream in(spec);
    if (!in) throw InvalidArgument("'" + spec + "' is neither a built-in quiver nor a readable file");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw InvalidArgument("cannot parse " + spec + ": " + e.what());
    }
    return quiver_from_json(j);
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw InvalidArgument("matrix has the wrong number of rows");
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw InvalidArgument("matrix row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(j[r][c].get<long long>());
    }
    return m;
}

/// Keys "h:s->t" and "hop:t->s"; parallel arrows get "#2", "#3", ... appended.
inline std::vector<std::string> double_arrow_keys(const Quiver& q) {
    std::vector<std::string> keys;
    std::map<std::string, int> seen;
    for (std::size_t a = 0; a < double_arrow_count(q); ++a) {
        auto ar = double_arrow(q, a);
        std::string k = std::string(a < q.arrow_count() ? "h:" : "hop:") + q.label(ar.source) + "->" + q.label(ar.target);
        int n = ++seen[k];
        keys.push_back(n == 1 ? k : k + "#" + std::to_string(n));
    }
    return keys;
}

inline Json pimod_to_json(const Quiver& q, const PiMod& x) {
    check_shapes(q, x);
    Json arrows = Json::object();
    auto keys = double_arrow_keys(q);
    for (std::size_t a = 0; a < x.maps.size(); ++a) arrows[keys[a]] = mat_to_json(x.maps[a]);
    return Json{{"dim", x.dim.values()}, {"arrows", arrows}};
}

inline PiMod pimod_from_json(const Field& f, const Quiver& q, const Json& j) {
    try {
        DimVector d(j.at("dim").get<std::vector<int>>());
        q.check_dim(d);
        PiMod x{d, {}};
        auto keys = double_arrow_keys(q);
        for (std::size_t a = 0; a < keys.size(); ++a) {
            auto ar = double_arrow(q, a);
            x.maps.push_back(mat_from_json(f, j.at("arrows").at(keys[a]), std::size_t(d[ar.target]), std::size_t(d[ar.source])));
        }
        return x;
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed Pi-module JSON: ") + e.what());
    }
}

inline Json star_to_json(const ComponentCalculus& c, const StarResult& r) {
    return Json{{"result", c.name(r.result)}, {"trials", r.trials}, {"agreement", r.agreement}, {"min_ext1", r.min_ext1}};
}

inline std::string dot_escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

/// One node per multiset, one edge "f<i>" per crystal operator application.
inline std::string crystal_to_dot(const ComponentCalculus& c, const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        os << "  n" << k << " [label=\"" << dot_escape(c.name(g.nodes[k])) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"f" << dot_escape(c.quiver().label(e.vertex)) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace pistar
