#pragma once

// Text grammar for dimension vectors and root multisets.
//
//   dimvec    := int ("," int)*            e.g. 1,1,1   (brackets optional)
//   multiset  := "0" | term ("+" term)*    e.g. [1,1]+[1,0]^2
//   term      := "[" dimvec "]" ("^" int)?

#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pistar/errors.hpp"
#include "pistar/qrep.hpp"
#include "pistar/quiver.hpp"

namespace pistar {

namespace detail {

inline std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw InvalidArgument("bad integer '" + std::string(s) + "' in " + std::string(what));
    return v;
}

} // namespace detail

inline DimVector parse_dimvector(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw InvalidArgument("empty dimension vector");
    std::vector<int> v;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view part(s.data() + start, (comma == std::string::npos ? s.size() : comma) - start);
        int x = detail::parse_int(part, "dimension vector '" + std::string(text) + "'");
        if (x < 0) throw InvalidArgument("negative entry in dimension vector '" + std::string(text) + "'");
        v.push_back(x);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return DimVector(std::move(v));
}

inline DimVector parse_dimvector(std::string_view text, const Quiver& q) {
    DimVector d = parse_dimvector(text);
    if (d.size() != q.vertex_count())
        throw InvalidArgument("dimension vector '" + std::string(text) + "' has " + std::to_string(d.size()) +
                              " entries, quiver has " + std::to_string(q.vertex_count()) + " vertices");
    return d;
}

inline RootMultiset parse_multiset(std::string_view text, const RootSystem& roots) {
    std::string s = detail::strip_spaces(text);
    RootMultiset m(roots.size());
    if (s.empty() || s == "0") return m;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '[') throw InvalidArgument("expected '[' at position " + std::to_string(pos) + " of '" + std::string(text) + "'");
        std::size_t close = s.find(']', pos);
        if (close == std::string::npos) throw InvalidArgument("unterminated root in '" + std::string(text) + "'");
        DimVector beta = parse_dimvector(std::string_view(s).substr(pos + 1, close - pos - 1));
        auto id = beta.size() == (roots.size() ? roots.root(0).size() : 0) ? roots.find(beta) : std::nullopt;
        if (!id) throw InvalidArgument(beta.to_string() + " is not a positive root of this quiver");
        pos = close + 1;
        int mult = 1;
        if (pos < s.size() && s[pos] == '^') {
            std::size_t end = s.find('+', pos);
            if (end == std::string::npos) end = s.size();
            mult = detail::parse_int(std::string_view(s).substr(pos + 1, end - pos - 1), "multiplicity");
            if (mult < 1) throw InvalidArgument("multiplicity must be positive in '" + std::string(text) + "'");
            pos = end;
        }
        m.add(*id, mult);
        if (pos < s.size()) {
            if (s[pos] != '+') throw InvalidArgument("expected '+' in '" + std::string(text) + "'");
            if (++pos == s.size()) throw InvalidArgument("trailing '+' in '" + std::string(text) + "'");
        }
    }
    return m;
}

/// Canonical spelling: roots in descending lexicographic order, "0" when empty.
inline std::string format_multiset(const RootMultiset& m, const RootSystem& roots) {
    std::string out;
    for (std::size_t id = 0; id < m.root_count(); ++id) {
        if (m.count(id) == 0) continue;
        if (!out.empty()) out += '+';
        out += roots.root(id).to_string();
        if (m.count(id) > 1) out += '^' + std::to_string(m.count(id));
    }
    return out.empty() ? "0" : out;
}

} // namespace pistar
