#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "pistar/io.hpp"
#include "pistar/notation.hpp"

using namespace pistar;

TEST(Notation, DimVectors) {
    EXPECT_EQ(parse_dimvector("1,2,0"), (DimVector{1, 2, 0}));
    EXPECT_EQ(parse_dimvector(" [1, 2] "), (DimVector{1, 2}));
    EXPECT_THROW(parse_dimvector(""), InvalidArgument);
    EXPECT_THROW(parse_dimvector("1,,2"), InvalidArgument);
    EXPECT_THROW(parse_dimvector("1,-2"), InvalidArgument);
    EXPECT_THROW(parse_dimvector("1,x"), InvalidArgument);
    EXPECT_THROW(parse_dimvector("1,1", Quiver::builtin("A3")), InvalidArgument);
}

TEST(Notation, MultisetsCanonicalSpelling) {
    RootSystem rs = positive_roots(Quiver::builtin("A2"));
    RootMultiset m = parse_multiset("[0,1] + [1,0]^2 + [1,1]", rs);
    EXPECT_EQ(format_multiset(m, rs), "[1,1]+[1,0]^2+[0,1]");
    EXPECT_EQ(format_multiset(parse_multiset("0", rs), rs), "0");
    EXPECT_EQ(parse_multiset("", rs), RootMultiset(3));
    EXPECT_EQ(parse_multiset("[1,0]+[1,0]", rs), parse_multiset("[1,0]^2", rs));
    EXPECT_THROW(parse_multiset("[2,0]", rs), InvalidArgument);
    EXPECT_THROW(parse_multiset("[1,0", rs), InvalidArgument);
    EXPECT_THROW(parse_multiset("1,0", rs), InvalidArgument);
    EXPECT_THROW(parse_multiset("[1,0][0,1]", rs), InvalidArgument);
}

TEST(QuiverJson, RoundTripAndErrors) {
    Quiver d4 = Quiver::builtin("D4");
    EXPECT_EQ(quiver_from_json(quiver_to_json(d4)), d4);
    EXPECT_THROW(quiver_from_json(Json::parse(R"({"vertices":["a"],"arrows":[["a","b"]]})")), InvalidArgument);
    EXPECT_THROW(quiver_from_json(Json::parse(R"({"vertices":["a","b"]})")), InvalidArgument);
    EXPECT_THROW(quiver_from_json(Json::parse(R"({"vertices":["a","b"],"arrows":[["a"]]})")), InvalidArgument);
}

TEST(QuiverJson, LoadFromFile) {
    const std::string path = ::testing::TempDir() + "pistar_quiver.json";
    {
        std::ofstream out(path);
        out << R"({"vertices":["x","y","z"],"arrows":[["y","x"],["y","z"]]})";
    }
    Quiver q = load_quiver(path);
    EXPECT_EQ(q.vertex_count(), 3u);
    EXPECT_EQ(dynkin_type(q).value_or(""), "A3");
    std::remove(path.c_str());
    EXPECT_THROW(load_quiver("no/such/file.json"), InvalidArgument);
    EXPECT_EQ(load_quiver("E6").vertex_count(), 6u);
}

TEST(PiModJson, RoundTrip) {
    Quiver a3 = Quiver::builtin("A3");
    RepCatalog cat(a3, Field{}, 0);
    FieldCtx ctx(Field{}, 3);
    PiMod x = sample_conormal(cat, cat.simple(0) + cat.simple(1) + cat.simple(2), ctx);
    Json j = pimod_to_json(a3, x);
    EXPECT_TRUE(j["arrows"].contains("h:1->2"));
    EXPECT_TRUE(j["arrows"].contains("hop:3->2"));
    EXPECT_EQ(pimod_from_json(Field{}, a3, j), x);
    Json bad = j;
    bad["arrows"]["h:1->2"] = Json::array({Json::array({1, 2})});
    EXPECT_THROW(pimod_from_json(Field{}, a3, bad), InvalidArgument);
    bad = j;
    bad.erase("dim");
    EXPECT_THROW(pimod_from_json(Field{}, a3, bad), InvalidArgument);
}

TEST(PiModJson, ParallelArrowKeys) {
    Quiver k({"1", "2"}, {{0, 1}, {0, 1}});
    auto keys = double_arrow_keys(k);
    ASSERT_EQ(keys.size(), 4u);
    EXPECT_EQ(keys[0], "h:1->2");
    EXPECT_EQ(keys[1], "h:1->2#2");
    EXPECT_EQ(keys[3], "hop:2->1#2");
}

TEST(Dot, CrystalGraphOutput) {
    ComponentCalculus c(Quiver::builtin("A2"));
    std::string dot = crystal_to_dot(c, c.crystal_graph(1));
    EXPECT_EQ(dot.rfind("digraph crystal {", 0), 0u);
    EXPECT_NE(dot.find("[label=\"f1\"]"), std::string::npos);
    EXPECT_NE(dot.find("[label=\"f2\"]"), std::string::npos);
    EXPECT_NE(dot.find("label=\"0\""), std::string::npos);
    EXPECT_EQ(dot_escape("a\"b\\"), "a\\\"b\\\\");
}

TEST(StarJson, Fields) {
    ComponentCalculus c(Quiver::builtin("A2"));
    Json j = star_to_json(c, c.star(c.simple(0), c.simple(1)));
    EXPECT_EQ(j["result"], "[1,1]");
    EXPECT_EQ(j["trials"], 7);
    EXPECT_EQ(j["min_ext1"], 1);
}
