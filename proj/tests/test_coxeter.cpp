#include <gtest/gtest.h>

#include "pistar/coxeter.hpp"

using namespace pistar;

namespace {

const Field F;

bool is_projective_root(const Quiver& q, const DimVector& beta) {
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        if (path_projective(q, i).dim == beta) return true;
    return false;
}

} // namespace

TEST(Reflection, OnlyAtSinksAndSources) {
    Quiver a2 = Quiver::builtin("A2");
    QRep s = simple_rep(a2, 0);
    EXPECT_THROW(reflect_plus(F, a2, 0, s), InvalidArgument);
    EXPECT_THROW(reflect_minus(F, a2, 1, s), InvalidArgument);
    Reflected r = reflect_plus(F, a2, 1, s);
    EXPECT_EQ(r.rep.dim, (DimVector{1, 1}));
    EXPECT_TRUE(r.quiver.is_source(1));
}

TEST(Reflection, SimpleAtSinkVanishes) {
    Quiver a3 = Quiver::builtin("A3");
    EXPECT_TRUE(reflect_plus(F, a3, 2, simple_rep(a3, 2)).rep.dim.is_zero());
}

TEST(Coxeter, AdmissibleOrders) {
    EXPECT_EQ(admissible_sink_order(Quiver::builtin("A3")), (std::vector<std::size_t>{2, 1, 0}));
    EXPECT_EQ(admissible_sink_order(Quiver::builtin("D4")), (std::vector<std::size_t>{3, 0, 1, 2}));
    Quiver cyc({"1", "2"}, {{0, 1}, {1, 0}});
    EXPECT_THROW(admissible_sink_order(cyc), UnsupportedQuiver);
}

// The Coxeter transformation is characterized by <x,y> = -<y, Phi x>.
TEST(Coxeter, EulerFormCharacterization) {
    for (const char* name : {"A2", "A4", "D4", "D5", "E6"}) {
        Quiver q = Quiver::builtin(name);
        const std::size_t n = q.vertex_count();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                DimVector x = DimVector::unit(n, i), y = DimVector::unit(n, j);
                EXPECT_EQ(euler_form(q, x, y), -euler_form(q, y, coxeter_transform(q, x))) << name;
            }
    }
}

TEST(Tau, DimensionsFollowCoxeter) {
    for (const char* name : {"A3", "D4", "E6"}) {
        RepCatalog cat(Quiver::builtin(name), F, 3);
        const Quiver& q = cat.quiver();
        int projectives = 0;
        for (std::size_t id = 0; id < cat.root_count(); ++id) {
            const QRep& m = cat.indecomposable(id);
            TauImage t = tau(F, q, m);
            if (is_projective_root(q, m.dim)) {
                ++projectives;
                EXPECT_TRUE(t.object.dim.is_zero()) << name << " " << m.dim.to_string();
            } else {
                EXPECT_EQ(t.object.dim, coxeter_transform(q, m.dim)) << name;
                EXPECT_EQ(hom_q_dim(F, q, t.object, t.object), 1);
            }
        }
        EXPECT_EQ(projectives, int(q.vertex_count()));
    }
}

TEST(Tau, InverseOnNonProjectives) {
    RepCatalog cat(Quiver::builtin("D4"), F, 4);
    const Quiver& q = cat.quiver();
    for (std::size_t id = 0; id < cat.root_count(); ++id) {
        const QRep& m = cat.indecomposable(id);
        if (is_projective_root(q, m.dim)) continue;
        QRep back = tau_minus(F, q, tau(F, q, m).object);
        EXPECT_EQ(cat.decompose(back), RootMultiset::single(cat.root_count(), id));
    }
}

// Auslander-Reiten: dim Ext^1(M, N) = dim Hom(N, tau M).
TEST(Tau, AuslanderReitenFormula) {
    for (const char* name : {"A4", "D4"}) {
        RepCatalog cat(Quiver::builtin(name), F, 5);
        const Quiver& q = cat.quiver();
        for (std::size_t a = 0; a < cat.root_count(); ++a) {
            QRep tm = tau(F, q, cat.indecomposable(a)).object;
            for (std::size_t b = 0; b < cat.root_count(); ++b)
                EXPECT_EQ(ext1_q_dim(F, q, cat.indecomposable(a), cat.indecomposable(b)),
                          hom_q_dim(F, q, cat.indecomposable(b), tm));
        }
    }
}

TEST(Tau, Functoriality) {
    Quiver q = Quiver::builtin("A3");
    FieldCtx ctx(F, 12);
    QRep x = generic_rep(q, DimVector{1, 2, 1}, ctx);
    QRep y = generic_rep(q, DimVector{1, 2, 0}, ctx);
    QRep z = generic_rep(q, DimVector{1, 1, 0}, ctx);
    TauImage tx = tau(F, q, x), ty = tau(F, q, y), tz = tau(F, q, z);
    EXPECT_EQ(tau_morphism(F, q, tx, tx, identity_map(x.dim)), identity_map(tx.object.dim));
    auto fs = hom_q_space(F, q, x, y);
    auto gs = hom_q_space(F, q, y, z);
    ASSERT_FALSE(fs.empty());
    ASSERT_FALSE(gs.empty());
    bool nonzero = false;
    for (const auto& f1 : fs) {
        GradedMap tf = tau_morphism(F, q, tx, ty, f1);
        EXPECT_TRUE(is_q_morphism(F, q, tx.object, ty.object, tf));
        for (const auto& g1 : gs) {
            GradedMap lhs = tau_morphism(F, q, tx, tz, compose(F, g1, f1));
            GradedMap rhs = compose(F, tau_morphism(F, q, ty, tz, g1), tf);
            EXPECT_EQ(lhs, rhs);
            nonzero |= !is_zero(lhs);
        }
    }
    EXPECT_TRUE(nonzero);
}

TEST(Projectives, PathModules) {
    Quiver a3 = Quiver::builtin("A3");
    EXPECT_EQ(path_projective(a3, 0).dim, (DimVector{1, 1, 1}));
    EXPECT_EQ(path_projective(a3, 2).dim, (DimVector{0, 0, 1}));
    Quiver d4 = Quiver::builtin("D4");
    EXPECT_EQ(path_projective(d4, 1).dim, (DimVector{0, 1, 0, 1}));
}

// dim Pi = n h (h+1) / 6 with Coxeter number h = 2 |roots| / n.
TEST(Projectives, PreprojectiveAlgebraDimension) {
    for (const char* name : {"A2", "A3", "A4", "D4", "D5"}) {
        Quiver q = Quiver::builtin(name);
        const int n = int(q.vertex_count());
        const int h = 2 * int(positive_roots(q).size()) / n;
        int total = 0;
        for (std::size_t i = 0; i < q.vertex_count(); ++i) total += projective_pi_module(F, q, i).dim.total();
        EXPECT_EQ(total, n * h * (h + 1) / 6) << name;
    }
}
