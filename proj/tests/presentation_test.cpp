#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "contact/arc_diagram.hpp"
#include "contact/presented_category.hpp"

using namespace contact;

namespace {

int binom(int n, int k) {
    int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Composable pairs of generators, counted directly.
int composable_pairs(const PresentedCategory& c) {
    int n = 0;
    for (auto& a : c.generators)
        for (auto& b : c.generators)
            if (a.tgt == b.src) ++n;
    return n;
}

int reps_of_length(const HomTable& t, std::size_t len) {
    int n = 0;
    for (auto& [k, v] : t.basis)
        for (auto& p : v) n += p.length() == len;
    return n;
}

}  // namespace

TEST(Presentation, WordsReadRightToLeft) {
    auto c = drinfeld_category();
    auto p = c.word("h22 f");
    ASSERT_EQ(p.gens.size(), 2u);
    EXPECT_EQ(c.generators[p.gens[0]].name, "f");
    EXPECT_EQ(c.str(p), "h22 f");
    EXPECT_THROW(c.word("f f"), InvalidInput);
    EXPECT_THROW(c.word("q"), InvalidInput);
}

TEST(Presentation, DrinfeldDifferential) {
    EXPECT_TRUE(verify_differential(drinfeld_category()).ok);
    auto bad = verify_differential(drinfeld_category(true));
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.where, "h12");
    EXPECT_EQ(bad.rhs, "f");
}

TEST(Presentation, DBarDifferential) {
    auto c = d_bar();
    EXPECT_TRUE(verify_differential(c).ok);
    // d(h21) = t31 t23 composes 2 -> 3 -> 1
    auto& dh = (*c.differential)[c.generator("h21")];
    EXPECT_EQ(c.str(dh), "t31 t23");
}

TEST(Presentation, DTildeTruncated) {
    EXPECT_EQ(d_tilde_truncated(2).generators.size(), 6u);
    for (int L = 2; L <= 6; ++L) {
        auto c = d_tilde_truncated(L);
        EXPECT_EQ(c.generators.size(), 3u * L);
        EXPECT_TRUE(verify_differential(c).ok) << L;
    }
}

TEST(Presentation, DTildeProjection) {
    EXPECT_TRUE(verify_d_tilde_projection(6, 3).ok);
    // Generators of length four map to zero while their differential hits
    // products of homotopies that survive in D-bar.
    EXPECT_FALSE(verify_d_tilde_projection(6, 4).ok);
}

TEST(Presentation, PuncturedSphereHoms) {
    auto c = presentation(punctured_sphere(2));
    auto t = hom_dims(c, 8);
    EXPECT_EQ(t.total(), 5);
    EXPECT_EQ(t.dim(c.object("I1"), c.object("I1")), 2);
    EXPECT_EQ(t.dim(c.object("J1"), c.object("J1")), 1);
}

TEST(Presentation, SurfaceFamilyZeroComposites) {
    // All relations are monomials of length two, so the surviving length-two
    // paths are exactly the composable pairs that are not relations.
    for (int n = 2; n <= 5; ++n) {
        auto c = presentation(punctured_sphere(n));
        auto t = hom_dims(c, 12);
        EXPECT_EQ(reps_of_length(t, 2), composable_pairs(c) - static_cast<int>(c.relations.size())) << n;
    }
    for (int g = 1; g <= 4; ++g) {
        auto c = presentation(genus_surface(g));
        EXPECT_EQ(c.relations.size(), static_cast<std::size_t>(2 * g + 2 * (g - 1)));
        auto t = hom_dims(c, 16);
        EXPECT_EQ(reps_of_length(t, 2), composable_pairs(c) - static_cast<int>(c.relations.size())) << g;
    }
}

TEST(Presentation, RelationOrderIrrelevant) {
    std::mt19937 rng(7);
    for (int n = 3; n <= 5; ++n) {
        auto c = presentation(zigzag(n));
        auto base = hom_dims(c, 2 * n + 2).dims;
        for (int k = 0; k < 4; ++k) {
            std::shuffle(c.relations.begin(), c.relations.end(), rng);
            EXPECT_EQ(hom_dims(c, 2 * n + 2).dims, base);
        }
    }
}

TEST(Presentation, CapExceeded) {
    PresentedCategory c;
    int o = c.add_object("x");
    c.add_generator("l", o, o);
    EXPECT_THROW(hom_dims(c, 5), CapExceeded);
}

TEST(Presentation, IllTypedRelationRejected) {
    auto c = d_bar();
    c.relations.push_back(c.poly("t12 + t23"));
    EXPECT_THROW(hom_dims(c, 4), InvalidInput);
}

TEST(K0, GenusExteriorAlgebra) {
    for (int g = 1; g <= 6; ++g) {
        auto r = k0_genus(g);
        EXPECT_EQ(r.dim, 1 << (2 * g));
        EXPECT_EQ(r.relation_rank, 0);
        ASSERT_EQ(r.graded.size(), static_cast<std::size_t>(2 * g + 1));
        for (int c = 0; c <= 2 * g; ++c) {
            EXPECT_EQ(r.graded[c].first, 2 * g - 2 * c);
            EXPECT_EQ(r.graded[c].second, binom(2 * g, c));
        }
    }
}

TEST(K0, GradingMatchesElementarySubsets) {
    for (int g = 1; g <= 4; ++g)
        for (auto& e : elementary_subsets(genus_surface(g)))
            EXPECT_EQ(e.euler, 2 * g - 2 * __builtin_popcount(e.handles));
}
