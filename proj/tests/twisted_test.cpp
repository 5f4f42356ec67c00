#include <gtest/gtest.h>

#include <random>

#include "contact/twisted_complex.hpp"

using namespace contact;

namespace {

const Subset E = 0, E12 = 0b110, E123 = 0b1110;

BitMatrix mat(std::size_t n, std::initializer_list<std::pair<int, int>> ones) {
    BitMatrix m(n, n);
    for (auto [i, j] : ones) m.set(i, j);
    return m;
}

TwistedComplex cone_theta1() { return make_complex(3, {E, E12}, mat(2, {{0, 1}})); }

// Random one-sided complex with p^2 = 0, built by adding entries greedily.
TwistedComplex random_complex(std::mt19937& rng, int n, std::size_t k) {
    std::vector<Subset> objs;
    for (std::size_t i = 0; i < k; ++i) objs.push_back((rng() % (1u << (n - 1))) << 1);
    BitMatrix p(k, k);
    for (int tries = 0; tries < 12; ++tries) {
        std::size_t i = rng() % k, j = rng() % k;
        if (j <= i || !hom_dim(objs[i], objs[j]) || p.get(i, j)) continue;
        p.set(i, j);
        if (!(p * p).is_zero()) p.set(i, j, false);
    }
    return make_complex(n, objs, p);
}

}  // namespace

TEST(Twisted, Make) {
    EXPECT_NO_THROW(single(3, E));
    EXPECT_NO_THROW(cone_theta1());
    EXPECT_THROW(make_complex(3, {E, E12, E12}, mat(3, {{0, 1}, {1, 2}})), MaurerCartanViolation);
    EXPECT_THROW(make_complex(3, {E12, E}, mat(2, {{1, 0}})), NotOneSided);
    EXPECT_THROW(make_complex(4, {E, E123}, mat(2, {{0, 1}})), IllegalEntry);
}

TEST(Twisted, HomComplexOfConeTheta1) {
    auto c = cone_theta1();
    auto h = hom_complex(c, c);
    ASSERT_EQ(h.basis, (std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}}));
    // columns are images: (0,0) -> (0,1), (1,1) -> (0,1), (0,1) -> 0
    EXPECT_TRUE(h.d.get(1, 0));
    EXPECT_TRUE(h.d.get(1, 2));
    EXPECT_EQ(rank(h.d), 1u);
    EXPECT_FALSE(h.d.get(0, 1) || h.d.get(1, 1) || h.d.get(2, 1));
    EXPECT_EQ(homology_dim(c, c), 1u);
}

TEST(Twisted, HomologyExamples) {
    EXPECT_EQ(homology_dim(single(3, E), single(3, E)), 1u);
    EXPECT_EQ(homology_dim(single(4, E), single(4, E123)), 0u);
    EXPECT_EQ(hom_complex(single(4, E), single(4, E123)).basis.size(), 0u);
}

TEST(Twisted, Cones) {
    auto x = single(3, E);
    auto c = cone(identity(x));
    EXPECT_EQ(c.objects, (std::vector<Subset>{E, E}));
    EXPECT_TRUE(c.p.get(0, 1));
    BitMatrix t(1, 1);
    t.set(0, 0);
    EXPECT_EQ(cone(make_morphism(x, single(3, E12), t)), cone_theta1());
    auto z = cone(zero_morphism(x, single(3, E12)));
    EXPECT_TRUE(z.p.is_zero());
    EXPECT_EQ(z.size(), 2u);
    // the map onto the head of cone(theta1) is not closed
    BitMatrix bad(1, 2);
    bad.set(0, 0);
    EXPECT_THROW(cone(make_morphism(single(3, E), cone_theta1(), bad)), NotClosed);
}

TEST(Twisted, Contractible) {
    EXPECT_TRUE(is_contractible(cone(identity(single(3, E)))));
    EXPECT_FALSE(is_contractible(single(3, E)));
    EXPECT_FALSE(is_contractible(cone_theta1()));
    EXPECT_TRUE(is_contractible(zero_complex(3)));
}

TEST(Twisted, HomotopyEquivalence) {
    auto x = cone_theta1();
    EXPECT_TRUE(is_homotopy_equivalence(identity(x)));
    EXPECT_FALSE(is_homotopy_equivalence(zero_morphism(x, x)));
    BitMatrix inc(1, 2);
    inc.set(0, 1);
    auto f = make_morphism(single(3, E12), x, inc);
    ASSERT_TRUE(is_closed(f));
    EXPECT_FALSE(is_homotopy_equivalence(f));
}

TEST(Twisted, DistinguishedTriangles) {
    auto x = single(3, E), y = single(3, E12);
    BitMatrix t(1, 1);
    t.set(0, 0);
    auto f = make_morphism(x, y, t);
    auto c = cone(f);
    auto g = cone_inclusion(f), h = cone_projection(f);
    EXPECT_TRUE(is_distinguished(x, y, c, f, g, h));

    // z = x + y with the inclusion of y: not a triangle when f != 0
    auto s = direct_sum(x, y);
    BitMatrix inc(1, 2);
    inc.set(0, 1);
    auto g2 = make_morphism(y, s, inc);
    BitMatrix pr(2, 1);
    pr.set(0, 0);
    auto h2 = make_morphism(s, x, pr);
    EXPECT_FALSE(is_distinguished(x, y, s, f, g2, h2));
    // with f = 0 it is split, hence distinguished
    EXPECT_TRUE(is_distinguished(x, y, s, zero_morphism(x, y), g2, h2));

    // rotation: (y, cone, x) with maps g, h, and the connecting map back
    auto fr = make_morphism(c, x, h.f);
    EXPECT_TRUE(is_distinguished(y, c, x, g, fr, f));
}

TEST(Twisted, GaussianElimination) {
    EXPECT_EQ(gaussian_eliminate(cone(identity(single(3, E)))).size(), 0u);
    EXPECT_EQ(gaussian_eliminate(cone_theta1()), cone_theta1());
    // [e, {1,2}, {1,2}, {1,2,3,4}]: cancelling the middle identity leaves the
    // composite of theta1 and theta3.
    const Subset E1234 = 0b11110;
    auto x = make_complex(5, {E, E12, E12, E1234}, mat(4, {{0, 2}, {1, 2}, {1, 3}}));
    auto r = gaussian_eliminate(x);
    EXPECT_EQ(r, make_complex(5, {E, E1234}, mat(2, {{0, 1}})));
    EXPECT_EQ(homology_dim(r, r), homology_dim(x, x));
    EXPECT_EQ(homology_dim(single(5, E), r), homology_dim(single(5, E), x));
}

TEST(Twisted, Properties) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto x = random_complex(rng, n, 1 + rng() % 5);
        auto y = random_complex(rng, n, 1 + rng() % 5);
        auto h = hom_complex(x, y);
        EXPECT_TRUE((h.d * h.d).is_zero());
        auto gx = gaussian_eliminate(x);
        EXPECT_TRUE((gx.p * gx.p).is_zero());
        EXPECT_EQ(homology_dim(gx, y), homology_dim(x, y));
        EXPECT_EQ(homology_dim(x, gaussian_eliminate(y)), homology_dim(x, y));
        EXPECT_EQ(is_contractible(direct_sum(x, y)), is_contractible(x) && is_contractible(y));
        for (std::size_t i = 0; i < gx.size(); ++i)
            for (std::size_t j = 0; j < gx.size(); ++j)
                if (gx.p.get(i, j)) {
                    EXPECT_NE(gx.objects[i], gx.objects[j]);
                }
    }
}
