#include <gtest/gtest.h>

#include <set>

#include "contact/arc_diagram.hpp"
#include "contact/resolution.hpp"

using namespace contact;

namespace {

Subset handles_of(const PresentedCategory& c, int o, int n) {
    for (Subset H = 0; H < (1u << n); H += 2)
        if (detail::handle_set_name(H) == c.objects[o]) return H;
    ADD_FAILURE() << "unknown object " << c.objects[o];
    return 0;
}

}  // namespace

TEST(Arc, FamiliesValidate) {
    for (int n = 2; n <= 8; ++n) EXPECT_NO_THROW(validate(zigzag(n)));
    for (int g = 1; g <= 6; ++g) EXPECT_NO_THROW(validate(genus_surface(g)));
    for (int n = 2; n <= 6; ++n) EXPECT_NO_THROW(validate(punctured_sphere(n)));
}

TEST(Arc, Degenerate) {
    auto z = parse_arc_diagram("Z1: x x'");
    try {
        validate(z);
        FAIL() << "expected Degenerate";
    } catch (const Degenerate& e) {
        EXPECT_NE(std::string(e.what()).find("handles 1"), std::string::npos);
    }
    EXPECT_THROW(surface_invariants(z), Degenerate);
    // the same pair split across two segments is the annulus core
    EXPECT_NO_THROW(validate(parse_arc_diagram("Z1: x ; Z2: x'")));
}

TEST(Arc, ParserErrors) {
    EXPECT_THROW(parse_arc_diagram("Z1: x y"), InvalidInput);
    EXPECT_THROW(parse_arc_diagram("x x'"), InvalidInput);
    EXPECT_THROW(parse_arc_diagram("Z1: x x ; Z2: x'"), InvalidInput);
    auto z = parse_arc_diagram("Z1: p q ; Z2: r s\nmatch p s; match q r");
    EXPECT_EQ(z.k, 2);
    EXPECT_EQ(z.handle[0][0], z.handle[1][1]);
}

TEST(Arc, Invariants) {
    auto m5 = surface_invariants(zigzag(5));
    EXPECT_EQ(m5.euler_char, 1);
    EXPECT_EQ(m5.boundary_components, 1);
    EXPECT_EQ(m5.genus, 0);
    EXPECT_EQ(m5.marked_points, 10);

    auto z21 = surface_invariants(genus_surface(2));
    EXPECT_EQ(z21.euler_char, -3);
    EXPECT_EQ(z21.boundary_components, 1);
    EXPECT_EQ(z21.genus, 2);
    EXPECT_EQ(z21.marked_points, 2);

    auto z04 = surface_invariants(punctured_sphere(4));
    EXPECT_EQ(z04.euler_char, -2);
    EXPECT_EQ(z04.boundary_components, 4);
    EXPECT_EQ(z04.genus, 0);

    for (int n = 2; n <= 8; ++n) {
        auto s = surface_invariants(zigzag(n));
        EXPECT_EQ(s.genus, 0);
        EXPECT_EQ(s.boundary_components, 1);
        EXPECT_EQ(s.marked_points, 2 * n);
    }
    for (int g = 1; g <= 6; ++g) EXPECT_EQ(surface_invariants(genus_surface(g)).genus, g);
}

TEST(Arc, FamilyShapes) {
    auto z3 = zigzag(3);
    EXPECT_EQ(z3.str(), "Z1: a1 ; Z2: a2' a1' ; Z3: a2");
    EXPECT_EQ(zigzag(4).str(), "Z1: a1 ; Z2: a2' a1' ; Z3: a2 a3 ; Z4: a3'");
    auto s2 = punctured_sphere(2);
    EXPECT_EQ(s2.segments(), 2);
    EXPECT_EQ(s2.point_count(), 4);
    EXPECT_EQ(s2.k, 2);
    EXPECT_EQ(genus_surface(2).str(), "Z1: a1 b1 a1' b1' a2 b2 a2' b2'");
    EXPECT_THROW(zigzag(1), InvalidInput);
    EXPECT_THROW(punctured_sphere(1), InvalidInput);
    EXPECT_THROW(genus_surface(0), InvalidInput);
}

TEST(Arc, ElementarySubsets) {
    for (int n = 2; n <= 6; ++n) {
        auto z = zigzag(n);
        auto e = elementary_subsets(z);
        EXPECT_EQ(e.size(), std::size_t{1} << z.k);
    }
    auto e = elementary_subsets(genus_surface(2));
    ASSERT_EQ(e.size(), 16u);
    EXPECT_EQ(e[0].euler, 4);
    EXPECT_EQ(e[15].euler, -4);
}

TEST(Arc, ZigZagPresentationSmall) {
    // M_3: one chord rho_{1,2}, so one arrow {1} -> {2}
    auto c3 = presentation(zigzag(3));
    EXPECT_EQ(c3.objects.size(), 4u);
    ASSERT_EQ(c3.generators.size(), 1u);
    EXPECT_EQ(c3.objects[c3.generators[0].src], "h1");
    EXPECT_EQ(c3.objects[c3.generators[0].tgt], "h2");
    // M_4: chords rho_{1,2} and rho_{3,2} compete for handle 2, no squares
    auto c4 = presentation(zigzag(4));
    EXPECT_EQ(c4.objects.size(), 8u);
    EXPECT_EQ(c4.generators.size(), 4u);
    EXPECT_TRUE(c4.relations.empty());
    // M_5: rho_{1,2} and rho_{3,4} commute on {1,3}
    auto c5 = presentation(zigzag(5));
    ASSERT_EQ(c5.relations.size(), 1u);
    EXPECT_EQ(c5.relations[0].terms().size(), 2u);
}

TEST(Arc, ZigZagMatchesQuiver) {
    // Arrows of the zig-zag algebra and of the quiver biject under mu_object,
    // and every hom space has the same dimension.
    for (int n = 2; n <= 6; ++n) {
        auto c = presentation(zigzag(n));
        auto q = build_quiver(n);
        std::multiset<std::pair<Subset, Subset>> a, b;
        for (auto& g : c.generators)
            a.insert({mu_object(n, handles_of(c, g.src, n)).S, mu_object(n, handles_of(c, g.tgt, n)).S});
        for (auto& x : q.arrows) b.insert({x.source.S, x.target.S});
        EXPECT_EQ(a, b) << n;
        auto t = hom_dims(c, 4 * n);
        for (int x = 0; x < static_cast<int>(c.objects.size()); ++x)
            for (int y = 0; y < static_cast<int>(c.objects.size()); ++y)
                EXPECT_EQ(t.dim(x, y), hom_dim(mu_object(n, handles_of(c, x, n)).S, mu_object(n, handles_of(c, y, n)).S))
                    << n << " " << c.objects[x] << " " << c.objects[y];
    }
}

TEST(Arc, UnsupportedFamily) {
    EXPECT_THROW(presentation(parse_arc_diagram("Z1: x ; Z2: x'")), UnsupportedFamily);
}
