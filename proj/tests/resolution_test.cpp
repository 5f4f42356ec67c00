#include <gtest/gtest.h>

#include <set>

#include "contact/k0.hpp"
#include "contact/resolution.hpp"

using namespace contact;

namespace {

DividingSet g(int n, std::vector<int> w) { return gamma_of_monomial(NilTLMonomial{n, std::move(w)}); }

// Sum of k0 vectors along the triangle log: [d] = [a] + [b] at every step.
std::vector<int> k0_from_log(const DividingSet& d, const std::map<DividingSet, ResolutionStep>& steps) {
    const int n = d.n();
    std::vector<int> v(std::size_t{1} << (n - 1), 0);
    if (d.is_zero()) return v;
    if (auto S = is_elementary(d)) {
        v[*S >> 1] = 1;
        return v;
    }
    auto& st = steps.at(d);
    auto a = k0_from_log(st.a, steps), b = k0_from_log(st.b, steps);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] ^ b[i];
    return v;
}

}  // namespace

TEST(Resolution, CocoreCalibrationIsUnique) {
    // Search every gap pair for each handle: only the chosen one meets
    // gamma(e_S) twice exactly when the handle is occupied (S xor odd).
    for (int n = 2; n <= 6; ++n) {
        auto cs = cocores(n);
        for (int k = 1; k < n; ++k) {
            std::vector<std::pair<int, int>> hits;
            for (int a = 0; a < 2 * n; ++a)
                for (int b = a + 1; b < 2 * n; ++b) {
                    bool ok = true;
                    for (Subset S = 0; S <= full_subset(n) && ok; S += 2) {
                        bool occ = (S ^ odd_handles(n)) >> k & 1u;
                        ok = arc_intersection(gamma_of_subset(n, S), a, b) == (occ ? 2 : 0);
                    }
                    if (ok) hits.emplace_back(a, b);
                }
            ASSERT_EQ(hits.size(), 1u) << "n=" << n << " k=" << k;
            EXPECT_EQ(hits[0], std::make_pair(cs[k - 1].g1, cs[k - 1].g2));
        }
    }
}

TEST(Resolution, ElementaryCharacterisation) {
    for (int n = 2; n <= 7; ++n)
        for (auto& d : enumerate_matchings(n)) {
            auto I = cocore_intersections(d);
            bool small = std::all_of(I.begin(), I.end(), [](int x) { return x == 0 || x == 2; });
            bool el = is_elementary(d).has_value();
            EXPECT_EQ(el, small && face_excess(d) == 0) << d.str();
            if (el) {
                EXPECT_EQ(occupied_handles(d), *is_elementary(d) ^ odd_handles(n));
            }
        }
}

TEST(Resolution, IsElementaryExamples) {
    EXPECT_EQ(*is_elementary(g(3, {1, 2})), 0b110u);
    EXPECT_FALSE(is_elementary(g(3, {2, 1})));
    EXPECT_EQ(*is_elementary(g(3, {})), 0u);
    EXPECT_TRUE(cocore_intersections(DividingSet(1, {{1, 2}})).empty());
    auto I = cocore_intersections(g(3, {2, 1}));
    bool violates = std::any_of(I.begin(), I.end(), [](int x) { return x > 2; }) || face_excess(g(3, {2, 1})) != 0;
    EXPECT_TRUE(violates);
}

TEST(Resolution, Anchor) {
    auto r = resolve(g(3, {2, 1}));
    auto m = gaussian_eliminate(r.complex);
    BitMatrix p(2, 2);
    p.set(0, 1);
    EXPECT_EQ(m, make_complex(3, {0u, 0b110u}, p));
    EXPECT_EQ(k0_class(r), (std::vector<int>{1, 0, 0, 1}));
}

TEST(Resolution, ElementaryAndZero) {
    for (int n = 1; n <= 5; ++n)
        for (Subset S = 0; S <= full_subset(n); S += 2) {
            auto r = resolve(gamma_of_subset(n, S));
            EXPECT_EQ(r.complex, single(n, S));
            EXPECT_TRUE(r.log.empty());
            auto k = k0_class(r);
            for (std::size_t i = 0; i < k.size(); ++i) EXPECT_EQ(k[i], i == (S >> 1) ? 1 : 0);
        }
    EXPECT_EQ(resolve(g(3, {1, 1})).complex.size(), 0u);
}

TEST(Resolution, AllMatchings) {
    for (int n = 1; n <= 5; ++n)
        for (auto& d : enumerate_matchings(n)) {
            auto r = resolve(d);
            auto& x = r.complex;
            EXPECT_TRUE((x.p * x.p).is_zero());
            EXPECT_NO_THROW(make_complex(n, x.objects, x.p));
            EXPECT_EQ(homology_dim(x, x), 1u) << d.str();
            std::map<DividingSet, ResolutionStep> steps;
            for (auto& s : r.log) {
                steps.emplace(s.input, s);
                auto before = total_intersection(s.input);
                EXPECT_LT(total_intersection(s.a), before);
                EXPECT_LT(total_intersection(s.b), before);
                if (s.phase == 2) {
                    EXPECT_LT(face_excess(s.a), face_excess(s.input));
                    EXPECT_LT(face_excess(s.b), face_excess(s.input));
                }
            }
            EXPECT_EQ(k0_class(r), k0_from_log(d, steps));
        }
}

TEST(Resolution, StrategyIndependence) {
    for (int n = 2; n <= 4; ++n)
        for (auto& d : enumerate_matchings(n)) {
            auto base = resolve(d, 0);
            for (int s = 1; s < 4; ++s) {
                auto alt = resolve(d, s);
                EXPECT_EQ(k0_class(alt), k0_class(base));
                for (Subset T = 0; T <= full_subset(n); T += 2) {
                    EXPECT_EQ(homology_dim(single(n, T), alt.complex), homology_dim(single(n, T), base.complex));
                    EXPECT_EQ(homology_dim(alt.complex, single(n, T)), homology_dim(base.complex, single(n, T)));
                }
            }
        }
}

TEST(Resolution, MuObject) {
    for (int n = 2; n <= 6; ++n) {
        std::set<Subset> img;
        for (Subset H = 0; H <= full_subset(n); H += 2) img.insert(mu_object(n, H).S);
        EXPECT_EQ(img.size(), std::size_t{1} << (n - 1));
        EXPECT_EQ(mu_object(n, odd_handles(n)).S, 0u);
    }
    EXPECT_EQ(mu_object(3, 0b10).S, 0u);
    // arrows: an odd handle k moving to k+1 or k-1 is theta
    EXPECT_EQ(mu_object(3, 0b100).S, 0b110u);
}

TEST(K0, DiskTriangles) {
    // The triangle quotient has dimension 2^(n-1), and k0_class of the
    // resolution kills every triangle relation.
    for (int n = 1; n <= 5; ++n) {
        auto r = k0_disk(n);
        EXPECT_EQ(r.dim, 1 << (n - 1)) << n;
        int sum = 0;
        for (auto& [e, k] : r.graded) sum += k;
        EXPECT_EQ(sum, r.dim);
    }
    for (int n = 2; n <= 4; ++n)
        for (auto& d : enumerate_matchings(n))
            for (auto& e : enumerate_equators(d)) {
                if (!e.essential()) continue;
                auto t = bypass_triangle(d, e);
                std::vector<int> acc(std::size_t{1} << (n - 1), 0);
                for (auto* x : {&t.gamma0, &t.gamma1, &t.gamma2}) {
                    auto v = k0_class(resolve(*x));
                    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= v[i];
                }
                EXPECT_EQ(acc, std::vector<int>(acc.size(), 0)) << d.str();
            }
}
