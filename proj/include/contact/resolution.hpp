#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "contact/bypass.hpp"
#include "contact/nil_tl.hpp"
#include "contact/twisted_complex.hpp"

namespace contact {

// The cocore of handle k is an arc between two boundary gaps.
struct Cocore {
    int p = 0;
    int g1 = 0, g2 = 0;  // g1 < g2
};

inline std::vector<Cocore> cocores(int n) {
    std::vector<Cocore> out;
    for (int k = 1; k < n; ++k) {
        int a = 2 * ((k + 1) / 2);
        int b = (2 * n - 2 * (k / 2)) % (2 * n);
        out.push_back({k, std::min(a, b), std::max(a, b)});
    }
    return out;
}

// A chord meets the arc between gaps lo < hi once iff exactly one endpoint
// lies in lo+1..hi; non-crossing chords are already in minimal position.
inline int arc_intersection(const DividingSet& d, int lo, int hi) {
    int c = 0;
    for (auto [a, b] : d.pairs()) {
        bool ia = lo < a && a <= hi, ib = lo < b && b <= hi;
        c += ia != ib;
    }
    return c;
}

inline std::vector<int> cocore_intersections(const DividingSet& d) {
    if (d.is_zero()) throw ZeroObject("dividing set has a circle");
    std::vector<int> out;
    for (auto& c : cocores(d.n())) out.push_back(arc_intersection(d, c.g1, c.g2));
    return out;
}

inline int total_intersection(const DividingSet& d) {
    auto v = cocore_intersections(d);
    return std::accumulate(v.begin(), v.end(), 0);
}

// Negative faces beyond those accounted for by unoccupied handles; zero on
// elementary dividing sets.
inline int face_excess(const DividingSet& d) {
    auto t = faces(d);
    int odd = 0;
    for (auto& g : t.gaps) odd += g.front() % 2;
    int occupied = 0;
    for (int x : cocore_intersections(d)) occupied += x == 2;
    return odd - (d.n() - occupied);
}

inline Subset odd_handles(int n) {
    Subset s = 0;
    for (int k = 1; k < n; k += 2) s |= 1u << k;
    return s;
}

// Handle subset -> vertex e_S of the quiver.
inline Vertex mu_object(int n, Subset handles) { return {n, handles ^ odd_handles(n)}; }

inline Subset occupied_handles(const DividingSet& d) {
    Subset h = 0;
    auto v = cocore_intersections(d);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] == 2) h |= 1u << (k + 1);
    return h;
}

namespace detail {

inline const std::map<std::vector<Chord>, Subset>& elementary_table(int n) {
    static std::mutex mu;
    static std::map<int, std::map<std::vector<Chord>, Subset>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto& t = cache[n];
    for (Subset S = 0; S <= full_subset(n); S += 2) t[gamma_of_subset(n, S).pairs()] = S;
    return t;
}

}  // namespace detail

inline std::optional<Subset> is_elementary(const DividingSet& d) {
    if (d.is_zero()) throw ZeroObject("dividing set has a circle");
    auto& t = detail::elementary_table(d.n());
    auto it = t.find(d.pairs());
    if (it == t.end()) return std::nullopt;
    return it->second;
}

struct ResolutionStep {
    DividingSet input;
    Equator equator;
    DividingSet a, b;  // input is the cone of the map a -> b
    int phase = 0;
};

struct Resolution {
    DividingSet input;
    TwistedComplex complex;
    std::vector<ResolutionStep> log;
};

// Equators usable at d, in the order resolve considers them.
inline std::vector<Equator> resolving_equators(const DividingSet& d, int* phase_out = nullptr) {
    auto I = cocore_intersections(d);
    const int total = std::accumulate(I.begin(), I.end(), 0);
    int bad = -1;
    for (std::size_t k = 0; k < I.size(); ++k)
        if (I[k] > 2) {
            bad = static_cast<int>(k);
            break;
        }
    const int ex = bad < 0 ? face_excess(d) : 0;
    std::vector<Equator> out;
    for (auto& e : enumerate_equators(d)) {
        auto A = surgery(d, e, Pattern::A);
        auto B = surgery(d, e, Pattern::B);
        if (A.is_zero() || B.is_zero()) continue;
        if (total_intersection(A) >= total || total_intersection(B) >= total) continue;
        if (bad >= 0) {
            auto c = cocores(d.n())[bad];
            bool parallel = true;
            for (auto& ch : e.chords) {
                bool ia = c.g1 < ch.first && ch.first <= c.g2, ib = c.g1 < ch.second && ch.second <= c.g2;
                parallel = parallel && ia != ib;
            }
            if (!parallel) continue;
        } else if (face_excess(A) >= ex || face_excess(B) >= ex) {
            continue;
        }
        out.push_back(e);
    }
    if (phase_out) *phase_out = bad >= 0 ? 1 : 2;
    return out;
}

namespace detail {

struct Resolver {
    int strategy = 0;
    std::map<DividingSet, TwistedComplex> memo;
    std::vector<ResolutionStep> log;

    TwistedComplex run(const DividingSet& d) {
        const int n = d.n();
        if (d.is_zero()) return zero_complex(n);
        if (auto S = is_elementary(d)) return single(n, *S);
        auto it = memo.find(d);
        if (it != memo.end()) return it->second;
        int phase = 0;
        auto eqs = resolving_equators(d, &phase);
        if (eqs.empty()) throw NonTermination("no measure-decreasing equator at " + d.str());
        auto e = eqs[static_cast<std::size_t>(strategy) % eqs.size()];
        auto A = surgery(d, e, Pattern::A);
        auto B = surgery(d, e, Pattern::B);
        log.push_back({d, e, A, B, phase});
        auto XA = run(A);
        auto XB = run(B);
        auto h = hom_complex(XA, XB);
        BitMatrix F(XA.size(), XB.size());
        if (XA.size() && XB.size()) {
            auto reps = homology_basis(h);
            if (reps.size() != 1)
                throw NonTermination("splice map is not unique at " + d.str() + " (homology dimension " +
                                     std::to_string(reps.size()) + ")");
            F = h.to_matrix(reps[0], XA.size(), XB.size());
        }
        auto X = cone(TCMorphism{XA, XB, F});
        memo.emplace(d, X);
        return X;
    }
};

}  // namespace detail

inline Resolution resolve(const DividingSet& d, int strategy = 0) {
    if (d.sign() < 0) throw InvalidInput("resolve works in the positive half (basepoint sign +)");
    detail::Resolver r{strategy, {}, {}};
    auto X = r.run(d);
    return {d, X, std::move(r.log)};
}

inline std::vector<int> k0_class(int n, const TwistedComplex& x) {
    std::vector<int> v(std::size_t{1} << (n - 1), 0);
    for (auto S : x.objects) v[S >> 1] ^= 1;
    return v;
}

inline std::vector<int> k0_class(const Resolution& r) { return k0_class(r.input.n(), r.complex); }

}  // namespace contact
