#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "contact/dividing_set.hpp"

namespace contact {

// A walk f0 c1 f1 c2 f2 c3 f3 in the face tree. Essential equators are
// injective paths. A walk that backtracks once crosses one chord twice;
// low_first says whether the earlier of those two crossings is the one
// nearer the chord's lower endpoint.
struct Equator {
    std::array<int, 4> faces{};
    std::array<Chord, 3> chords{};
    bool low_first = true;

    bool essential() const {
        return chords[0] != chords[1] && chords[1] != chords[2] && chords[0] != chords[2];
    }
    bool operator==(const Equator& o) const {
        return faces == o.faces && chords == o.chords && low_first == o.low_first;
    }
};

enum class BypassKind { Essential, IdentityCapped, ZeroCapped };

inline const char* kind_name(BypassKind k) {
    switch (k) {
        case BypassKind::Essential: return "essential";
        case BypassKind::IdentityCapped: return "identity-capped";
        case BypassKind::ZeroCapped: return "zero-capped";
    }
    return "?";
}

struct BypassTriangle {
    DividingSet gamma0, gamma1, gamma2;  // patterns C, A, B
    Equator equator;
};

enum class Pattern { C, A, B };

inline std::vector<Equator> enumerate_equators(const DividingSet& d) {
    auto t = faces(d);
    std::vector<Equator> out;
    const int F = static_cast<int>(t.size());
    for (int f0 = 0; f0 < F; ++f0)
        for (auto [e1, f1] : t.neighbours(f0))
            for (auto [e2, f2] : t.neighbours(f1)) {
                if (f2 == f0) continue;
                for (auto [e3, f3] : t.neighbours(f2)) {
                    if (f3 == f1 || f0 >= f3) continue;
                    out.push_back({{f0, f1, f2, f3}, {t.edges[e1].chord, t.edges[e2].chord, t.edges[e3].chord}, true});
                }
            }
    return out;
}

// All walks with at most one backtrack; backtracking walks appear with both
// crossing orders.
inline std::vector<Equator> enumerate_walks(const DividingSet& d) {
    auto t = faces(d);
    std::vector<Equator> out;
    const int F = static_cast<int>(t.size());
    for (int f0 = 0; f0 < F; ++f0)
        for (auto [e1, f1] : t.neighbours(f0))
            for (auto [e2, f2] : t.neighbours(f1))
                for (auto [e3, f3] : t.neighbours(f2)) {
                    int backs = (f2 == f0) + (f3 == f1);
                    Equator e{{f0, f1, f2, f3}, {t.edges[e1].chord, t.edges[e2].chord, t.edges[e3].chord}, true};
                    if (backs == 0) {
                        if (f0 < f3) out.push_back(e);
                    } else if (backs == 1) {
                        out.push_back(e);
                        e.low_first = false;
                        out.push_back(e);
                    }
                }
    return out;
}

namespace detail {

inline void check_walk(const FaceTree& t, const Equator& e) {
    for (int k = 0; k < 3; ++k) {
        int idx = t.edge_of(e.chords[k]);
        if (idx < 0) throw InvalidEquator("equator crosses a chord that is not in the dividing set");
        auto& ed = t.edges[idx];
        bool ok = (ed.outside == e.faces[k] && ed.inside == e.faces[k + 1]) ||
                  (ed.inside == e.faces[k] && ed.outside == e.faces[k + 1]);
        if (!ok) throw InvalidEquator("equator faces do not match its chords");
    }
    if (e.faces[0] == e.faces[2] && e.faces[1] == e.faces[3])
        throw InvalidEquator("walk backtracks twice");
}

}  // namespace detail

// Cut the crossed chords at the crossing points and reglue the half-chords.
// Crossing a chord (a,b) from its outside face to its inside face, the left
// half is the one toward a; crossing back, the left half is the one toward b.
inline DividingSet surgery(const DividingSet& d, const Equator& e, Pattern pat) {
    auto t = faces(d);
    detail::check_walk(t, e);
    if (pat == Pattern::C) return d;
    const int N = 2 * d.n();
    // node ids: boundary points 1..N, half-ends N+1+2k (toward a), N+2+2k (toward b)
    auto half = [N](int k, bool toward_b) { return N + 1 + 2 * k + (toward_b ? 1 : 0); };
    const int V = N + 7;
    std::vector<std::vector<int>> adj(V);
    auto link = [&](int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    std::array<bool, 3> left_toward_b{};
    for (int k = 0; k < 3; ++k) {
        auto& ed = t.edges[t.edge_of(e.chords[k])];
        bool out_to_in = ed.outside == e.faces[k];
        left_toward_b[k] = !out_to_in;
    }
    std::set<Chord> crossed(e.chords.begin(), e.chords.end());
    for (auto c : d.pairs()) {
        if (!crossed.count(c)) {
            link(c.first, c.second);
            continue;
        }
        std::vector<int> ks;
        for (int k = 0; k < 3; ++k)
            if (e.chords[k] == c) ks.push_back(k);
        if (ks.size() == 2 && !e.low_first) std::swap(ks[0], ks[1]);
        int prev = c.first;
        for (int k : ks) {
            link(prev, half(k, false));
            prev = half(k, true);
        }
        link(prev, c.second);
    }
    auto L = [&](int k) { return half(k, left_toward_b[k]); };
    auto R = [&](int k) { return half(k, !left_toward_b[k]); };
    if (pat == Pattern::A) {
        link(L(0), L(1));
        link(L(2), R(0));
        link(R(1), R(2));
    } else {
        link(L(1), L(2));
        link(R(0), R(1));
        link(L(0), R(2));
    }
    std::vector<bool> seen(V, false);
    std::vector<Chord> pairs;
    for (int s = 1; s <= N; ++s) {
        if (seen[s]) continue;
        int prev = -1, v = s;
        seen[v] = true;
        while (true) {
            int next = adj[v][0] == prev ? adj[v][1] : adj[v][0];
            prev = v;
            v = next;
            seen[v] = true;
            if (v <= N) break;
        }
        pairs.emplace_back(std::min(s, v), std::max(s, v));
    }
    int circles = 0;
    for (int v = N + 1; v < V; ++v) {
        if (seen[v]) continue;
        ++circles;
        int prev = -1, cur = v;
        while (!seen[cur]) {
            seen[cur] = true;
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
    }
    return DividingSet(d.n(), pairs, d.circles() + circles, d.sign());
}

inline DividingSet apply_bypass(const DividingSet& d, const Equator& e) { return surgery(d, e, Pattern::A); }

inline BypassTriangle bypass_triangle(const DividingSet& d, const Equator& e) {
    if (!e.essential()) throw InvalidEquator("triangle needs an essential equator");
    return {d, surgery(d, e, Pattern::A), surgery(d, e, Pattern::B), e};
}

inline BypassKind classify(const DividingSet& d, const Equator& e) {
    if (e.essential()) return BypassKind::Essential;
    auto r = apply_bypass(d, e);
    if (r.is_zero()) return BypassKind::ZeroCapped;
    if (r.same_matching(d)) return BypassKind::IdentityCapped;
    throw InvalidEquator("capped walk produced a different circle-free dividing set: " + r.str());
}

inline bool are_disjoint(const Equator& a, const Equator& b) {
    for (auto& x : a.chords)
        for (auto& y : b.chords)
            if (x == y) return false;
    return true;
}

// Find the equator with the same chord sequence (either direction) on d.
inline std::optional<Equator> transport(const DividingSet& d, const Equator& e) {
    auto rev = e.chords;
    std::swap(rev[0], rev[2]);
    for (auto& c : enumerate_equators(d))
        if (c.chords == e.chords || c.chords == rev) return c;
    return std::nullopt;
}

inline bool commute_check(const DividingSet& d, const Equator& e1, const Equator& e2) {
    auto d1 = apply_bypass(d, e1);
    auto d2 = apply_bypass(d, e2);
    if (d1.is_zero() || d2.is_zero()) return d1.is_zero() && d2.is_zero();
    auto t2 = transport(d1, e2);
    auto t1 = transport(d2, e1);
    if (!t1 || !t2) throw NotTransportable("equator does not survive the other surgery");
    return apply_bypass(d1, *t2) == apply_bypass(d2, *t1);
}

}  // namespace contact
