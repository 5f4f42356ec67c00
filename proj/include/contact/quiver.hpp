#pragma once

#include <string>
#include <vector>

#include "contact/error.hpp"

namespace contact {

// Subsets of {1..n-1} are bitmasks with bit i standing for i.
using Subset = unsigned;

inline Subset full_subset(int n) { return n <= 1 ? 0u : (((1u << n) - 1u) & ~1u); }

inline std::string subset_str(Subset S) {
    std::string s = "{";
    bool first = true;
    for (int i = 1; i < 32; ++i)
        if (S >> i & 1u) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(i);
        }
    return s + "}";
}

inline std::vector<int> subset_elems(Subset S) {
    std::vector<int> v;
    for (int i = 1; i < 32; ++i)
        if (S >> i & 1u) v.push_back(i);
    return v;
}

struct Vertex {
    int n = 0;
    Subset S = 0;
    bool operator==(const Vertex& o) const { return n == o.n && S == o.S; }
    bool operator<(const Vertex& o) const { return n != o.n ? n < o.n : S < o.S; }
};

struct Arrow {
    int p = 0;
    Vertex source, target;
    bool operator==(const Arrow& o) const { return p == o.p && source == o.source && target == o.target; }
};

struct MorphismClass {
    Vertex source, target;
    bool operator==(const MorphismClass& o) const { return source == o.source && target == o.target; }
};

struct Quiver {
    int n = 0;
    std::vector<Vertex> vertices;
    std::vector<Arrow> arrows;
};

inline Quiver build_quiver(int n) {
    if (n < 2 || n > 31) throw InvalidInput("quiver needs 2 <= n <= 31");
    Quiver q;
    q.n = n;
    for (Subset S = 0; S <= full_subset(n); S += 2) {
        q.vertices.push_back({n, S});
    }
    for (auto v : q.vertices)
        for (int p = 1; p + 1 <= n - 1; ++p) {
            Subset pair = (1u << p) | (1u << (p + 1));
            if (v.S & pair) continue;
            q.arrows.push_back({p, v, {n, v.S | pair}});
        }
    return q;
}

// Zero unless S is contained in T and every maximal run of T \ S has even length.
inline int hom_dim(Subset S, Subset T) {
    if ((S & T) != S) return 0;
    Subset D = T & ~S;
    while (D) {
        int lo = __builtin_ctz(D);
        int len = 0;
        while (D >> (lo + len) & 1u) ++len;
        if (len % 2) return 0;
        D &= ~(((1u << len) - 1u) << lo);
    }
    return 1;
}

inline int hom_dim(const Vertex& a, const Vertex& b) {
    if (a.n != b.n) throw DimensionMismatch("vertices of different quivers");
    return hom_dim(a.S, b.S);
}

inline MorphismClass morphism(const Vertex& a, const Vertex& b) {
    if (!hom_dim(a, b)) throw IllegalEntry("no morphism " + subset_str(a.S) + " -> " + subset_str(b.S));
    return {a, b};
}

inline MorphismClass identity_morphism(const Vertex& v) { return {v, v}; }

inline MorphismClass arrow_class(const Arrow& a) { return {a.source, a.target}; }

// f first, then g.
inline MorphismClass compose(const MorphismClass& f, const MorphismClass& g) {
    if (!(f.target == g.source)) throw NotComposable("morphisms are not composable");
    return morphism(f.source, g.target);
}

inline Vertex tian_dual(const Vertex& v) { return {v.n, full_subset(v.n) & ~v.S}; }

inline Arrow tian_dual(const Arrow& a) { return {a.p, tian_dual(a.target), tian_dual(a.source)}; }

}  // namespace contact
