#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contact/gf2.hpp"
#include "contact/quiver.hpp"

namespace contact {

// Objects of the pretriangulated hull: a list of vertices e_S and a strictly
// upper-triangular twisting matrix p, p(i,j) meaning a component obj_i -> obj_j.
// Everything is ungraded over GF(2); the empty complex is the zero object.
struct TwistedComplex {
    int n = 0;
    std::vector<Subset> objects;
    BitMatrix p;

    std::size_t size() const { return objects.size(); }
    bool operator==(const TwistedComplex& o) const { return n == o.n && objects == o.objects && p == o.p; }
};

inline TwistedComplex make_complex(int n, std::vector<Subset> objects, const BitMatrix& p) {
    const std::size_t k = objects.size();
    if (p.rows() != k || p.cols() != k) throw DimensionMismatch("twisting matrix has wrong shape");
    for (auto S : objects)
        if (S & ~full_subset(n)) throw InvalidInput("object " + subset_str(S) + " outside {1..n-1}");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!p.get(i, j)) continue;
            if (j <= i) throw NotOneSided("twisting entry (" + std::to_string(i) + "," + std::to_string(j) + ") not above the diagonal");
            if (!hom_dim(objects[i], objects[j]))
                throw IllegalEntry("no morphism " + subset_str(objects[i]) + " -> " + subset_str(objects[j]));
        }
    if (!(p * p).is_zero()) throw MaurerCartanViolation("p^2 != 0");
    return TwistedComplex{n, std::move(objects), p};
}

inline TwistedComplex single(int n, Subset S) { return make_complex(n, {S}, BitMatrix(1, 1)); }

inline TwistedComplex zero_complex(int n) { return TwistedComplex{n, {}, BitMatrix(0, 0)}; }

// A morphism x -> y; f(i,j) is the coefficient of obj_i(x) -> obj_j(y).
struct TCMorphism {
    TwistedComplex source, target;
    BitMatrix f;
};

inline TCMorphism make_morphism(const TwistedComplex& x, const TwistedComplex& y, const BitMatrix& f) {
    if (f.rows() != x.size() || f.cols() != y.size()) throw DimensionMismatch("morphism matrix has wrong shape");
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (f.get(i, j) && !hom_dim(x.objects[i], y.objects[j]))
                throw IllegalEntry("no morphism " + subset_str(x.objects[i]) + " -> " + subset_str(y.objects[j]));
    return {x, y, f};
}

inline TCMorphism identity(const TwistedComplex& x) { return {x, x, BitMatrix::identity(x.size())}; }

inline TCMorphism zero_morphism(const TwistedComplex& x, const TwistedComplex& y) {
    return {x, y, BitMatrix(x.size(), y.size())};
}

// Row-vector convention: f then g is the matrix product f * g.
inline TCMorphism then(const TCMorphism& f, const TCMorphism& g) {
    if (!(f.target == g.source)) throw NotComposable("morphisms are not composable");
    return {f.source, g.target, f.f * g.f};
}

inline BitMatrix differential(const TCMorphism& f) { return f.f * f.target.p + f.source.p * f.f; }

inline bool is_closed(const TCMorphism& f) { return differential(f).is_zero(); }

struct HomComplex {
    std::vector<std::pair<int, int>> basis;
    BitMatrix d;  // column c is d(basis[c])

    int index(int i, int j) const {
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (basis[c] == std::make_pair(i, j)) return static_cast<int>(c);
        return -1;
    }
    BitVector to_vector(const BitMatrix& f) const {
        BitVector v(basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (f.get(basis[c].first, basis[c].second)) v.set(c);
        return v;
    }
    BitMatrix to_matrix(const BitVector& v, std::size_t rows, std::size_t cols) const {
        BitMatrix f(rows, cols);
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (v.get(c)) f.set(basis[c].first, basis[c].second);
        return f;
    }
};

inline HomComplex hom_complex(const TwistedComplex& x, const TwistedComplex& y) {
    if (x.n != y.n) throw DimensionMismatch("complexes over different n");
    HomComplex h;
    std::vector<std::vector<int>> idx(x.size(), std::vector<int>(y.size(), -1));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (hom_dim(x.objects[i], y.objects[j])) {
                idx[i][j] = static_cast<int>(h.basis.size());
                h.basis.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
    const std::size_t m = h.basis.size();
    h.d = BitMatrix(m, m);
    for (std::size_t c = 0; c < m; ++c) {
        auto [i, j] = h.basis[c];
        for (std::size_t k = 0; k < y.size(); ++k)
            if (y.p.get(j, k)) h.d.flip(idx[i][k], c);
        for (std::size_t a = 0; a < x.size(); ++a)
            if (x.p.get(a, i)) h.d.flip(idx[a][j], c);
    }
    return h;
}

inline std::size_t homology_dim(const HomComplex& h) {
    std::size_t r = rank(h.d);
    return h.basis.size() - 2 * r;
}

inline std::size_t homology_dim(const TwistedComplex& x, const TwistedComplex& y) {
    return homology_dim(hom_complex(x, y));
}

// Representatives of a basis of homology: kernel vectors taken in order,
// keeping each one that is independent of the image and earlier picks.
inline std::vector<BitVector> homology_basis(const HomComplex& h) {
    const std::size_t m = h.basis.size();
    SpanBasis span(m);
    auto dt = h.d.transpose();
    for (std::size_t c = 0; c < m; ++c) span.insert(dt.row(c));
    std::vector<BitVector> reps;
    for (auto& v : kernel_basis(h.d))
        if (span.insert(v)) reps.push_back(v);
    return reps;
}

inline TwistedComplex cone(const TCMorphism& f) {
    if (!is_closed(f)) throw NotClosed("cone of a non-closed morphism");
    const auto& x = f.source;
    const auto& y = f.target;
    const std::size_t a = x.size(), b = y.size();
    std::vector<Subset> objs = x.objects;
    objs.insert(objs.end(), y.objects.begin(), y.objects.end());
    BitMatrix p(a + b, a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j)
            if (x.p.get(i, j)) p.set(i, j);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j)
            if (y.p.get(i, j)) p.set(a + i, a + j);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            if (f.f.get(i, j)) p.set(i, a + j);
    return TwistedComplex{x.n, std::move(objs), p};
}

inline TwistedComplex direct_sum(const TwistedComplex& x, const TwistedComplex& y) {
    return cone(zero_morphism(x, y));
}

// Inclusion of the target into the cone, and projection of the cone onto the source.
inline TCMorphism cone_inclusion(const TCMorphism& f) {
    auto c = cone(f);
    BitMatrix m(f.target.size(), c.size());
    for (std::size_t j = 0; j < f.target.size(); ++j) m.set(j, f.source.size() + j);
    return {f.target, c, m};
}

inline TCMorphism cone_projection(const TCMorphism& f) {
    auto c = cone(f);
    BitMatrix m(c.size(), f.source.size());
    for (std::size_t i = 0; i < f.source.size(); ++i) m.set(i, i);
    return {c, f.source, m};
}

inline bool is_contractible(const TwistedComplex& x) {
    auto h = hom_complex(x, x);
    return solve(h.d, h.to_vector(BitMatrix::identity(x.size()))).has_value();
}

inline bool is_homotopy_equivalence(const TCMorphism& f) { return is_contractible(cone(f)); }

// Extend g : y -> z over cone(f : x -> y) by a null-homotopy H of f then g,
// and test contractibility of the double cone. H ranges over the solution
// set modulo boundaries (capped), so the answer does not hinge on one choice.
inline bool is_distinguished(const TwistedComplex& x, const TwistedComplex& y, const TwistedComplex& z,
                             const TCMorphism& f, const TCMorphism& g, const TCMorphism& h) {
    if (!(f.source == x && f.target == y && g.source == y && g.target == z && h.source == z && h.target == x))
        throw NotComposable("triangle maps do not match the objects");
    if (!is_closed(f) || !is_closed(g) || !is_closed(h)) throw NotClosed("triangle map is not closed");
    auto hz = hom_complex(x, z);
    auto fg = then(f, g).f;
    auto H0 = solve(hz.d, hz.to_vector(fg));
    if (!H0) return false;
    auto reps = homology_basis(hz);
    constexpr std::size_t kMaxClasses = 8;
    const std::size_t k = std::min(reps.size(), kMaxClasses);
    TCMorphism fm = f;
    auto C = cone(fm);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        BitVector hv = *H0;
        for (std::size_t t = 0; t < k; ++t)
            if (mask >> t & 1) hv ^= reps[t];
        auto H = hz.to_matrix(hv, x.size(), z.size());
        BitMatrix gt(C.size(), z.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < z.size(); ++j)
                if (H.get(i, j)) gt.set(i, j);
        for (std::size_t i = 0; i < y.size(); ++i)
            for (std::size_t j = 0; j < z.size(); ++j)
                if (g.f.get(i, j)) gt.set(x.size() + i, j);
        if (is_homotopy_equivalence(TCMorphism{C, z, gt})) return true;
    }
    return false;
}

namespace detail {

// Stable topological order of the nonzero entries of p, or nullopt on a cycle.
inline std::optional<std::vector<std::size_t>> topo_order(const BitMatrix& p) {
    const std::size_t k = p.rows();
    std::vector<int> indeg(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (p.get(i, j)) ++indeg[j];
    std::vector<std::size_t> order;
    std::vector<bool> done(k, false);
    while (order.size() < k) {
        std::size_t pick = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!done[i] && indeg[i] == 0) {
                pick = i;
                break;
            }
        if (pick == k) return std::nullopt;
        done[pick] = true;
        order.push_back(pick);
        for (std::size_t j = 0; j < k; ++j)
            if (p.get(pick, j)) --indeg[j];
    }
    return order;
}

}  // namespace detail

// Cancel identity components of p one at a time (lowest (i,j) first),
// with the zig-zag correction p'(a,b) = p(a,b) + p(a,j) p(i,b).
inline TwistedComplex gaussian_eliminate(const TwistedComplex& x) {
    TwistedComplex cur = x;
    bool progress = true;
    while (progress) {
        progress = false;
        const std::size_t k = cur.size();
        for (std::size_t i = 0; i < k && !progress; ++i)
            for (std::size_t j = i + 1; j < k && !progress; ++j) {
                if (!cur.p.get(i, j) || cur.objects[i] != cur.objects[j]) continue;
                std::vector<std::size_t> keep;
                for (std::size_t a = 0; a < k; ++a)
                    if (a != i && a != j) keep.push_back(a);
                BitMatrix q(keep.size(), keep.size());
                for (std::size_t u = 0; u < keep.size(); ++u)
                    for (std::size_t v = 0; v < keep.size(); ++v) {
                        std::size_t a = keep[u], b = keep[v];
                        bool val = cur.p.get(a, b) != (cur.p.get(a, j) && cur.p.get(i, b));
                        if (val) q.set(u, v);
                    }
                auto order = detail::topo_order(q);
                if (!order) continue;
                std::vector<Subset> objs;
                for (auto u : *order) objs.push_back(cur.objects[keep[u]]);
                BitMatrix r(keep.size(), keep.size());
                for (std::size_t u = 0; u < order->size(); ++u)
                    for (std::size_t v = 0; v < order->size(); ++v)
                        if (q.get((*order)[u], (*order)[v])) r.set(u, v);
                cur = make_complex(cur.n, std::move(objs), r);
                progress = true;
            }
    }
    return cur;
}

inline std::string complex_str(const TwistedComplex& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + subset_str(x.objects[i]);
    s += "] p={";
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x.p.get(i, j)) {
                s += (first ? "" : ",") + std::string("(") + std::to_string(i) + "," + std::to_string(j) + ")";
                first = false;
            }
    return s + "}";
}

}  // namespace contact
