#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "contact/dividing_set.hpp"

namespace contact {

// A nil-Temperley-Lieb monomial: a word in e_1..e_{n-1}; the empty word is 1.
struct NilTLMonomial {
    int n = 0;
    std::vector<int> word;

    bool operator==(const NilTLMonomial& o) const { return n == o.n && word == o.word; }
    std::string str() const {
        if (word.empty()) return "1";
        std::string s;
        for (int i : word) s += "e" + std::to_string(i);
        return s;
    }
};

inline NilTLMonomial ordered_monomial(int n, unsigned S) {
    NilTLMonomial m{n, {}};
    for (int i = 1; i < n; ++i)
        if (S >> i & 1u) m.word.push_back(i);
    return m;
}

// Strip diagram: endpoints l_1..l_n are 0..n-1, r_1..r_n are n..2n-1.
struct TLDiagram {
    int n = 0;
    std::vector<int> partner;
    int loops = 0;

    static TLDiagram identity(int n) {
        TLDiagram d{n, std::vector<int>(2 * n), 0};
        for (int j = 0; j < n; ++j) {
            d.partner[j] = n + j;
            d.partner[n + j] = j;
        }
        return d;
    }
    static TLDiagram generator(int n, int i) {
        if (i < 1 || i >= n) throw InvalidInput("generator index out of range");
        TLDiagram d = identity(n);
        int a = i - 1, b = i;
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[n + a] = n + b;
        d.partner[n + b] = n + a;
        return d;
    }
    bool operator<(const TLDiagram& o) const { return partner < o.partner; }
};

// Stack x to the left of y: x's right side is glued to y's left side.
inline TLDiagram compose(const TLDiagram& x, const TLDiagram& y) {
    const int n = x.n;
    // Nodes: x endpoints 0..2n-1, y endpoints 2n..4n-1.
    auto strand = [&](int v) { return v < 2 * n ? x.partner[v] : 2 * n + y.partner[v - 2 * n]; };
    auto glue = [&](int v) -> int {
        if (v < 2 * n) return v >= n ? 2 * n + (v - n) : -1;
        int w = v - 2 * n;
        return w < n ? n + w : -1;
    };
    TLDiagram out{n, std::vector<int>(2 * n, -1), x.loops + y.loops};
    std::vector<bool> seen(4 * n, false);
    auto outer = [&](int v) { return v < n ? v : (v >= 3 * n ? v - 2 * n : -1); };
    for (int s = 0; s < 4 * n; ++s) {
        if (outer(s) < 0 || seen[s]) continue;
        int v = s;
        seen[v] = true;
        while (true) {
            int w = strand(v);
            seen[w] = true;
            int g = glue(w);
            if (g < 0) {
                out.partner[outer(s)] = outer(w);
                out.partner[outer(w)] = outer(s);
                break;
            }
            seen[g] = true;
            v = g;
        }
    }
    for (int s = 0; s < 4 * n; ++s) {
        if (seen[s]) continue;
        ++out.loops;
        int v = s;
        while (!seen[v]) {
            seen[v] = true;
            int w = strand(v);
            seen[w] = true;
            v = glue(w);
        }
    }
    return out;
}

inline TLDiagram diagram_of(const NilTLMonomial& m) {
    TLDiagram d = TLDiagram::identity(m.n);
    for (int i : m.word) d = compose(d, TLDiagram::generator(m.n, i));
    return d;
}

namespace detail {

// Shortlex-least word for every loop-free diagram, by breadth-first search.
inline const std::map<std::vector<int>, std::vector<int>>& tl_words(int n) {
    static std::mutex mu;
    static std::map<int, std::map<std::vector<int>, std::vector<int>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto& table = cache[n];
    std::deque<std::pair<TLDiagram, std::vector<int>>> queue;
    auto id = TLDiagram::identity(n);
    table[id.partner] = {};
    queue.emplace_back(id, std::vector<int>{});
    while (!queue.empty()) {
        auto [d, w] = queue.front();
        queue.pop_front();
        for (int i = 1; i < n; ++i) {
            auto e = compose(d, TLDiagram::generator(n, i));
            if (e.loops) continue;
            if (table.count(e.partner)) continue;
            auto w2 = w;
            w2.push_back(i);
            table[e.partner] = w2;
            queue.emplace_back(e, w2);
        }
    }
    return table;
}

}  // namespace detail

// Reduced product; nullopt is the zero element (a closed loop formed).
inline std::optional<NilTLMonomial> multiply(const NilTLMonomial& a, const NilTLMonomial& b) {
    if (a.n != b.n) throw DimensionMismatch("monomials of different sizes");
    auto d = compose(diagram_of(a), diagram_of(b));
    if (d.loops) return std::nullopt;
    return NilTLMonomial{a.n, detail::tl_words(a.n).at(d.partner)};
}

inline std::optional<NilTLMonomial> reduce(const NilTLMonomial& m) {
    return multiply(NilTLMonomial{m.n, {}}, m);
}

inline DividingSet gamma_of_diagram(const TLDiagram& d) {
    const int n = d.n;
    auto label = [n](int v) { return v < n ? v + 1 : 2 * n - (v - n); };
    std::vector<Chord> pairs;
    for (int v = 0; v < 2 * n; ++v)
        if (v < d.partner[v]) {
            int a = label(v), b = label(d.partner[v]);
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
    return DividingSet(n, pairs, d.loops, +1);
}

inline DividingSet gamma_of_monomial(const NilTLMonomial& m) { return gamma_of_diagram(diagram_of(m)); }

inline DividingSet gamma_of_subset(int n, unsigned S) { return gamma_of_monomial(ordered_monomial(n, S)); }

}  // namespace contact
