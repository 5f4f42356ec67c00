#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "contact/error.hpp"

namespace contact {

using Chord = std::pair<int, int>;  // (a, b) with a < b

// A non-crossing matching on the points 1..2n of the disk boundary, labelled
// counterclockwise, with the basepoint in the gap between 2n and 1. Gap g
// (0 <= g < 2n) lies between point g and point g+1, point 0 meaning 2n.
class DividingSet {
public:
    DividingSet() = default;
    DividingSet(int n, std::vector<Chord> pairs, int circles = 0, int sign = +1)
        : n_(n), circles_(circles), sign_(sign) {
        if (n < 1) throw InvalidInput("dividing set needs n >= 1");
        if (circles < 0) throw InvalidInput("negative circle count");
        if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
        partner_.assign(2 * n + 1, 0);
        if (static_cast<int>(pairs.size()) != n) throw InvalidInput("expected exactly n pairs");
        for (auto [a, b] : pairs) {
            if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b) throw InvalidInput("pair out of range");
            if (partner_[a] || partner_[b]) throw InvalidInput("point matched twice");
            partner_[a] = b;
            partner_[b] = a;
        }
        for (int i = 1; i <= 2 * n; ++i)
            for (int k = i + 1; k <= 2 * n; ++k) {
                int j = partner_[i], l = partner_[k];
                if (i < k && k < j && j < l) throw InvalidInput("pairs cross");
            }
    }

    int n() const { return n_; }
    int circles() const { return circles_; }
    int sign() const { return sign_; }
    int partner(int i) const { return partner_.at(i); }
    bool is_zero() const { return circles_ > 0; }

    std::vector<Chord> pairs() const {
        std::vector<Chord> out;
        for (int i = 1; i <= 2 * n_; ++i)
            if (i < partner_[i]) out.emplace_back(i, partner_[i]);
        return out;
    }

    bool same_matching(const DividingSet& o) const { return n_ == o.n_ && partner_ == o.partner_; }
    bool operator==(const DividingSet& o) const {
        return same_matching(o) && circles_ == o.circles_ && sign_ == o.sign_;
    }
    bool operator<(const DividingSet& o) const {
        return std::tie(n_, partner_, circles_, sign_) < std::tie(o.n_, o.partner_, o.circles_, o.sign_);
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (auto [a, b] : pairs()) {
            if (!first) s += ",";
            first = false;
            s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
        s += "}";
        if (circles_) s += "+" + std::to_string(circles_) + "o";
        s += sign_ > 0 ? "+" : "-";
        return s;
    }

private:
    int n_ = 0;
    std::vector<int> partner_;
    int circles_ = 0;
    int sign_ = +1;
};

struct FaceEdge {
    Chord chord;
    int outside;  // face holding gap a-1
    int inside;   // face holding gap a
};

struct FaceTree {
    int n = 0;
    std::vector<std::vector<int>> gaps;  // gaps of each face, ascending
    std::vector<int> sign;               // +1 / -1 per face
    std::vector<FaceEdge> edges;         // one per chord, in chord order
    std::vector<int> face_of_gap;
    int basepoint_face = 0;

    std::size_t size() const { return gaps.size(); }
    // (chord index, neighbour face) pairs
    std::vector<std::pair<int, int>> neighbours(int f) const {
        std::vector<std::pair<int, int>> out;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            if (edges[e].outside == f) out.emplace_back(e, edges[e].inside);
            else if (edges[e].inside == f) out.emplace_back(e, edges[e].outside);
        }
        return out;
    }
    int edge_of(const Chord& c) const {
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
            if (edges[e].chord == c) return e;
        return -1;
    }
};

inline std::vector<DividingSet> enumerate_matchings(int n) {
    if (n < 1) throw InvalidInput("enumerate_matchings needs n >= 1");
    // all[i][j]: matchings of the interval i..j (as chord lists)
    std::map<std::pair<int, int>, std::vector<std::vector<Chord>>> memo;
    auto rec = [&](auto&& self, int lo, int hi) -> const std::vector<std::vector<Chord>>& {
        auto key = std::make_pair(lo, hi);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<Chord>> out;
        if (lo > hi) {
            out.push_back({});
        } else {
            for (int k = lo + 1; k <= hi; k += 2) {
                auto inner = self(self, lo + 1, k - 1);
                auto outer = self(self, k + 1, hi);
                for (auto& a : inner)
                    for (auto& b : outer) {
                        std::vector<Chord> m{{lo, k}};
                        m.insert(m.end(), a.begin(), a.end());
                        m.insert(m.end(), b.begin(), b.end());
                        out.push_back(std::move(m));
                    }
            }
        }
        return memo[key] = std::move(out);
    };
    std::vector<DividingSet> res;
    for (auto& m : rec(rec, 1, 2 * n)) res.emplace_back(n, m);
    std::sort(res.begin(), res.end());
    return res;
}

inline FaceTree faces(const DividingSet& d) {
    if (d.is_zero()) throw ZeroObject("dividing set has a homotopically trivial circle");
    const int n = d.n(), N = 2 * n;
    auto chords = d.pairs();
    FaceTree t;
    t.n = n;
    t.face_of_gap.assign(N, -1);
    std::map<std::vector<bool>, int> id;
    for (int g = 0; g < N; ++g) {
        std::vector<bool> key;
        for (auto [a, b] : chords) key.push_back(a <= g && g <= b - 1);
        auto [it, fresh] = id.emplace(key, static_cast<int>(t.gaps.size()));
        if (fresh) {
            t.gaps.emplace_back();
            t.sign.push_back((g % 2 == 0) ? d.sign() : -d.sign());
        }
        t.gaps[it->second].push_back(g);
        t.face_of_gap[g] = it->second;
    }
    for (auto c : chords) t.edges.push_back({c, t.face_of_gap[(c.first - 1 + N) % N], t.face_of_gap[c.first]});
    t.basepoint_face = t.face_of_gap[0];
    return t;
}

inline int euler_number(const DividingSet& d) {
    int e = 0;
    for (int s : faces(d).sign) e += s;
    return e;
}

inline DividingSet dual(const DividingSet& d) { return DividingSet(d.n(), d.pairs(), d.circles(), -d.sign()); }

inline DividingSet mirror(const DividingSet& d) {
    const int m = 2 * d.n() + 1;
    std::vector<Chord> p;
    for (auto [a, b] : d.pairs()) p.emplace_back(m - b, m - a);
    return DividingSet(d.n(), p, d.circles(), d.sign());
}

inline DividingSet rotate(const DividingSet& d) {
    const int N = 2 * d.n();
    auto shift = [N](int i) { return i == 1 ? N : i - 1; };
    std::vector<Chord> p;
    for (auto [a, b] : d.pairs()) {
        int x = shift(a), y = shift(b);
        p.emplace_back(std::min(x, y), std::max(x, y));
    }
    return DividingSet(d.n(), p, d.circles(), -d.sign());
}

// nullopt is the zero object: any circle collapses the dividing set.
inline std::optional<DividingSet> normalize(const DividingSet& d) {
    if (d.is_zero()) return std::nullopt;
    return d;
}

}  // namespace contact
