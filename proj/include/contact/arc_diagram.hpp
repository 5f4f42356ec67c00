#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "contact/error.hpp"
#include "contact/presented_category.hpp"

namespace contact {

enum class Family { None, ZigZag, PuncturedSphere, Genus };

// Oriented segments listed in order; each segment lists its points in the
// direction of its orientation. handle[i][j] is the matched pair (1..k) of
// point j on segment i.
struct ArcDiagram {
    std::vector<std::vector<std::string>> points;
    std::vector<std::vector<int>> handle;
    int k = 0;
    Family family = Family::None;
    int param = 0;

    int segments() const { return static_cast<int>(points.size()); }
    int point_count() const {
        int c = 0;
        for (auto& s : points) c += static_cast<int>(s.size());
        return c;
    }
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) s += " ; ";
            s += "Z" + std::to_string(i + 1) + ":";
            for (auto& p : points[i]) s += " " + p;
        }
        return s;
    }
};

struct SurfaceInvariants {
    int euler_char = 0;
    int boundary_components = 0;
    int genus = 0;
    int marked_points = 0;
};

namespace detail {

struct Foot {
    int seg, pos;
};

inline std::vector<std::vector<Foot>> feet_by_handle(const ArcDiagram& z) {
    std::vector<std::vector<Foot>> f(z.k + 1);
    for (int s = 0; s < z.segments(); ++s)
        for (int p = 0; p < static_cast<int>(z.points[s].size()); ++p) {
            int h = z.handle[s][p];
            if (h < 1 || h > z.k) throw InvalidInput("matching value out of range");
            f[h].push_back({s, p});
        }
    for (int h = 1; h <= z.k; ++h)
        if (f[h].size() != 2) throw InvalidInput("matching is not two-to-one at handle " + std::to_string(h));
    return f;
}

// The bottom of segment s is cut by its points into intervals 0..m. From
// interval j < m one reaches the foot at point j and leaves through the
// partner foot into the interval just past it.
struct Intervals {
    std::vector<int> offset;
    int total = 0;
    std::vector<int> next;  // -1 at the last interval of a segment
    std::vector<int> owner; // segment of each interval
};

inline Intervals intervals(const ArcDiagram& z) {
    auto feet = feet_by_handle(z);
    Intervals iv;
    for (int s = 0; s < z.segments(); ++s) {
        iv.offset.push_back(iv.total);
        iv.total += static_cast<int>(z.points[s].size()) + 1;
    }
    iv.next.assign(iv.total, -1);
    iv.owner.assign(iv.total, 0);
    for (int s = 0; s < z.segments(); ++s) {
        const int m = static_cast<int>(z.points[s].size());
        for (int j = 0; j <= m; ++j) iv.owner[iv.offset[s] + j] = s;
        for (int j = 0; j < m; ++j) {
            auto& pr = feet[z.handle[s][j]];
            Foot other = (pr[0].seg == s && pr[0].pos == j) ? pr[1] : pr[0];
            iv.next[iv.offset[s] + j] = iv.offset[other.seg] + other.pos + 1;
        }
    }
    return iv;
}

}  // namespace detail

// Surgery on the matched pairs must leave no closed components; otherwise
// Degenerate lists the handles on a closed component.
inline void validate(const ArcDiagram& z) {
    if (static_cast<int>(z.handle.size()) != z.segments()) throw InvalidInput("handle table shape");
    for (int s = 0; s < z.segments(); ++s)
        if (z.handle[s].size() != z.points[s].size()) throw InvalidInput("handle table shape");
    auto iv = detail::intervals(z);
    std::vector<int> state(iv.total, 0);  // 0 new, 1 reaches an end
    for (int s = 0; s < z.segments(); ++s) state[iv.offset[s] + static_cast<int>(z.points[s].size())] = 1;
    for (int start = 0; start < iv.total; ++start) {
        std::vector<int> seen;
        int v = start;
        std::set<int> on;
        while (state[v] == 0 && !on.count(v)) {
            on.insert(v);
            seen.push_back(v);
            v = iv.next[v];
        }
        if (state[v] == 1) {
            for (int x : seen) state[x] = 1;
            continue;
        }
        // closed loop of intervals
        std::set<int> handles;
        for (int x : seen) {
            int s = iv.owner[x], j = x - iv.offset[s];
            if (j < static_cast<int>(z.points[s].size())) handles.insert(z.handle[s][j]);
        }
        std::string msg = "degenerate arc diagram: closed component through handles";
        for (int h : handles) msg += " " + std::to_string(h);
        throw Degenerate(msg);
    }
}

inline SurfaceInvariants surface_invariants(const ArcDiagram& z) {
    validate(z);
    auto iv = detail::intervals(z);
    // Boundary tracing: past the last interval the boundary runs around the
    // end of the thickened segment, along its top, and back to interval 0.
    std::vector<int> succ(iv.total);
    for (int s = 0; s < z.segments(); ++s) {
        const int m = static_cast<int>(z.points[s].size());
        for (int j = 0; j <= m; ++j) {
            int x = iv.offset[s] + j;
            succ[x] = j < m ? iv.next[x] : iv.offset[s];
        }
    }
    std::vector<bool> seen(iv.total, false);
    int b = 0;
    for (int x = 0; x < iv.total; ++x) {
        if (seen[x]) continue;
        ++b;
        for (int v = x; !seen[v]; v = succ[v]) seen[v] = true;
    }
    SurfaceInvariants r;
    r.euler_char = z.segments() - z.k;
    r.boundary_components = b;
    r.genus = (2 - r.euler_char - b) / 2;
    r.marked_points = 2 * z.segments();
    return r;
}

// Build from segment words; a point x pairs with x' unless explicit matches
// are given.
inline ArcDiagram from_words(const std::vector<std::vector<std::string>>& segs,
                             const std::vector<std::pair<std::string, std::string>>& matches = {}) {
    ArcDiagram z;
    z.points = segs;
    std::map<std::string, int> hid;
    auto base = [](const std::string& p) { return p.back() == '\'' ? p.substr(0, p.size() - 1) : p; };
    std::map<std::string, std::string> partner;
    for (auto& [a, b] : matches) {
        partner[a] = a + "|" + b;
        partner[b] = a + "|" + b;
    }
    std::set<std::string> names;
    for (auto& s : segs)
        for (auto& p : s)
            if (!names.insert(p).second) throw InvalidInput("repeated point " + p);
    for (auto& s : segs) {
        z.handle.emplace_back();
        for (auto& p : s) {
            std::string key = matches.empty() ? base(p) : (partner.count(p) ? partner[p] : "");
            if (key.empty()) throw InvalidInput("point " + p + " is not matched");
            auto [it, fresh] = hid.emplace(key, static_cast<int>(hid.size()) + 1);
            z.handle.back().push_back(it->second);
        }
    }
    z.k = static_cast<int>(hid.size());
    detail::feet_by_handle(z);
    return z;
}

// Text form: "Z1: a1 b1 a1' ; Z2: b1'" optionally followed by
// "match a1 a1'; match b1 b1'" clauses (separated by ';' or newlines).
inline ArcDiagram parse_arc_diagram(const std::string& text) {
    std::vector<std::vector<std::string>> segs;
    std::vector<std::pair<std::string, std::string>> matches;
    std::string norm = text;
    for (auto& ch : norm)
        if (ch == '\n') ch = ';';
    std::stringstream ss(norm);
    for (std::string clause; std::getline(ss, clause, ';');) {
        std::istringstream in(clause);
        std::vector<std::string> tok;
        for (std::string t; in >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "match") {
            if (tok.size() != 3) throw InvalidInput("match clause needs two points: " + clause);
            matches.emplace_back(tok[1], tok[2]);
            continue;
        }
        if (tok[0].back() != ':') throw InvalidInput("segment clause must start with a label like Z1: (" + clause + ")");
        segs.emplace_back(tok.begin() + 1, tok.end());
    }
    return from_words(segs, matches);
}

inline ArcDiagram zigzag(int n) {
    if (n < 2 || n > 31) throw InvalidInput("zigzag needs 2 <= n <= 31");
    auto a = [](int i) { return "a" + std::to_string(i); };
    auto ap = [](int i) { return "a" + std::to_string(i) + "'"; };
    std::vector<std::vector<std::string>> segs{{a(1)}, {ap(1)}};
    for (int m = 3; m <= n; ++m) {
        if (m % 2) {
            segs.push_back({a(m - 1)});
            segs[m - 2].insert(segs[m - 2].begin(), ap(m - 1));
        } else {
            segs.push_back({ap(m - 1)});
            segs[m - 2].push_back(a(m - 1));
        }
    }
    auto z = from_words(segs);
    // handle numbers follow the point subscripts
    for (int s = 0; s < z.segments(); ++s)
        for (std::size_t j = 0; j < z.points[s].size(); ++j) {
            auto p = z.points[s][j];
            if (p.back() == '\'') p.pop_back();
            z.handle[s][j] = std::stoi(p.substr(1));
        }
    z.family = Family::ZigZag;
    z.param = n;
    return z;
}

inline ArcDiagram punctured_sphere(int n) {
    if (n < 2 || n > 16) throw InvalidInput("punctured_sphere needs 2 <= n <= 16");
    std::vector<std::vector<std::string>> segs(1);
    for (int k = 1; k < n; ++k) {
        auto s = std::to_string(k);
        segs[0].insert(segs[0].end(), {"a" + s, "b" + s, "a" + s + "'"});
    }
    for (int k = 2; k <= n; ++k) segs.push_back({"b" + std::to_string(k - 1) + "'"});
    auto z = from_words(segs);
    z.family = Family::PuncturedSphere;
    z.param = n;
    return z;
}

inline ArcDiagram genus_surface(int g) {
    if (g < 1 || g > 16) throw InvalidInput("genus_surface needs 1 <= g <= 16");
    std::vector<std::vector<std::string>> segs(1);
    for (int k = 1; k <= g; ++k) {
        auto s = std::to_string(k);
        segs[0].insert(segs[0].end(), {"a" + s, "b" + s, "a" + s + "'", "b" + s + "'"});
    }
    auto z = from_words(segs);
    z.family = Family::Genus;
    z.param = g;
    return z;
}

struct ElementarySubset {
    unsigned handles = 0;  // bit h-1 for handle h
    int euler = 0;
};

// Each handle subset C with its Euler number chi(R_C) - chi(complement).
// R_C is the thickened segments plus the handles in C (chi = l - |C|), and
// the complement meets R_C along l arcs.
inline std::vector<ElementarySubset> elementary_subsets(const ArcDiagram& z) {
    validate(z);
    if (z.k > 24) throw InvalidInput("too many handles to enumerate");
    const int l = z.segments();
    const int chi = l - z.k;
    std::vector<ElementarySubset> out;
    for (unsigned C = 0; C < (1u << z.k); ++C) {
        int c = __builtin_popcount(C);
        int pos = l - c;
        int neg = chi + l - pos;
        out.push_back({C, pos - neg});
    }
    return out;
}

namespace detail {

inline std::string handle_set_name(unsigned H) {
    if (!H) return "{}";
    std::string s;
    for (int i = 1; i < 32; ++i)
        if (H >> i & 1u) s += "h" + std::to_string(i);
    return s;
}

// Reeb chords of the zig-zag diagram: on a two-point segment (x, y) the chord
// runs from the handle of y to the handle of x.
inline std::vector<std::pair<int, int>> zigzag_chords(const ArcDiagram& z) {
    std::vector<std::pair<int, int>> ch;
    for (int s = 0; s < z.segments(); ++s)
        if (z.points[s].size() == 2) ch.emplace_back(z.handle[s][1], z.handle[s][0]);
    return ch;
}

}  // namespace detail

inline PresentedCategory presentation(const ArcDiagram& z) {
    PresentedCategory c;
    if (z.family == Family::ZigZag) {
        const int n = z.param;
        c.name = "A(-M_" + std::to_string(n) + ")";
        // objects: handle subsets of {1..n-1}, bit h for handle h
        std::map<unsigned, int> obj;
        for (unsigned H = 0; H < (1u << n); H += 2) obj[H] = c.add_object(detail::handle_set_name(H));
        auto chords = detail::zigzag_chords(z);
        std::map<std::pair<unsigned, int>, int> gen;  // (source, chord) -> generator
        for (auto& [H, o] : obj)
            for (int ci = 0; ci < static_cast<int>(chords.size()); ++ci) {
                auto [from, to] = chords[ci];
                if (!(H >> from & 1u) || (H >> to & 1u)) continue;
                unsigned T = (H & ~(1u << from)) | (1u << to);
                std::string nm = "rho" + std::to_string(from) + "," + std::to_string(to) + "@" + c.objects[o];
                gen[{H, ci}] = c.add_generator(nm, o, obj.at(T));
            }
        auto target = [&](unsigned H, int ci) {
            auto [from, to] = chords[ci];
            return (H & ~(1u << from)) | (1u << to);
        };
        for (auto& [H, o] : obj)
            for (int c1 = 0; c1 < static_cast<int>(chords.size()); ++c1)
                for (int c2 = c1 + 1; c2 < static_cast<int>(chords.size()); ++c2) {
                    if (!gen.count({H, c1}) || !gen.count({H, c2})) continue;
                    unsigned H1 = target(H, c1), H2 = target(H, c2);
                    if (!gen.count({H1, c2}) || !gen.count({H2, c1})) continue;
                    if (target(H1, c2) != target(H2, c1)) continue;
                    c.relations.push_back(binomial_relation(c.path({gen[{H, c1}], gen[{H1, c2}]}),
                                                            c.path({gen[{H, c2}], gen[{H2, c1}]})));
                }
        return c;
    }
    if (z.family == Family::PuncturedSphere) {
        const int n = z.param;
        c.name = "A(-Z_0," + std::to_string(n) + ")";
        std::vector<int> I(n), J(n);
        for (int k = 1; k < n; ++k) {
            I[k] = c.add_object("I" + std::to_string(k));
            J[k] = c.add_object("J" + std::to_string(k));
        }
        for (int k = 1; k < n; ++k) {
            auto s = std::to_string(k);
            c.add_generator("alpha" + s, I[k], J[k]);
            c.add_generator("gamma" + s, J[k], I[k]);
        }
        for (int k = 1; k + 1 < n; ++k)
            c.add_generator("nu" + std::to_string(k) + "," + std::to_string(k + 1), I[k], I[k + 1]);
        for (int k = 1; k < n; ++k) {
            auto s = std::to_string(k);
            c.relations.push_back(c.poly("alpha" + s + " gamma" + s));
        }
        for (int k = 1; k + 2 < n; ++k)
            c.relations.push_back(c.poly("nu" + std::to_string(k + 1) + "," + std::to_string(k + 2) + " nu" +
                                         std::to_string(k) + "," + std::to_string(k + 1)));
        return c;
    }
    if (z.family == Family::Genus) {
        const int g = z.param;
        c.name = "A(-Z_" + std::to_string(g) + ",1)";
        std::vector<int> I(g + 1), J(g + 1);
        for (int k = 1; k <= g; ++k) {
            I[k] = c.add_object("I" + std::to_string(k));
            J[k] = c.add_object("J" + std::to_string(k));
        }
        for (int k = 1; k <= g; ++k) {
            auto s = std::to_string(k);
            c.add_generator("alpha" + s, I[k], J[k]);
            c.add_generator("beta" + s, I[k], J[k]);
            c.add_generator("gamma" + s, J[k], I[k]);
        }
        for (int k = 1; k < g; ++k)
            c.add_generator("eta" + std::to_string(k) + "," + std::to_string(k + 1), J[k], I[k + 1]);
        for (int k = 1; k <= g; ++k) {
            auto s = std::to_string(k);
            c.relations.push_back(c.poly("alpha" + s + " gamma" + s));
            c.relations.push_back(c.poly("gamma" + s + " beta" + s));
        }
        for (int k = 1; k < g; ++k) {
            auto e = "eta" + std::to_string(k) + "," + std::to_string(k + 1);
            c.relations.push_back(c.poly(e + " alpha" + std::to_string(k)));
            c.relations.push_back(c.poly("beta" + std::to_string(k + 1) + " " + e));
        }
        return c;
    }
    throw UnsupportedFamily("presentations exist only for the zig-zag, punctured-sphere and genus families");
}

}  // namespace contact
