#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "contact/error.hpp"
#include "contact/gf2.hpp"

namespace contact {

// A path lists generators in the order they are applied (first one first).
// Printed in composition notation, right to left: "g f" means f then g.
struct Path {
    int src = 0, tgt = 0;
    std::vector<int> gens;

    std::size_t length() const { return gens.size(); }
    bool operator<(const Path& o) const {
        if (gens.size() != o.gens.size()) return gens.size() < o.gens.size();
        return std::tie(gens, src, tgt) < std::tie(o.gens, o.src, o.tgt);
    }
    bool operator==(const Path& o) const { return src == o.src && tgt == o.tgt && gens == o.gens; }
};

// A formal sum of paths with GF(2) coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(Path p) { toggle(std::move(p)); }
    void toggle(const Path& p) {
        auto it = terms_.find(p);
        if (it == terms_.end()) terms_.insert(p);
        else terms_.erase(it);
    }
    Poly& operator+=(const Poly& o) {
        for (auto& p : o.terms_) toggle(p);
        return *this;
    }
    bool is_zero() const { return terms_.empty(); }
    const std::set<Path>& terms() const { return terms_; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

private:
    std::set<Path> terms_;
};

struct Generator {
    std::string name;
    int src = 0, tgt = 0;
};

struct PresentedCategory {
    std::string name;
    std::vector<std::string> objects;
    std::vector<Generator> generators;
    std::vector<Poly> relations;               // each poly is set to zero
    std::optional<std::vector<Poly>> differential;  // one entry per generator

    int object(const std::string& o) const {
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == o) return static_cast<int>(i);
        throw InvalidInput("unknown object " + o);
    }
    int generator(const std::string& g) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == g) return static_cast<int>(i);
        throw InvalidInput("unknown generator " + g);
    }
    int add_object(const std::string& o) {
        objects.push_back(o);
        return static_cast<int>(objects.size()) - 1;
    }
    int add_generator(const std::string& g, int s, int t) {
        generators.push_back({g, s, t});
        return static_cast<int>(generators.size()) - 1;
    }

    Path identity(int o) const { return Path{o, o, {}}; }

    Path path(std::vector<int> gens) const {
        if (gens.empty()) throw InvalidInput("empty generator list; use identity()");
        for (std::size_t i = 0; i + 1 < gens.size(); ++i)
            if (generators.at(gens[i]).tgt != generators.at(gens[i + 1]).src)
                throw InvalidInput("path does not compose at " + generators[gens[i]].name);
        return Path{generators.at(gens.front()).src, generators.at(gens.back()).tgt, std::move(gens)};
    }

    // Parse a monomial in composition notation: "h22 f" is f then h22;
    // "1_x" is the identity of object x.
    Path word(const std::string& s) const {
        std::istringstream in(s);
        std::vector<std::string> tok;
        for (std::string t; in >> t;) tok.push_back(t);
        if (tok.size() == 1 && tok[0].rfind("1_", 0) == 0) return identity(object(tok[0].substr(2)));
        std::vector<int> gens;
        for (auto it = tok.rbegin(); it != tok.rend(); ++it) gens.push_back(generator(*it));
        return path(gens);
    }
    // Sum of monomials separated by '+'.
    Poly poly(const std::string& s) const {
        Poly p;
        std::size_t start = 0;
        while (start <= s.size()) {
            auto end = s.find('+', start);
            if (end == std::string::npos) end = s.size();
            auto piece = s.substr(start, end - start);
            if (piece.find_first_not_of(' ') != std::string::npos && piece.find_first_not_of(" 0") != std::string::npos)
                p.toggle(word(piece));
            start = end + 1;
        }
        return p;
    }

    Path concat(const Path& first, const Path& second) const {
        if (first.tgt != second.src) throw InvalidInput("paths do not compose");
        Path p{first.src, second.tgt, first.gens};
        p.gens.insert(p.gens.end(), second.gens.begin(), second.gens.end());
        return p;
    }

    std::string str(const Path& p) const {
        if (p.gens.empty()) return "1_" + objects[p.src];
        std::string s;
        for (auto it = p.gens.rbegin(); it != p.gens.rend(); ++it) {
            if (!s.empty()) s += " ";
            s += generators[*it].name;
        }
        return s;
    }
    std::string str(const Poly& p) const {
        if (p.is_zero()) return "0";
        std::string s;
        for (auto& t : p.terms()) s += (s.empty() ? "" : " + ") + str(t);
        return s;
    }

    void check_relations() const {
        for (auto& r : relations) {
            if (r.is_zero()) continue;
            auto& f = *r.terms().begin();
            for (auto& t : r.terms())
                if (t.src != f.src || t.tgt != f.tgt) throw InvalidInput("relation mixes hom spaces: " + str(r));
        }
    }
};

using QuiverPresentation = PresentedCategory;

inline Poly monomial_relation(const Path& p) { return Poly(p); }

inline Poly binomial_relation(const Path& p, const Path& q) {
    Poly r(p);
    r.toggle(q);
    return r;
}

// All paths of length exactly len, grouped by nothing; used for enumeration.
inline std::vector<Path> paths_of_length(const PresentedCategory& c, std::size_t len) {
    std::vector<Path> cur;
    for (std::size_t o = 0; o < c.objects.size(); ++o) cur.push_back(c.identity(static_cast<int>(o)));
    for (std::size_t l = 0; l < len; ++l) {
        std::vector<Path> next;
        for (auto& p : cur)
            for (std::size_t g = 0; g < c.generators.size(); ++g)
                if (c.generators[g].src == p.tgt) {
                    Path q = p;
                    q.gens.push_back(static_cast<int>(g));
                    q.tgt = c.generators[g].tgt;
                    next.push_back(std::move(q));
                }
        cur = std::move(next);
    }
    return cur;
}

struct HomTable {
    std::map<std::pair<int, int>, int> dims;              // nonzero entries only
    std::map<std::pair<int, int>, std::vector<Path>> basis;  // lex-least representatives
    int total() const {
        int t = 0;
        for (auto& [k, v] : dims) t += v;
        return t;
    }
    int dim(int a, int b) const {
        auto it = dims.find({a, b});
        return it == dims.end() ? 0 : it->second;
    }
};

// Hom dimensions of a category presented by monomial and binomial relations.
// Paths of length <= cap are grouped into classes by the binomial moves; a
// class vanishes when one of its members contains a zero monomial. A nonzero
// class reaching length cap raises CapExceeded.
inline HomTable hom_dims(const PresentedCategory& c, std::size_t cap) {
    c.check_relations();
    std::vector<Path> zeros;
    std::vector<std::pair<Path, Path>> moves;
    for (auto& r : c.relations) {
        auto& t = r.terms();
        if (t.size() == 1) zeros.push_back(*t.begin());
        else if (t.size() == 2) moves.emplace_back(*t.begin(), *std::next(t.begin()));
        else throw InvalidInput("hom_dims handles monomial and binomial relations only: " + c.str(r));
        for (auto& p : t)
            if (p.gens.empty()) throw InvalidInput("hom_dims needs relations without identity terms");
    }
    std::vector<Path> all;
    for (std::size_t l = 0; l <= cap; ++l) {
        auto ps = paths_of_length(c, l);
        all.insert(all.end(), ps.begin(), ps.end());
    }
    std::sort(all.begin(), all.end());
    std::map<Path, std::size_t> idx;
    for (auto& p : all) idx.emplace(p, idx.size());
    std::vector<std::size_t> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto contains_at = [](const std::vector<int>& w, const std::vector<int>& u, std::size_t i) {
        return i + u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin() + static_cast<long>(i));
    };
    std::vector<bool> zero(all.size(), false);
    for (std::size_t k = 0; k < all.size(); ++k) {
        auto& w = all[k].gens;
        for (auto& z : zeros)
            for (std::size_t i = 0; i < w.size(); ++i)
                if (contains_at(w, z.gens, i)) zero[k] = true;
        for (auto& [u, v] : moves)
            for (int dir = 0; dir < 2; ++dir) {
                auto& from = dir ? v.gens : u.gens;
                auto& to = dir ? u.gens : v.gens;
                for (std::size_t i = 0; i < w.size(); ++i) {
                    if (!contains_at(w, from, i)) continue;
                    Path q{all[k].src, all[k].tgt, {}};
                    q.gens.insert(q.gens.end(), w.begin(), w.begin() + static_cast<long>(i));
                    q.gens.insert(q.gens.end(), to.begin(), to.end());
                    q.gens.insert(q.gens.end(), w.begin() + static_cast<long>(i + from.size()), w.end());
                    auto it = idx.find(q);
                    if (it != idx.end()) parent[root(k)] = root(it->second);
                }
            }
    }
    std::map<std::size_t, bool> class_zero;
    std::map<std::size_t, std::size_t> class_min, class_max_len;
    for (std::size_t k = 0; k < all.size(); ++k) {
        auto r = root(k);
        class_zero[r] = class_zero[r] || zero[k];
        if (!class_min.count(r)) class_min[r] = k;  // all is sorted, so the first seen is least
        class_max_len[r] = std::max(class_max_len[r], all[k].length());
    }
    HomTable t;
    for (auto& [r, z] : class_zero) {
        if (z) continue;
        if (class_max_len[r] >= cap && cap > 0)
            throw CapExceeded("nonzero path of length " + std::to_string(cap) + " in " + c.name + ": " +
                              c.str(all[class_min[r]]));
        auto& p = all[class_min[r]];
        ++t.dims[{p.src, p.tgt}];
        t.basis[{p.src, p.tgt}].push_back(p);
    }
    for (auto& [k, v] : t.basis) std::sort(v.begin(), v.end());
    return t;
}

// Leibniz rule in characteristic two.
inline Poly apply_d(const PresentedCategory& c, const Poly& x) {
    if (!c.differential) throw InvalidInput(c.name + " has no differential");
    Poly out;
    for (auto& p : x.terms())
        for (std::size_t i = 0; i < p.gens.size(); ++i) {
            Path pre{p.src, c.generators[p.gens[i]].src, {p.gens.begin(), p.gens.begin() + static_cast<long>(i)}};
            Path post{c.generators[p.gens[i]].tgt, p.tgt, {p.gens.begin() + static_cast<long>(i + 1), p.gens.end()}};
            for (auto& m : (*c.differential)[p.gens[i]].terms()) out.toggle(c.concat(c.concat(pre, m), post));
        }
    return out;
}

// Membership in the two-sided ideal spanned by u r v, with every term of
// length <= bound.
inline bool in_ideal(const PresentedCategory& c, const Poly& x, std::size_t bound) {
    if (x.is_zero()) return true;
    if (c.relations.empty()) return false;
    auto& f = *x.terms().begin();
    std::vector<Path> space;
    for (std::size_t l = 0; l <= bound; ++l)
        for (auto& p : paths_of_length(c, l))
            if (p.src == f.src && p.tgt == f.tgt) space.push_back(p);
    std::map<Path, std::size_t> idx;
    for (auto& p : space) idx.emplace(p, idx.size());
    auto vec = [&](const Poly& y) -> std::optional<BitVector> {
        BitVector v(space.size());
        for (auto& t : y.terms()) {
            auto it = idx.find(t);
            if (it == idx.end()) return std::nullopt;
            v.flip(it->second);
        }
        return v;
    };
    SpanBasis span(space.size());
    std::vector<std::vector<Path>> by_len(bound + 1);
    for (std::size_t l = 0; l <= bound; ++l) by_len[l] = paths_of_length(c, l);
    for (auto& r : c.relations) {
        if (r.is_zero()) continue;
        auto& rt = *r.terms().begin();
        std::size_t rmax = 0;
        for (auto& t : r.terms()) rmax = std::max(rmax, t.length());
        if (rmax > bound) continue;
        for (std::size_t lu = 0; lu + rmax <= bound; ++lu)
            for (auto& u : by_len[lu]) {
                if (u.src != f.src || u.tgt != rt.src) continue;
                for (std::size_t lv = 0; lu + rmax + lv <= bound; ++lv)
                    for (auto& v : by_len[lv]) {
                        if (v.src != rt.tgt || v.tgt != f.tgt) continue;
                        Poly prod;
                        for (auto& t : r.terms()) prod.toggle(c.concat(c.concat(u, t), v));
                        if (auto b = vec(prod)) span.insert(*b);
                    }
            }
    }
    auto xv = vec(x);
    return xv && span.contains(*xv);
}

struct DiffCheck {
    bool ok = true;
    std::string where;  // generator or relation that failed
    std::string lhs, rhs;
};

inline DiffCheck verify_differential(const PresentedCategory& c, std::size_t slack = 2) {
    if (!c.differential) throw InvalidInput(c.name + " has no differential");
    if (c.differential->size() != c.generators.size()) throw InvalidInput("differential must cover every generator");
    c.check_relations();
    auto longest = [](const Poly& p) {
        std::size_t m = 0;
        for (auto& t : p.terms()) m = std::max(m, t.length());
        return m;
    };
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        auto& dg = (*c.differential)[g];
        for (auto& t : dg.terms())
            if (t.src != c.generators[g].src || t.tgt != c.generators[g].tgt)
                return {false, c.generators[g].name, "d(" + c.generators[g].name + ")", "ill-typed term " + c.str(t)};
        auto dd = apply_d(c, dg);
        if (!in_ideal(c, dd, longest(dd) + slack))
            return {false, c.generators[g].name, "d^2(" + c.generators[g].name + ")", c.str(dd)};
    }
    for (auto& r : c.relations) {
        auto dr = apply_d(c, r);
        if (!in_ideal(c, dr, std::max(longest(dr), longest(r)) + slack))
            return {false, c.str(r), "d(" + c.str(r) + ")", c.str(dr)};
    }
    return {};
}

// Drinfeld's category: objects 1, 2 with f, g and homotopies h11, h22, h12.
inline PresentedCategory drinfeld_category(bool corrupt_h11 = false) {
    PresentedCategory c;
    c.name = corrupt_h11 ? "I~ (corrupted)" : "I~";
    int o1 = c.add_object("1"), o2 = c.add_object("2");
    c.add_generator("f", o1, o2);
    c.add_generator("g", o2, o1);
    c.add_generator("h11", o1, o1);
    c.add_generator("h22", o2, o2);
    c.add_generator("h12", o1, o2);
    c.differential = std::vector<Poly>{
        Poly(), Poly(),
        c.poly(corrupt_h11 ? "g f" : "g f + 1_1"),
        c.poly("f g + 1_2"),
        c.poly("h22 f + f h11"),
    };
    return c;
}

// Three objects around an oriented triangle, cycle maps theta and homotopies h.
inline PresentedCategory d_bar() {
    PresentedCategory c;
    c.name = "D-bar";
    for (auto o : {"1", "2", "3"}) c.add_object(o);
    c.add_generator("t12", 0, 1);
    c.add_generator("t23", 1, 2);
    c.add_generator("t31", 2, 0);
    c.add_generator("h21", 1, 0);
    c.add_generator("h32", 2, 1);
    c.add_generator("h13", 0, 2);
    c.differential = std::vector<Poly>{Poly(), Poly(), Poly(), c.poly("t31 t23"), c.poly("t12 t31"), c.poly("t23 t12")};
    c.relations = {c.poly("t23 h32 + h13 t31 + 1_3"), c.poly("t12 h21 + h32 t23 + 1_2"),
                   c.poly("t31 h13 + h21 t12 + 1_1")};
    return c;
}

namespace detail {
inline std::string tri_name(const std::vector<int>& v) {
    std::string s = "t";
    for (int x : v) s += std::to_string(x);
    return s;
}
}  // namespace detail

// One generator per oriented path 1->2->3->1 of length 1..L. The differential
// sums all two-step factorizations, plus the unit when the path is a loop of
// length three.
inline PresentedCategory d_tilde_truncated(int L) {
    if (L < 2) throw InvalidInput("d_tilde needs L >= 2");
    PresentedCategory c;
    c.name = "D-tilde(L=" + std::to_string(L) + ")";
    for (auto o : {"1", "2", "3"}) c.add_object(o);
    auto step = [](int v) { return v % 3 + 1; };
    std::map<std::vector<int>, int> id;
    for (int len = 1; len <= L; ++len)
        for (int s = 1; s <= 3; ++s) {
            std::vector<int> v{s};
            for (int k = 0; k < len; ++k) v.push_back(step(v.back()));
            id[v] = c.add_generator(detail::tri_name(v), v.front() - 1, v.back() - 1);
        }
    std::vector<Poly> d(c.generators.size());
    for (auto& [v, g] : id) {
        const int len = static_cast<int>(v.size()) - 1;
        if (len == 3) d[g].toggle(c.identity(v.front() - 1));
        for (int cut = 1; cut < len; ++cut) {
            std::vector<int> first(v.begin(), v.begin() + cut + 1), second(v.begin() + cut, v.end());
            d[g].toggle(c.path({id.at(first), id.at(second)}));
        }
    }
    c.differential = d;
    return c;
}

// Images of D-tilde generators in D-bar: edges to theta, two-step paths to
// the homotopy across the missing edge, longer paths to zero.
inline std::optional<Path> d_tilde_projection(const PresentedCategory& dt, const PresentedCategory& db, int g) {
    const auto& name = dt.generators[g].name;
    const std::string verts = name.substr(1);
    if (verts.size() == 2) return db.word("t" + verts);
    if (verts.size() == 3) {
        std::string h = std::string("h") + verts[0] + verts[2];
        return db.word(h);
    }
    return std::nullopt;
}

// Checks d(pi x) = pi(d x) modulo the D-bar relations for generators up to
// max_len.
inline DiffCheck verify_d_tilde_projection(int L, int max_len) {
    auto dt = d_tilde_truncated(L);
    auto db = d_bar();
    auto pi = [&](const Poly& x) {
        Poly out;
        for (auto& t : x.terms()) {
            if (t.gens.empty()) {
                out.toggle(db.identity(t.src));
                continue;
            }
            Path acc = db.identity(t.src);
            bool zero = false;
            for (int g : t.gens) {
                auto img = d_tilde_projection(dt, db, g);
                if (!img) {
                    zero = true;
                    break;
                }
                acc = db.concat(acc, *img);
            }
            if (!zero) out.toggle(acc);
        }
        return out;
    };
    for (std::size_t g = 0; g < dt.generators.size(); ++g) {
        if (static_cast<int>(dt.generators[g].name.size()) - 2 > max_len) continue;
        Path self{dt.generators[g].src, dt.generators[g].tgt, {static_cast<int>(g)}};
        Poly lhs = apply_d(db, pi(Poly(self)));
        Poly rhs = pi((*dt.differential)[g]);
        Poly diff = lhs;
        diff += rhs;
        if (!in_ideal(db, diff, 4))
            return {false, dt.generators[g].name, "d(pi " + dt.generators[g].name + ") = " + db.str(lhs),
                    "pi(d " + dt.generators[g].name + ") = " + db.str(rhs)};
    }
    return {};
}

struct K0Result {
    int dim = 0;
    int relation_rank = 0;
    std::vector<std::pair<int, int>> graded;  // (euler number, dimension), euler descending
};

// F2-quotient of the free module on generators by the relation vectors; each
// relation is assumed homogeneous for the grading when one is supplied.
inline K0Result k0(std::size_t generators, const std::vector<BitVector>& relations,
                   const std::vector<int>& grading = {}) {
    BitMatrix m(relations.size(), generators);
    for (std::size_t i = 0; i < relations.size(); ++i)
        for (auto j : relations[i].support()) m.set(i, j);
    K0Result r;
    r.relation_rank = static_cast<int>(rank(m));
    r.dim = static_cast<int>(generators) - r.relation_rank;
    if (!grading.empty()) {
        std::map<int, std::vector<std::size_t>, std::greater<int>> by;
        for (std::size_t j = 0; j < generators; ++j) by[grading[j]].push_back(j);
        for (auto& [e, cols] : by) {
            std::vector<BitVector> rows;
            for (auto& rel : relations) {
                auto s = rel.support();
                if (s.empty() || grading[s.front()] != e) continue;
                for (auto j : s)
                    if (grading[j] != e) throw InvalidInput("K0 relation is not homogeneous");
                BitVector v(cols.size());
                for (std::size_t k = 0; k < cols.size(); ++k)
                    if (rel.get(cols[k])) v.set(k);
                rows.push_back(v);
            }
            BitMatrix mm(rows.size(), cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (auto j : rows[i].support()) mm.set(i, j);
            r.graded.emplace_back(e, static_cast<int>(cols.size() - rank(mm)));
        }
    }
    return r;
}

// Genus g surface with one boundary component and the symplectic arc
// parameterization: generators are subsets C of the 2g basis curves, graded
// by 2g - 2|C|. A bypass between elementary sets reglues one handle alpha in
// C onto another basis curve beta; the third term then carries alpha + beta,
// which is elementary only if that sum is again a single basis curve.
inline K0Result k0_genus(int g) {
    if (g < 1 || g > 10) throw InvalidInput("k0_genus needs 1 <= g <= 10");
    const int h = 2 * g;
    const std::size_t N = std::size_t{1} << h;
    std::vector<int> grading(N);
    for (std::size_t C = 0; C < N; ++C) grading[C] = h - 2 * __builtin_popcountll(C);
    std::vector<BitVector> rel;
    for (std::size_t C = 0; C < N; ++C)
        for (int a = 0; a < h; ++a) {
            if (!(C >> a & 1u)) continue;
            for (int b = 0; b < h; ++b) {
                if (C >> b & 1u) continue;
                unsigned third = (1u << a) ^ (1u << b);
                if (__builtin_popcount(third) != 1) continue;
                BitVector v(N);
                v.flip(C);
                v.flip((C & ~(std::size_t{1} << a)) | (std::size_t{1} << b));
                v.flip(C ^ third);
                rel.push_back(v);
            }
        }
    return k0(N, rel, grading);
}

}  // namespace contact
