#pragma once

#include <sstream>
#include <string>

#include "contact/arc_diagram.hpp"
#include "contact/bypass.hpp"
#include "contact/presented_category.hpp"
#include "contact/quiver.hpp"
#include "contact/resolution.hpp"
#include "json.hpp"

namespace contact {

using json = nlohmann::ordered_json;

inline json subset_json(Subset S) { return subset_elems(S); }

inline Subset subset_from_json(const json& j) {
    Subset S = 0;
    for (int x : j.get<std::vector<int>>()) {
        if (x < 1 || x > 31) throw InvalidInput("subset element out of range: " + std::to_string(x));
        S |= 1u << x;
    }
    return S;
}

inline json to_json(const DividingSet& d) {
    json j;
    j["n"] = d.n();
    json p = json::array();
    for (auto [a, b] : d.pairs()) p.push_back({a, b});
    j["pairs"] = p;
    j["sign"] = d.sign() > 0 ? "+" : "-";
    j["circles"] = d.circles();
    return j;
}

inline DividingSet dividing_set_from_json(const json& j) {
    try {
        std::vector<Chord> pairs;
        for (auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        int sign = j.value("sign", std::string("+")) == "-" ? -1 : 1;
        return DividingSet(j.at("n").get<int>(), pairs, j.value("circles", 0), sign);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad dividing set json: ") + e.what());
    }
}

inline json to_json(const TwistedComplex& x) {
    json j;
    j["n"] = x.n;
    json objs = json::array();
    for (auto S : x.objects) objs.push_back(subset_json(S));
    j["objects"] = objs;
    json p = json::array();
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b)
            if (x.p.get(a, b)) p.push_back({a, b});
    j["p"] = p;
    return j;
}

inline TwistedComplex twisted_complex_from_json(const json& j) {
    try {
        std::vector<Subset> objs;
        for (auto& o : j.at("objects")) objs.push_back(subset_from_json(o));
        BitMatrix p(objs.size(), objs.size());
        for (auto& e : j.at("p")) {
            auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
            if (a >= objs.size() || b >= objs.size()) throw InvalidInput("p entry out of range");
            p.set(a, b);
        }
        return make_complex(j.at("n").get<int>(), objs, p);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad twisted complex json: ") + e.what());
    }
}

inline json to_json(const Equator& e) {
    json j;
    j["faces"] = e.faces;
    json c = json::array();
    for (auto [a, b] : e.chords) c.push_back({a, b});
    j["chords"] = c;
    j["low_first"] = e.low_first;
    j["essential"] = e.essential();
    return j;
}

inline json to_json(const BypassTriangle& t, BypassKind kind) {
    json j;
    j["equator"] = to_json(t.equator);
    j["kind"] = kind_name(kind);
    j["gamma0"] = to_json(t.gamma0);
    j["gamma1"] = to_json(t.gamma1);
    j["gamma2"] = to_json(t.gamma2);
    j["euler"] = {euler_number(t.gamma0), euler_number(t.gamma1), euler_number(t.gamma2)};
    return j;
}

inline json to_json(const Resolution& r) {
    json j;
    j["input"] = to_json(r.input);
    auto c = to_json(r.complex);
    j["objects"] = c["objects"];
    j["p"] = c["p"];
    json log = json::array();
    for (auto& s : r.log) {
        json e;
        e["input"] = to_json(s.input);
        e["equator"] = to_json(s.equator);
        e["a"] = to_json(s.a);
        e["b"] = to_json(s.b);
        e["phase"] = s.phase;
        log.push_back(e);
    }
    j["log"] = log;
    return j;
}

inline json to_json(const Quiver& q) {
    json j;
    j["n"] = q.n;
    json v = json::array();
    for (auto& x : q.vertices) v.push_back(subset_json(x.S));
    j["vertices"] = v;
    json a = json::array();
    for (auto& x : q.arrows) a.push_back({{"p", x.p}, {"source", subset_json(x.source.S)}, {"target", subset_json(x.target.S)}});
    j["arrows"] = a;
    return j;
}

inline json to_json(const PresentedCategory& c) {
    json j;
    j["name"] = c.name;
    j["objects"] = c.objects;
    json g = json::array();
    for (auto& x : c.generators) g.push_back({{"name", x.name}, {"src", c.objects[x.src]}, {"tgt", c.objects[x.tgt]}});
    j["generators"] = g;
    json r = json::array();
    for (auto& x : c.relations) r.push_back(c.str(x));
    j["relations"] = r;
    if (c.differential) {
        json d = json::object();
        for (std::size_t i = 0; i < c.generators.size(); ++i)
            if (!(*c.differential)[i].is_zero()) d[c.generators[i].name] = c.str((*c.differential)[i]);
        j["differential"] = d;
    }
    return j;
}

inline json to_json(const PresentedCategory& c, const HomTable& t) {
    json j;
    j["total"] = t.total();
    json rows = json::array();
    for (auto& [k, v] : t.dims) {
        json b = json::array();
        for (auto& p : t.basis.at(k)) b.push_back(c.str(p));
        rows.push_back({{"src", c.objects[k.first]}, {"tgt", c.objects[k.second]}, {"dim", v}, {"basis", b}});
    }
    j["dims"] = rows;
    return j;
}

// Graded dimensions are listed by Euler number, highest first.
inline json to_json(const K0Result& r) {
    json j;
    j["dim"] = r.dim;
    json g = json::array();
    for (auto& [eu, d] : r.graded) g.push_back(d);
    j["graded"] = g;
    return j;
}

inline json to_json(const ArcDiagram& z) {
    json j;
    json segs = json::array();
    for (int s = 0; s < z.segments(); ++s) {
        json pts = json::array();
        for (std::size_t p = 0; p < z.points[s].size(); ++p)
            pts.push_back({{"point", z.points[s][p]}, {"handle", z.handle[s][p]}});
        segs.push_back(pts);
    }
    j["segments"] = segs;
    j["handles"] = z.k;
    auto inv = surface_invariants(z);
    j["euler_char"] = inv.euler_char;
    j["boundary_components"] = inv.boundary_components;
    j["genus"] = inv.genus;
    j["marked_points"] = inv.marked_points;
    return j;
}

inline std::string dot_escape(const std::string& s) {
    std::string o;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') o += '\\';
        o += ch;
    }
    return o;
}

inline std::string to_dot(const Quiver& q) {
    std::ostringstream o;
    o << "digraph Q" << q.n << " {\n";
    for (auto& v : q.vertices) o << "  \"" << subset_str(v.S) << "\";\n";
    for (auto& a : q.arrows)
        o << "  \"" << subset_str(a.source.S) << "\" -> \"" << subset_str(a.target.S) << "\" [label=\"theta" << a.p
          << "\"];\n";
    o << "}\n";
    return o.str();
}

inline std::string to_dot(const PresentedCategory& c) {
    std::ostringstream o;
    o << "digraph \"" << dot_escape(c.name) << "\" {\n";
    for (auto& x : c.objects) o << "  \"" << dot_escape(x) << "\";\n";
    for (auto& g : c.generators)
        o << "  \"" << dot_escape(c.objects[g.src]) << "\" -> \"" << dot_escape(c.objects[g.tgt]) << "\" [label=\""
          << dot_escape(g.name) << "\"];\n";
    o << "}\n";
    return o.str();
}

// Faces as nodes labelled by their gaps and sign; one edge per chord.
inline std::string to_dot(const FaceTree& t) {
    std::ostringstream o;
    o << "graph faces {\n";
    for (std::size_t f = 0; f < t.size(); ++f) {
        o << "  f" << f << " [label=\"" << (t.sign[f] > 0 ? "+" : "-");
        for (int g : t.gaps[f]) o << " " << g;
        o << "\"" << (static_cast<int>(f) == t.basepoint_face ? ", shape=box" : "") << "];\n";
    }
    for (auto& e : t.edges)
        o << "  f" << e.outside << " -- f" << e.inside << " [label=\"" << e.chord.first << "," << e.chord.second
          << "\"];\n";
    o << "}\n";
    return o.str();
}

// Plain-text presentation: objects, then "name: src -> tgt", then relations.
inline std::string presentation_text(const PresentedCategory& c) {
    std::ostringstream o;
    o << c.name << "\nobjects:";
    for (auto& x : c.objects) o << " " << x;
    o << "\n";
    for (auto& g : c.generators) o << g.name << ": " << c.objects[g.src] << " -> " << c.objects[g.tgt] << "\n";
    for (auto& r : c.relations) o << c.str(r) << " = 0\n";
    return o.str();
}

}  // namespace contact
