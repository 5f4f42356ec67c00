#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance_suite.hpp"
#include "contact/io.hpp"
#include "contact/k0.hpp"

using namespace contact;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    int n = 0, g = 0, cap = 0, strategy = 0;
    std::string family, pairs, sign = "+", source, target, diagram;
    unsigned seed = acceptance::kSeed;
    bool dot = false, table = false;
};

std::vector<Chord> parse_pairs(const std::string& s) {
    std::vector<Chord> out;
    std::istringstream in(s);
    for (std::string tok; in >> tok;) {
        auto comma = tok.find(',');
        try {
            if (comma == std::string::npos) throw std::invalid_argument(tok);
            std::size_t used = 0;
            int a = std::stoi(tok.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument(tok);
            auto rest = tok.substr(comma + 1);
            int b = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(tok);
            out.emplace_back(a, b);
        } catch (const std::logic_error&) {
            throw UsageError("--pairs: cannot read '" + tok + "' (expected a,b)");
        }
    }
    return out;
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw UsageError("--sign: expected + or -, got '" + s + "'");
}

Subset parse_subset(const std::string& flag, const std::string& s) {
    Subset S = 0;
    std::string t = s;
    for (auto& c : t)
        if (c == ',' || c == '{' || c == '}') c = ' ';
    std::istringstream in(t);
    for (std::string tok; in >> tok;) {
        int x = 0;
        try {
            x = std::stoi(tok);
        } catch (const std::logic_error&) {
            throw UsageError(flag + ": not a subset element '" + tok + "'");
        }
        if (x < 1 || x > 30) throw UsageError(flag + ": element out of range '" + tok + "'");
        S |= 1u << x;
    }
    return S;
}

DividingSet input_set(const Opts& o) {
    if (o.pairs.empty()) throw UsageError("--pairs is required");
    return DividingSet(o.n, parse_pairs(o.pairs), 0, parse_sign(o.sign));
}

ArcDiagram family_diagram(const Opts& o) {
    if (o.family.empty()) throw UsageError("--family is required");
    if ((o.family == "zigzag" || o.family == "sphere") && o.n == 0) throw UsageError("--n is required for " + o.family);
    if (o.family == "genus" && o.g == 0) throw UsageError("--g is required for genus");
    if (o.family == "zigzag") return zigzag(o.n);
    if (o.family == "sphere") return punctured_sphere(o.n);
    if (o.family == "genus") return genus_surface(o.g);
    throw UsageError("--family: unknown family '" + o.family + "'");
}

PresentedCategory family_category(const Opts& o) {
    if (o.family == "drinfeld") return drinfeld_category();
    if (o.family == "dbar") return d_bar();
    if (o.family == "dtilde") return d_tilde_truncated(o.n ? o.n : 6);
    return presentation(family_diagram(o));
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run_verb(const std::string& verb, const Opts& o) {
    if (verb == "enumerate") {
        auto ms = enumerate_matchings(o.n);
        if (o.table) {
            for (auto& d : ms) std::cout << d.str() << "  e=" << euler_number(d) << "\n";
            return 0;
        }
        json a = json::array();
        for (auto& d : ms) {
            DividingSet s(d.n(), d.pairs(), 0, parse_sign(o.sign));
            auto j = to_json(s);
            j["euler"] = euler_number(s);
            a.push_back(j);
        }
        emit(a);
        return 0;
    }
    if (verb == "euler") {
        auto d = input_set(o);
        auto t = faces(d);
        if (o.dot) {
            std::cout << to_dot(t);
            return 0;
        }
        json j = to_json(d);
        j["euler"] = euler_number(d);
        json fs = json::array();
        for (std::size_t f = 0; f < t.size(); ++f) fs.push_back({{"gaps", t.gaps[f]}, {"sign", t.sign[f]}});
        j["faces"] = fs;
        emit(j);
        return 0;
    }
    if (verb == "bypass") {
        auto d = input_set(o);
        json a = json::array();
        for (auto& e : enumerate_walks(d)) {
            auto j = to_json(e);
            auto k = classify(d, e);
            j["kind"] = kind_name(k);
            j["result"] = to_json(apply_bypass(d, e));
            a.push_back(j);
        }
        emit(a);
        return 0;
    }
    if (verb == "triangle") {
        auto d = input_set(o);
        json a = json::array();
        for (auto& e : enumerate_equators(d))
            if (e.essential()) a.push_back(to_json(bypass_triangle(d, e), classify(d, e)));
        emit(a);
        return 0;
    }
    if (verb == "resolve") {
        auto r = resolve(input_set(o), o.strategy);
        auto red = gaussian_eliminate(r.complex);
        if (o.table) {
            std::cout << "resolution " << complex_str(r.complex) << "\nreduced    " << complex_str(red) << "\n";
            for (auto& s : r.log)
                std::cout << "phase " << s.phase << ": " << s.input.str() << " = cone(" << s.a.str() << " -> "
                          << s.b.str() << ")\n";
            return 0;
        }
        auto j = to_json(r);
        j["reduced"] = to_json(red);
        j["k0"] = k0_class(r);
        emit(j);
        return 0;
    }
    if (verb == "hom") {
        if (!o.family.empty()) {
            auto c = family_category(o);
            auto t = hom_dims(c, o.cap ? o.cap : 16);
            emit(to_json(c, t));
            return 0;
        }
        if (o.n < 2) throw UsageError("--n must be at least 2 (or give --family)");
        if (!o.source.empty() || !o.target.empty()) {
            Subset S = parse_subset("--source", o.source), T = parse_subset("--target", o.target);
            emit({{"source", subset_json(S)}, {"target", subset_json(T)}, {"dim", hom_dim(Vertex{o.n, S}, Vertex{o.n, T})}});
            return 0;
        }
        auto q = build_quiver(o.n);
        if (o.table) {
            for (auto& a : q.vertices) {
                for (auto& b : q.vertices) std::cout << hom_dim(a, b);
                std::cout << "  " << subset_str(a.S) << "\n";
            }
            return 0;
        }
        json rows = json::array();
        for (auto& a : q.vertices)
            for (auto& b : q.vertices)
                if (hom_dim(a, b)) rows.push_back({subset_json(a.S), subset_json(b.S)});
        emit({{"n", o.n}, {"nonzero", rows}});
        return 0;
    }
    if (verb == "quiver") {
        auto q = build_quiver(o.n);
        if (o.dot) std::cout << to_dot(q);
        else emit(to_json(q));
        return 0;
    }
    if (verb == "arc") {
        auto z = o.diagram.empty() ? family_diagram(o) : parse_arc_diagram(o.diagram);
        auto j = to_json(z);
        if (z.k <= 12) {
            json es = json::array();
            for (auto& e : elementary_subsets(z)) {
                json hs = json::array();
                for (int h = 1; h <= z.k; ++h)
                    if (e.handles >> (h - 1) & 1u) hs.push_back(h);
                es.push_back({{"handles", hs}, {"euler", e.euler}});
            }
            j["elementary"] = es;
        }
        emit(j);
        return 0;
    }
    if (verb == "present") {
        auto c = family_category(o);
        if (o.dot) {
            std::cout << to_dot(c);
            return 0;
        }
        if (o.table) {
            std::cout << presentation_text(c);
            return 0;
        }
        auto j = to_json(c);
        if (c.differential) j["differential_ok"] = verify_differential(c).ok;
        emit(j);
        return 0;
    }
    if (verb == "k0") {
        K0Result r;
        if (o.family == "genus") r = k0_genus(o.g);
        else if (o.family == "disk" || o.family.empty()) {
            if (o.n == 0) throw UsageError("--n is required for disk");
            r = k0_disk(o.n);
        }
        else throw UsageError("--family: k0 supports genus and disk, got '" + o.family + "'");
        if (o.table) {
            std::cout << "dim " << r.dim << "\n";
            for (auto& [e, d] : r.graded) std::cout << "e=" << e << "  " << d << "\n";
            return 0;
        }
        emit(to_json(r));
        return 0;
    }
    if (verb == "selftest") {
        auto r = acceptance::run_all(o.seed);
        std::cout << acceptance::report(r);
        for (auto& x : r)
            if (!x.pass) return 1;
        return 0;
    }
    throw UsageError("unknown verb " + verb);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contact category of the marked disk: matchings, bypasses, twisted complexes, arc diagrams"};
    app.require_subcommand(1);
    Opts o;
    struct VerbSpec {
        const char* name;
        const char* help;
        bool needs_n;
    };
    const VerbSpec verbs[] = {
        {"enumerate", "list all matchings on 2n points", true},
        {"euler", "Euler number and faces of --pairs (--dot for the face tree)", true},
        {"bypass", "equator walks on --pairs with their kind and A-surgery", true},
        {"triangle", "bypass triangles for each essential equator on --pairs", true},
        {"resolve", "resolve --pairs into elementary generators", true},
        {"hom", "hom dimensions: quiver on --n or a presented --family", false},
        {"quiver", "the quiver on subsets of {1..n-1} (--dot for DOT)", true},
        {"arc", "arc diagram of --family, or a diagram given as text", false},
        {"present", "presentation of --family (zigzag, sphere, genus, drinfeld, dbar, dtilde)", false},
        {"k0", "Grothendieck group of --family genus (--g) or disk (--n)", false},
        {"selftest", "run the acceptance suite", false},
    };
    for (auto& v : verbs) {
        auto* s = app.add_subcommand(v.name, v.help);
        auto* nopt = s->add_option("--n", o.n, "number of chords / family parameter");
        if (v.needs_n) nopt->required();
        s->add_option("--g", o.g, "genus");
        s->add_option("--family", o.family, "zigzag | sphere | genus | disk | drinfeld | dbar | dtilde");
        s->add_option("--pairs", o.pairs, "matching as \"a,b c,d ...\"");
        s->add_option("--sign", o.sign, "basepoint sign, + or -");
        s->add_flag("--dot", o.dot, "DOT output");
        s->add_flag("--table", o.table, "human-readable table");
        s->add_option("--cap", o.cap, "path length cap for hom computations");
        s->add_option("--seed", o.seed, "seed for sampled checks");
        s->add_option("--strategy", o.strategy, "equator choice index for resolve");
        s->add_option("--source", o.source, "source subset for hom, e.g. 1,2");
        s->add_option("--target", o.target, "target subset for hom");
        if (std::string(v.name) == "arc") s->add_option("diagram", o.diagram, "arc diagram text, e.g. \"Z1: x ; Z2: x'\"");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        return run_verb(verb, o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const contact::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
