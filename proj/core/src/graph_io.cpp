#include "goldform/graph_io.hpp"

#include <cctype>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "goldform/errors.hpp"

namespace gf {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string cnum(cplx z) { return num(z.real()) + ":" + num(z.imag()); }

class Writer {
public:
    explicit Writer(const JumpAssignment& j) : j_(j) {}

    std::string expr(const ExprPtr& e, bool top = true) {
        if (!top && !e->name.empty()) {
            define(e);
            return "$" + e->name;
        }
        switch (e->op) {
            case Op::Const:
                if (!e->label.empty()) return e->label;
                return "M(" + cnum(e->k.a) + ", " + cnum(e->k.b) + ", " + cnum(e->k.c) + ", " + cnum(e->k.d) + ")";
            case Op::Shear: return "S(" + coord(e->coord) + ")";
            case Op::Toric: return "T(" + coord(e->coord) + ")";
            case Op::Inv: return "inv(" + expr(e->a, false) + ")";
            case Op::LowC: return "lowC(" + expr(e->a, false) + ")";
            case Op::LowL: return "lowL(" + expr(e->a, false) + ")";
            case Op::Mul: {
                std::string r = expr(e->b, false);
                if (e->b->op == Op::Mul && e->b->name.empty()) r = "(" + r + ")";
                return expr(e->a, false) + " * " + r;
            }
        }
        return {};
    }

    const std::vector<std::string>& defs() const { return defs_; }

private:
    std::string coord(int k) const {
        if (k < 0 || static_cast<size_t>(k) >= j_.coords.size()) throw GraphError("expression uses an unknown coordinate");
        return j_.coords[k];
    }

    void define(const ExprPtr& e) {
        auto it = named_.find(e->name);
        if (it != named_.end()) {
            if (it->second != e.get()) throw GraphError("two different definitions named " + e->name);
            return;
        }
        named_[e->name] = e.get();
        std::string body = expr(e, true);
        defs_.push_back(e->name + " = " + body);
    }

    const JumpAssignment& j_;
    std::map<std::string, const Expr*> named_;
    std::vector<std::string> defs_;
};

// Line-oriented document split into sections.
struct Line {
    int number;
    std::string text;
};

struct Section {
    std::string first;
    std::vector<Line> second;
    int header = 0;
};

struct Document {
    std::vector<Section> sections;
    int header_line(const std::string& name) const {
        for (const auto& s : sections)
            if (s.first == name) return s.header;
        return 1;
    }
};

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Document split(const std::string& text) {
    Document d;
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
        ++n;
        std::string s = raw.substr(0, raw.find('#'));
        if (strip(s).empty()) continue;
        std::string t = strip(s);
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError(n, 1, "unterminated section header");
            std::string name = t.substr(1, t.size() - 2);
            for (const auto& sec : d.sections)
                if (sec.first == name) throw ParseError(n, 1, "duplicate section [" + name + "]");
            d.sections.push_back({name, {}, n});
            continue;
        }
        if (d.sections.empty()) throw ParseError(n, 1, "content before the first section header");
        d.sections.back().second.push_back({n, s});
    }
    return d;
}

// Tokenizer over one line that tracks columns.
class Cursor {
public:
    explicit Cursor(const Line& l) : line_(l) {}

    void skip() {
        while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
    }
    bool done() {
        skip();
        return pos_ >= line_.text.size();
    }
    char peek() {
        skip();
        return pos_ < line_.text.size() ? line_.text[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string ident() {
        skip();
        size_t a = pos_;
        while (pos_ < line_.text.size()) {
            char c = line_.text[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') ++pos_;
            else break;
        }
        if (a == pos_) fail("expected a name");
        return line_.text.substr(a, pos_ - a);
    }
    std::string word() {
        skip();
        size_t a = pos_;
        while (pos_ < line_.text.size() && !std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
        if (a == pos_) fail("unexpected end of line");
        return line_.text.substr(a, pos_ - a);
    }
    double number() {
        skip();
        const char* start = line_.text.c_str() + pos_;
        char* end = nullptr;
        double v = std::strtod(start, &end);
        if (end == start) fail("expected a number");
        pos_ += static_cast<size_t>(end - start);
        return v;
    }
    void finish() {
        if (!done()) fail("unexpected trailing text");
    }
    [[noreturn]] void fail(const std::string& msg) { fail_at(column(), msg); }
    [[noreturn]] void fail_at(int col, const std::string& msg) { throw ParseError(line_.number, col, msg); }
    int column() const { return static_cast<int>(pos_) + 1; }

private:
    const Line& line_;
    size_t pos_ = 0;
};

class ExprParser {
public:
    ExprParser(const JumpAssignment& j, const std::map<std::string, ExprPtr>& defs) : j_(j), defs_(defs) {}

    ExprPtr parse(Cursor& c) {
        ExprPtr e = term(c);
        while (c.accept('*')) e = e_mul(e, term(c));
        return e;
    }

private:
    int coord(Cursor& c) {
        c.expect('(');
        c.skip();
        int col = c.column();
        std::string n = c.ident();
        int k = j_.coord_index(n);
        if (k < 0) c.fail_at(col, "unknown coordinate '" + n + "'");
        c.expect(')');
        return k;
    }
    ExprPtr wrapped(Cursor& c) {
        c.expect('(');
        ExprPtr e = parse(c);
        c.expect(')');
        return e;
    }
    cplx complex_number(Cursor& c) {
        double re = c.number();
        c.expect(':');
        return {re, c.number()};
    }
    ExprPtr term(Cursor& c) {
        if (c.accept('(')) {
            ExprPtr e = parse(c);
            c.expect(')');
            return e;
        }
        c.skip();
        int col = c.column();
        if (c.accept('$')) {
            std::string n = c.ident();
            auto it = defs_.find(n);
            if (it == defs_.end()) c.fail_at(col, "undefined name '$" + n + "'");
            return it->second;
        }
        std::string w = c.ident();
        if (w == "A") return e_a();
        if (w == "B") return e_b();
        if (w == "I") return e_identity();
        if (w == "S") return e_shear(coord(c));
        if (w == "T") return e_toric(coord(c));
        if (w == "inv") return e_inv(wrapped(c));
        if (w == "lowC") return e_low_c(wrapped(c));
        if (w == "lowL") return e_low_l(wrapped(c));
        if (w == "M") {
            c.expect('(');
            std::array<cplx, 4> v;
            for (int i = 0; i < 4; ++i) {
                if (i > 0) c.expect(',');
                v[i] = complex_number(c);
            }
            c.expect(')');
            return e_const({v[0], v[1], v[2], v[3]});
        }
        c.fail_at(col, "unknown expression '" + w + "'");
    }

    const JumpAssignment& j_;
    const std::map<std::string, ExprPtr>& defs_;
};

const std::vector<Line>* section(const Document& d, const std::string& name) {
    for (const auto& s : d.sections)
        if (s.first == name) return &s.second;
    return nullptr;
}

}  // namespace

std::string serialize(const AdmissiblePair& p, const CoordinateSystem& cs) {
    p.graph.validate();
    std::ostringstream o;
    o << "[coordinates]\n";
    for (size_t i = 0; i < p.jumps.coords.size(); ++i) {
        int k = cs.index(p.jumps.coords[i]);
        o << p.jumps.coords[i] << " " << role_name(k >= 0 ? cs.roles[k] : CoordRole::Other) << "\n";
    }
    o << "\n[constraints]\n";
    for (const auto& r : cs.relations) {
        o << "relation " << r.label << " " << (r.modular ? "modular" : "exact") << " " << num(r.rhs.real()) << " "
          << num(r.rhs.imag()) << " :";
        for (auto [k, c] : r.terms) o << " " << cs.names.at(k) << " " << num(c);
        o << "\n";
    }
    if (!cs.free.empty() || !cs.names.empty()) {
        o << "free";
        for (const auto& n : cs.free_names()) o << " " << n;
        o << "\n";
    }
    Writer w(p.jumps);
    std::vector<std::string> edges;
    for (size_t e = 0; e < p.graph.edges.size(); ++e)
        edges.push_back(p.graph.edges[e].name + " " + w.expr(p.jumps.jump[e], false));
    o << "\n[defs]\n";
    for (const auto& d : w.defs()) o << d << "\n";
    o << "\n[edges]\n";
    for (const auto& e : edges) o << e << "\n";
    o << "\n[vertices]\n";
    for (const auto& v : p.graph.vertices) {
        o << v.name << " :";
        for (int h : v.rot) o << " " << p.graph.half_edge_name(h);
        o << "\n";
    }
    return o.str();
}

GraphDocument parse_graph(const std::string& text) {
    Document d = split(text);
    static const std::set<std::string> known = {"coordinates", "constraints", "defs", "edges", "vertices"};
    for (const auto& sec : d.sections)
        if (!known.count(sec.first)) throw ParseError(sec.header, 1, "unknown section [" + sec.first + "]");
    GraphDocument doc;
    AdmissiblePair& p = doc.pair;
    CoordinateSystem& cs = doc.cs;

    if (auto* s = section(d, "coordinates"))
        for (const auto& l : *s) {
            Cursor c(l);
            std::string name = c.ident();
            int col = c.column();
            std::string role = c.word();
            c.finish();
            if (cs.index(name) >= 0) throw ParseError(l.number, 1, "duplicate coordinate '" + name + "'");
            CoordRole r;
            try {
                r = role_from_name(role);
            } catch (const GraphError& e) {
                throw ParseError(l.number, col, e.what());
            }
            cs.add(name, r);
            p.add_coord(name);
        }

    bool have_free = false;
    if (auto* s = section(d, "constraints"))
        for (const auto& l : *s) {
            Cursor c(l);
            std::string kind = c.ident();
            auto lookup = [&](Cursor& cc) {
                std::string n = cc.ident();
                int k = cs.index(n);
                if (k < 0) cc.fail("unknown coordinate '" + n + "'");
                return k;
            };
            if (kind == "relation") {
                LinearRelation r;
                r.label = c.ident();
                std::string mod = c.ident();
                if (mod != "modular" && mod != "exact") c.fail("expected 'modular' or 'exact'");
                r.modular = mod == "modular";
                double re = c.number();
                r.rhs = {re, c.number()};
                c.expect(':');
                while (!c.done()) {
                    int k = lookup(c);
                    r.terms.push_back({k, c.number()});
                }
                if (r.terms.empty()) c.fail("relation has no terms");
                cs.relations.push_back(r);
            } else if (kind == "free") {
                if (have_free) c.fail("duplicate free line");
                have_free = true;
                while (!c.done()) cs.free.push_back(lookup(c));
            } else {
                throw ParseError(l.number, 1, "expected 'relation' or 'free'");
            }
        }
    if (!have_free) cs.free = choose_free(cs, {});
    if (cs.free.size() + cs.relations.size() != cs.names.size())
        throw ParseError(d.header_line("constraints"), 1, "free coordinates and relations do not partition the coordinates");

    std::map<std::string, ExprPtr> defs;
    ExprParser ep(p.jumps, defs);
    if (auto* s = section(d, "defs"))
        for (const auto& l : *s) {
            Cursor c(l);
            std::string name = c.ident();
            if (defs.count(name)) c.fail("duplicate definition '" + name + "'");
            c.expect('=');
            ExprPtr e = ep.parse(c);
            c.finish();
            defs[name] = e_named(name, e);
        }

    if (auto* s = section(d, "edges"))
        for (const auto& l : *s) {
            Cursor c(l);
            std::string name = c.ident();
            if (p.graph.find_edge(name) >= 0) c.fail("duplicate edge '" + name + "'");
            ExprPtr e = ep.parse(c);
            c.finish();
            p.add_edge(name, e);
        }

    if (auto* s = section(d, "vertices"))
        for (const auto& l : *s) {
            Cursor c(l);
            std::string name = c.ident();
            if (p.graph.find_vertex(name) >= 0) c.fail("duplicate vertex '" + name + "'");
            c.expect(':');
            int v = p.add_vertex(name);
            while (!c.done()) {
                int col = c.column();
                std::string tok = c.word();
                int h;
                try {
                    h = p.graph.half_edge(tok);
                } catch (const GraphError& e) {
                    throw ParseError(l.number, col + 1, e.what());
                }
                p.attach(v, h);
            }
        }
    try {
        p.graph.validate();
        Lift check(cs);
        (void)check;
    } catch (const GraphError& e) {
        throw ParseError(d.header_line("vertices"), 1, e.what());
    }
    return doc;
}

SurfaceSpec parse_surface_spec(const std::string& text) {
    Document d = split(text);
    const auto* s = section(d, "surface");
    if (!s || d.sections.size() != 1) throw ParseError(1, 1, "expected a single [surface] section");
    SurfaceSpec spec;
    bool have_genus = false;
    for (const auto& l : *s) {
        Cursor c(l);
        std::string kind = c.ident();
        if (kind == "genus") {
            spec.genus = static_cast<int>(c.number());
            have_genus = true;
        } else if (kind == "piece") {
            std::string name = c.ident();
            std::string type = c.word();
            Triangulation t;
            try {
                if (type == "one-vertex") t = one_vertex_surface(static_cast<int>(c.number()));
                else if (type == "pants") t = pants();
                else if (type == "two-vertex-torus") t = two_vertex_torus();
                else if (type == "stellar") t = stellar_subdivision(one_vertex_surface(static_cast<int>(c.number())), 0, "n");
                else c.fail("unknown piece type '" + type + "'");
            } catch (const GraphError& e) {
                c.fail(e.what());
            }
            for (const auto& pc : spec.pieces)
                if (pc.name == name) c.fail("duplicate piece '" + name + "'");
            spec.pieces.push_back({name, t});
        } else if (kind == "contour") {
            ContourSpec cs;
            cs.name = c.ident();
            auto ref = [&](Cursor& cc) {
                std::string pn = cc.ident();
                cc.expect(':');
                std::string vn = cc.ident();
                for (size_t i = 0; i < spec.pieces.size(); ++i)
                    if (spec.pieces[i].name == pn) {
                        const auto& names = spec.pieces[i].tri.vertex_names;
                        for (size_t v = 0; v < names.size(); ++v)
                            if (names[v] == vn) return BoundaryRef{static_cast<int>(i), static_cast<int>(v)};
                        cc.fail("piece '" + pn + "' has no vertex '" + vn + "'");
                    }
                cc.fail("unknown piece '" + pn + "'");
            };
            cs.tilde = ref(c);
            cs.hat = ref(c);
            spec.contours.push_back(cs);
        } else {
            c.fail("expected 'genus', 'piece' or 'contour'");
        }
        c.finish();
    }
    if (!have_genus) throw ParseError(d.header_line("surface"), 1, "missing genus");
    try {
        spec.validate();
    } catch (const GraphError& e) {
        throw ParseError(d.header_line("surface"), 1, e.what());
    }
    return spec;
}

TrinionGraph parse_trinion_graph(const std::string& text) {
    Document d = split(text);
    const auto* s = section(d, "trinion-graph");
    if (!s || d.sections.size() != 1) throw ParseError(1, 1, "expected a single [trinion-graph] section");
    TrinionGraph t;
    for (const auto& l : *s) {
        Cursor c(l);
        std::string kind = c.ident();
        if (kind == "trinions") {
            t.trinions = static_cast<int>(c.number());
        } else if (kind == "edge") {
            TrinionGraph::GEdge e;
            e.name = c.ident();
            auto outlet = [&](Cursor& cc) {
                int tr = static_cast<int>(cc.number());
                cc.expect(':');
                int slot = static_cast<int>(cc.number());
                if (tr < 1 || tr > t.trinions) cc.fail("trinion index out of range");
                return TrinionGraph::Outlet{tr - 1, slot};
            };
            e.a = outlet(c);
            e.b = outlet(c);
            t.edges.push_back(e);
        } else {
            c.fail("expected 'trinions' or 'edge'");
        }
        c.finish();
    }
    try {
        t.validate();
    } catch (const GraphError& e) {
        throw ParseError(d.header_line("trinion-graph"), 1, e.what());
    }
    return t;
}

GraphDocument load_document(const std::string& text) {
    Document d = split(text);
    if (d.sections.empty()) throw ParseError(1, 1, "empty document");
    const std::string& first = d.sections.front().first;
    if (first == "surface") {
        Gamma2 g = build_gamma2(parse_surface_spec(text));
        return {g.pair, g.cs};
    }
    if (first == "trinion-graph") {
        Gamma2 g = build_trinion_decomposition(parse_trinion_graph(text));
        return {g.pair, g.cs};
    }
    return parse_graph(text);
}

}  // namespace gf
