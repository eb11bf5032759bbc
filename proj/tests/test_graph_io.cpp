#include <doctest.h>

#include "goldform/errors.hpp"
#include "goldform/graph_io.hpp"
#include "goldform/verify.hpp"
#include "support.hpp"

using namespace gf;

namespace {

ParseError parse_error(const std::string& text) {
    try {
        (void)load_document(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, 0, "");
}

const char* kTheta = R"([coordinates]
z shear
w twist

[constraints]
free z w

[edges]
e0 A
e1 A * T(w)
e2 inv(T(w)) * A

[vertices]
u : e0+ e1+ e2+
v : e2- e1- e0-
)";

}  // namespace

TEST_CASE("catalog graphs survive a serialize and parse round trip") {
    std::mt19937_64 rng(31);
    for (const auto& g : {build_gamma2(sep_g2_spec()), build_gamma2(nonsep_g2_spec()),
                          build_trinion_decomposition(theta_prime_graph())}) {
        std::string text = serialize(g.pair, g.cs);
        GraphDocument d = parse_graph(text);
        CHECK(d.cs.names == g.cs.names);
        CHECK(d.cs.free == g.cs.free);
        CHECK(serialize(d.pair, d.cs) == text);
        Point x = sample_point(g, rng);
        TwoFormMatrix a = omega_matrix(g.pair, g.cs, x), b = omega_matrix(d.pair, d.cs, x);
        CHECK((a.coeffs - b.coeffs).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("a hand-written graph parses") {
    GraphDocument d = parse_graph(kTheta);
    CHECK(d.pair.graph.vertices.size() == 2);
    CHECK(d.cs.free.size() == 2);
    CHECK(validate_admissible(d.pair, {0.1, 0.2}).max_residual < 1e-14);
}

TEST_CASE("literal matrices keep full precision") {
    AdmissiblePair p;
    int v = p.add_vertex("v");
    Mat2c m{cplx(0.1, 1.0 / 3.0), cplx(-2.5, 0.0), cplx(1e-7, 4.0), cplx(0.7, -0.2)};
    int e = p.add_edge("e", e_const(m));
    p.attach(v, tail_of(e));
    p.attach(v, head_of(e));
    GraphDocument d = parse_graph(serialize(p, CoordinateSystem{}));
    CHECK(max_abs_diff(eval_value(d.pair.jumps.jump[0], {}), m) == 0.0);
}

TEST_CASE("parse errors carry line and column") {
    std::string t = kTheta;
    auto at = [&](const std::string& from, const std::string& to) {
        std::string s = t;
        s.replace(s.find(from), from.size(), to);
        return parse_error(s);
    };
    ParseError e = at("e1 A * T(w)", "e1 A * T(q)");
    CHECK(e.line == 10);
    CHECK(e.column == 10);
    e = at("e2 inv(T(w)) * A", "e2 inv(T(w) * A");
    CHECK(e.line == 11);
    e = at("u : e0+ e1+ e2+", "u : e0+ e1+ e2");
    CHECK(e.line >= 14);
    e = at("[edges]", "[edge]");
    CHECK(e.line == 8);
    e = at("z shear", "z spin");
    CHECK(e.line == 2);
    e = parse_error("");
    CHECK(e.line == 1);
    e = at("e0 A", "e0 Q");
    CHECK(e.line == 9);
    CHECK(e.column == 4);
}

TEST_CASE("surface documents build the same graph as the catalog") {
    const char* text = R"([surface]
genus 2
piece t one-vertex 1
piece h one-vertex 1
contour g t:v0 h:v0
)";
    SurfaceSpec s = parse_surface_spec(text);
    CHECK(s.pieces.size() == 2);
    GraphDocument d = load_document(text);
    Gamma2 g = build_gamma2(sep_g2_spec());
    CHECK(serialize(d.pair, d.cs) == serialize(g.pair, g.cs));
    CHECK_THROWS_AS(parse_surface_spec("[surface]\ngenus 2\npiece t pants\ncontour g t:v1 t:v9\n"), ParseError);
    CHECK_THROWS_AS(parse_surface_spec("[surface]\npiece t pants\n"), ParseError);
}

TEST_CASE("trinion documents") {
    const char* text = "[trinion-graph]\ntrinions 2\nedge e1 1:0 2:0\nedge e2 1:1 2:1\nedge e3 1:2 2:2\n";
    TrinionGraph t = parse_trinion_graph(text);
    CHECK(t.edges.size() == 3);
    CHECK(t.edges[1].b.trinion == 1);
    GraphDocument d = load_document(text);
    Gamma2 g = build_trinion_decomposition(theta_prime_graph());
    CHECK(serialize(d.pair, d.cs) == serialize(g.pair, g.cs));
    ParseError e(0, 0, "");
    try {
        parse_trinion_graph("[trinion-graph]\ntrinions 2\nedge e1 1:0 3:0\n");
    } catch (const ParseError& x) {
        e = x;
    }
    CHECK(e.line == 3);
}
