#include <doctest.h>

#include "goldform/errors.hpp"
#include "goldform/ribbon_graph.hpp"
#include "goldform/structural.hpp"
#include "support.hpp"

using namespace gf;

namespace {

// Two vertices joined by three edges with jumps A, A, A: products A^3 = I at each end.
AdmissiblePair theta_a() {
    AdmissiblePair p;
    int u = p.add_vertex("u"), v = p.add_vertex("v");
    int e[3];
    for (int k = 0; k < 3; ++k) e[k] = p.add_edge("e" + std::to_string(k), e_a());
    for (int k = 0; k < 3; ++k) p.attach(u, tail_of(e[k]));
    for (int k = 2; k >= 0; --k) p.attach(v, head_of(e[k]));
    return p;
}

}  // namespace

TEST_CASE("half-edge bookkeeping") {
    AdmissiblePair p = theta_a();
    p.graph.validate();
    CHECK(p.graph.half_edge("e1+") == tail_of(1));
    CHECK(p.graph.half_edge("e1-") == head_of(1));
    CHECK(p.graph.half_edge_name(head_of(2)) == "e2-");
    auto [v, pos] = p.graph.locate(head_of(0));
    CHECK(v == 1);
    CHECK(pos == 2);
    CHECK(other_end(tail_of(4)) == head_of(4));
    CHECK_THROWS_AS(p.graph.half_edge("e1"), GraphError);
    CHECK_THROWS_AS(p.graph.half_edge("zz+"), GraphError);
}

TEST_CASE("validation rejects malformed graphs") {
    AdmissiblePair p = theta_a();
    p.graph.vertices[0].rot.push_back(tail_of(0));
    CHECK_THROWS_AS(p.graph.validate(), GraphError);
    AdmissiblePair q = theta_a();
    q.graph.vertices[1].rot.pop_back();
    CHECK_THROWS_AS(q.graph.validate(), GraphError);
    AdmissiblePair r = theta_a();
    CHECK_THROWS_AS(r.add_edge("e0", e_a()), GraphError);
    CHECK_THROWS_AS(r.add_vertex("u"), GraphError);
}

TEST_CASE("admissibility of the A-theta graph") {
    AdmissiblePair p = theta_a();
    auto rep = validate_admissible(p, {});
    CHECK(rep.admissible);
    CHECK(rep.max_residual < 1e-15);
    p.jumps.jump[0] = e_b();
    CHECK_FALSE(validate_admissible(p, {}).admissible);
}

TEST_CASE("out jumps and path monodromy") {
    AdmissiblePair p;
    p.add_coord("z");
    int u = p.add_vertex("u"), v = p.add_vertex("v");
    int e = p.add_edge("e", e_shear(0));
    int f = p.add_edge("f", e_a());
    p.attach(u, tail_of(e));
    p.attach(u, tail_of(f));
    p.attach(v, head_of(f));
    p.attach(v, head_of(e));
    std::vector<cplx> x{cplx(0.3, 0.1)};
    Mat2c s = shear_matrix(std::exp(x[0]));
    CHECK(max_abs_diff(eval_value(p.out_jump(head_of(e)), x), s.inverse()) < 1e-15);
    Mat2c m = path_monodromy(p, parse_path(p.graph, "e+ f-"), x);
    CHECK(max_abs_diff(m, s * a_matrix().inverse()) < 1e-14);
    CHECK_THROWS_AS(parse_path(p.graph, "g+"), GraphError);
}

TEST_CASE("merge keeps admissibility and removes the edge") {
    AdmissiblePair p = theta_a();
    AdmissiblePair m = merge_vertices(p, 0);
    CHECK(m.graph.edges.size() == 2);
    auto rep = validate_admissible(m, {});
    CHECK(rep.admissible);
    CHECK_THROWS_AS(merge_vertices(m, 0), GraphError);
}

TEST_CASE("moves reject invalid requests") {
    AdmissiblePair p = theta_a();
    CHECK_THROWS_AS(zip_edges(p, 0, 0), GraphError);
    CHECK_THROWS_AS(regroup_handle(p, 0, 0), GraphError);
    CHECK_THROWS_AS(remove_identity_edge(p, 0), GraphError);
    CHECK_THROWS_AS(rotate_cilium(p, 0, 7), GraphError);
    CHECK(find_handle(p, 0) == -1);
}

TEST_CASE("an identity edge can be removed") {
    AdmissiblePair p = theta_a();
    int u = 0, v = 1;
    int e = p.add_edge("id", e_identity());
    p.attach(u, tail_of(e));
    p.attach(v, head_of(e));
    CHECK(validate_admissible(p, {}).admissible);
    AdmissiblePair q = remove_identity_edge(p, e);
    CHECK(q.graph.edges.size() == 3);
    CHECK(validate_admissible(q, {}).admissible);
}

TEST_CASE("zipping a bigon keeps admissibility") {
    AdmissiblePair p = theta_a();
    auto z = find_zippable(p);
    REQUIRE(z.first >= 0);
    MoveResult r = zip_edges(p, z.first, z.second);
    CHECK(r.pair.graph.edges.size() == 2);
    CHECK(r.new_edges.size() == 1);
    r.pair.graph.validate();
    CHECK(validate_admissible(r.pair, {}).admissible);
}
