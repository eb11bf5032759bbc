#include <doctest.h>

#include "goldform/errors.hpp"
#include "goldform/verify.hpp"
#include "support.hpp"

using namespace gf;

namespace {

const Gamma2& sep() {
    static const Gamma2 g = build_gamma2(sep_g2_spec());
    return g;
}

}  // namespace

TEST_CASE("constant jumps give a zero form") {
    MonodromyTuple<Mat2c> t{{Mat2c::identity(), Mat2c::identity()}, {Mat2c::identity(), Mat2c::identity()}};
    AdmissiblePair p = build_gamma0(t);
    CHECK(validate_admissible(p, {}).admissible);
    CHECK(std::abs(omega_eval(p, {}, {}, {})) == 0.0);
    CHECK(std::abs(closedness_residual(p, {}, {}, {}, {})) == 0.0);
}

TEST_CASE("the form is bilinear and antisymmetric in the tangents") {
    const Gamma2& g = sep();
    std::mt19937_64 rng(11);
    Lift lift(g.cs);
    for (int k = 0; k < 5; ++k) {
        Point x = sample_point(g, rng);
        Tangent u = random_tangent(lift, rng), v = random_tangent(lift, rng), w = random_tangent(lift, rng);
        cplx a = gft::rand_c(rng);
        cplx uv = omega_eval(g.pair, x, u, v), vu = omega_eval(g.pair, x, v, u);
        CHECK(std::abs(uv + vu) < 1e-12);
        Tangent s(u.size());
        for (size_t i = 0; i < s.size(); ++i) s[i] = a * u[i] + w[i];
        cplx lhs = omega_eval(g.pair, x, s, v), rhs = a * uv + omega_eval(g.pair, x, w, v);
        CHECK(gft::rel_err(lhs, rhs) < 1e-12);
        auto per = omega_per_vertex(g.pair, x, u, v);
        cplx sum = 0.0;
        for (cplx c : per) sum += c;
        CHECK(std::abs(sum - uv) < 1e-14);
        CHECK(per.size() == g.pair.graph.vertices.size());
    }
}

TEST_CASE("second-order jets match differences of the form") {
    const Gamma2& g = sep();
    std::mt19937_64 rng(12);
    Lift lift(g.cs);
    for (int k = 0; k < 5; ++k) {
        Point x = sample_point(g, rng);
        Tangent a = random_tangent(lift, rng), b = random_tangent(lift, rng), c = random_tangent(lift, rng);
        AdmissiblePair broken = break_vertex(g);
        double h = 1e-5;
        OmegaOptions loose{false, 0.0};
        cplx fd = (omega_eval(broken, gft::axpy(x, h, a), b, c, loose) - omega_eval(broken, gft::axpy(x, -h, a), b, c, loose)) /
                  (2 * h);
        CHECK(gft::rel_err(omega_derivative(broken, x, a, b, c), fd) < 1e-6);
    }
}

TEST_CASE("moving the cilium of an admissible vertex does not change the form") {
    const Gamma2& g = sep();
    std::mt19937_64 rng(13);
    Lift lift(g.cs);
    Point x = sample_point(g, rng);
    Tangent u = random_tangent(lift, rng), v = random_tangent(lift, rng);
    cplx ref = omega_eval(g.pair, x, u, v);
    for (int vtx = 0; vtx < 3; ++vtx) {
        int n = static_cast<int>(g.pair.graph.vertices[vtx].rot.size());
        for (int pos = 1; pos < n; ++pos) {
            AdmissiblePair q = rotate_cilium(g.pair, vtx, pos);
            CHECK(gft::rel_err(omega_eval(q, x, u, v), ref) < 1e-11);
        }
    }
}

TEST_CASE("evaluation requires admissibility unless told otherwise") {
    const Gamma2& g = sep();
    std::mt19937_64 rng(14);
    Lift lift(g.cs);
    Point x = sample_point(g, rng);
    Tangent u = random_tangent(lift, rng), v = random_tangent(lift, rng);
    AdmissiblePair broken = break_vertex(g);
    CHECK_THROWS_AS(omega_eval(broken, x, u, v), NotAdmissibleError);
    CHECK_THROWS_AS(omega_matrix(broken, g.cs, x), NotAdmissibleError);
    CHECK_NOTHROW(omega_eval(broken, x, u, v, OmegaOptions{false, 0.0}));
    CHECK_THROWS_AS(omega_eval(g.pair, Point(3, 0.0), u, v), GraphError);
    Point bad = x;
    bad[g.contours[0].l] += 0.1;
    CHECK_THROWS_AS(omega_matrix(g.pair, g.cs, bad), GraphError);
}

TEST_CASE("Poisson inversion") {
    const Gamma2& g = sep();
    std::mt19937_64 rng(15);
    TwoFormMatrix m = omega_matrix(g.pair, g.cs, sample_point(g, rng));
    PoissonMatrix p = invert_to_poisson(m);
    long n = m.coeffs.rows();
    CHECK((p.coeffs * m.coeffs - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(p.condition >= 1.0);
    TwoFormMatrix z = m;
    z.coeffs.setZero();
    CHECK_THROWS_AS(invert_to_poisson(z), DomainError);
    TwoFormMatrix odd;
    odd.basis = {"a", "b", "c"};
    odd.coeffs = Eigen::MatrixXcd::Zero(3, 3);
    CHECK_THROWS_AS(invert_to_poisson(odd), DomainError);
}

TEST_CASE("form serialization") {
    TwoFormMatrix t = target_sep_g2();
    TwoFormMatrix back = two_form_from_json(to_json(t));
    CHECK(back.basis == t.basis);
    CHECK((back.coeffs - t.coeffs).cwiseAbs().maxCoeff() == 0.0);
    std::string csv = to_csv(t);
    CHECK(csv.rfind("coord,zeta_t_e2", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    CHECK(to_text(t).find("beta_g") != std::string::npos);
}
