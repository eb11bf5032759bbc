#include <doctest.h>

#include "goldform/expr.hpp"
#include "goldform/jet.hpp"
#include "goldform/structural.hpp"
#include "support.hpp"

using namespace gf;
using gft::rand_c;
using gft::rand_nonzero;

TEST_CASE("jet arithmetic matches finite differences") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        cplx x0 = rand_nonzero(rng), d0 = rand_c(rng), d1 = rand_c(rng);
        auto f = [](auto x) { return exp(x) * x / (x + decltype(x)(3.0)) - sqrt(x * x + decltype(x)(1.0)); };
        auto fc = [](cplx x) { return std::exp(x) * x / (x + 3.0) - std::sqrt(x * x + 1.0); };
        Jet j = Jet::variable(x0, {d0, d1, 0.0});
        Jet y = f(j);
        double h = 1e-5;
        cplx fd0 = (fc(x0 + h * d0) - fc(x0 - h * d0)) / (2 * h);
        cplx fd01 = (fc(x0 + h * (d0 + d1)) - fc(x0 + h * (d0 - d1)) - fc(x0 - h * (d0 - d1)) + fc(x0 - h * (d0 + d1))) /
                    (4 * h * h);
        CHECK(std::abs(y.v - fc(x0)) < 1e-13);
        CHECK(gft::rel_err(y.d[0], fd0) < 1e-8);
        CHECK(gft::rel_err(y.dd[pair_index(0, 1)], fd01) < 1e-5);
    }
}

TEST_CASE("jet log inverts exp") {
    Jet j = Jet::variable(cplx(0.3, 0.2), {1.0, cplx(0, 1), 2.0});
    Jet r = log(exp(j));
    CHECK(std::abs(r.v - j.v) < 1e-15);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(r.d[i] - j.d[i]) < 1e-14);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(r.dd[i]) < 1e-14);
}

TEST_CASE("structural identities") {
    std::mt19937_64 rng(2);
    Mat2c a = a_matrix(), b = b_matrix();
    CHECK(distance_to_identity(a * a * a) < 1e-15);
    CHECK(std::abs(b.det() - 1.0) < 1e-15);
    for (int k = 0; k < 100; ++k) {
        cplx z = rand_nonzero(rng, 0.1, 10.0), l = rand_nonzero(rng, 0.1, 10.0);
        Mat2c s = shear_matrix(z);
        CHECK(max_abs_diff(s.inverse(), Mat2c{} - s) < 1e-13 * max_abs(s));
        CHECK(std::abs(s.det() - 1.0) < 1e-13);
        Mat2c lam = Mat2c::diag(-l, -1.0 / l);
        CHECK(max_abs_diff(b.inverse() * lam * b, lam.inverse()) < 1e-13 * max_abs(lam));
    }
}

TEST_CASE("diag_lower reconstructs a lower triangular matrix") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        cplx l = rand_nonzero(rng), c = rand_c(rng, 3.0);
        if (std::abs(l * l - 1.0) < 0.1) continue;
        Mat2c m{l, 0.0, c, 1.0 / l};
        DiagPair<cplx> d = diag_lower(m);
        CHECK(max_abs_diff(d.c * d.lambda * d.c.inverse(), m) < 1e-12);
        CHECK(d.c.a == cplx(1.0));
        CHECK(d.c.b == cplx(0.0));
    }
}

TEST_CASE("singular inputs are rejected") {
    CHECK_THROWS_AS(shear_matrix(cplx(0.0)), DomainError);
    CHECK_THROWS_AS(diag_lower(Mat2c{1.0, 0.0, 2.0, 1.0}), DomainError);
    CHECK_THROWS_AS(diag_lower(Mat2c{1.0, 0.5, 2.0, 1.0}), DomainError);
    CHECK_THROWS_AS(toric_conjugate(Mat2c::identity(), cplx(0.0)), DomainError);
}

TEST_CASE("toric conjugation preserves C Lambda C^-1") {
    std::mt19937_64 rng(4);
    Mat2c c{1.0, 0.0, rand_c(rng), 1.0};
    Mat2c lam = Mat2c::diag(cplx(-2.0), cplx(-0.5));
    Mat2c c2 = toric_conjugate(c, rand_nonzero(rng));
    CHECK(max_abs_diff(c * lam * c.inverse(), c2 * lam * c2.inverse()) < 1e-13);
    cplx beta = rand_c(rng);
    CHECK(max_abs_diff(c * toric_matrix(beta), toric_conjugate(c, std::exp(-beta))) < 1e-14);
}

TEST_CASE("expressions evaluate shear matrices at exp of the coordinate") {
    ExprPtr s = e_shear(0), t = e_toric(1);
    std::vector<cplx> x{cplx(0.2, 0.1), cplx(-0.3, 0.4)};
    CHECK(max_abs_diff(eval_value(s, x), shear_matrix(std::exp(x[0]))) < 1e-15);
    CHECK(max_abs_diff(eval_value(t, x), toric_matrix(x[1])) < 1e-15);
    ExprPtr m = e_product({e_a(), s, e_inv(t)});
    CHECK(max_abs_diff(eval_value(m, x), a_matrix() * shear_matrix(std::exp(x[0])) * toric_matrix(-x[1])) < 1e-14);
    CHECK(is_identity(e_identity()));
    CHECK_FALSE(is_identity(s));
    std::vector<bool> used(3, false);
    collect_coords(m, used);
    CHECK(used == std::vector<bool>{true, true, false});
}

TEST_CASE("low parts of a lower triangular expression") {
    std::vector<cplx> x{cplx(0.4, 0.2)};
    Mat2c m{cplx(-2.0, 0.5), 0.0, cplx(0.3, -1.0), 1.0 / cplx(-2.0, 0.5)};
    ExprPtr e = e_mul(e_const(m), e_toric(0));
    Mat2c v = eval_value(e, x);
    Mat2c c = eval_value(e_low_c(e), x), l = eval_value(e_low_l(e), x);
    CHECK(max_abs_diff(c * l * c.inverse(), v) < 1e-13);
    CHECK(std::abs(l.b) + std::abs(l.c) < 1e-15);
}

TEST_CASE("evaluator jets match central differences of the value") {
    std::mt19937_64 rng(5);
    ExprPtr e = e_product({e_shear(0), e_a(), e_inv(e_shear(1)), e_toric(2), e_low_c(e_mul(e_const(Mat2c{2.0, 0.0, 0.5, 0.5}), e_toric(0)))});
    for (int k = 0; k < 10; ++k) {
        std::vector<cplx> x{rand_c(rng, 0.5), rand_c(rng, 0.5), rand_c(rng, 0.5)}, u{rand_c(rng), rand_c(rng), rand_c(rng)};
        Evaluator ev(seed_jets(x, {u}));
        Mat2c d = derivative(ev.eval(e), 0);
        double h = 1e-5;
        Mat2c fd = cplx(1.0 / (2 * h)) * (eval_value(e, gft::axpy(x, h, u)) - eval_value(e, gft::axpy(x, -h, u)));
        CHECK(max_abs_diff(d, fd) < 1e-6 * std::max(1.0, max_abs(fd)));
        Mat2c di = derivative(ev.eval_inverse(e), 0);
        Mat2c vi = eval_value(e, x).inverse();
        CHECK(max_abs_diff(di, Mat2c{} - vi * d * vi) < 1e-12 * std::max(1.0, max_abs(di)));
    }
}
