#include <doctest.h>

#include <json.hpp>

#include "goldform/errors.hpp"
#include "goldform/verify.hpp"
#include "support.hpp"

using namespace gf;

TEST_CASE("catalog lists every scenario") {
    auto list = list_scenarios();
    std::vector<std::string> names;
    for (const auto& s : list) names.push_back(s.name);
    for (const char* n : {"sep-g2", "nonsep-g2", "two-contour-g2", "trinion-g2-theta", "trinion-g2-theta-prime",
                          "trinion-g2-dumbbell", "multicontour-g3", "moves-invariance-g2", "closedness-g2",
                          "goldman-bracket-g2", "trinion-relabel", "glue-roundtrip", "control-broken-vertex",
                          "control-mismatched-lambda"}) {
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
        CHECK(has_scenario(n));
    }
    CHECK_FALSE(has_scenario("nope"));
    CHECK_THROWS_AS(run_scenario("nope"), GraphError);
    CHECK_THROWS_AS(run_scenario("sep-g2", 1, 0), GraphError);
}

TEST_CASE("reports are reproducible per seed") {
    Report a = run_scenario("sep-g2", 7, 5), b = run_scenario("sep-g2", 7, 5), c = run_scenario("sep-g2", 8, 5);
    CHECK(a.digest == b.digest);
    CHECK(a.digest != c.digest);
    CHECK(a.pass);
    CHECK(a.digest.size() == 16);
}

TEST_CASE("negative controls detect their failure") {
    for (const char* n : {"control-broken-vertex", "control-mismatched-lambda"}) {
        Report r = run_scenario(n, 42, 5);
        CHECK(r.pass);
        for (const auto& c : r.checks) CHECK_FALSE(c.below);
    }
}

TEST_CASE("a tolerance that is too tight fails the target check") {
    Report r = run_scenario("nonsep-g2", 42, 3, 1e-30);
    CHECK_FALSE(r.pass);
    bool found = false;
    for (const auto& c : r.checks)
        if (c.name == "target") {
            found = true;
            CHECK_FALSE(c.pass);
        }
    CHECK(found);
}

TEST_CASE("report formats") {
    Report r = run_scenario("trinion-relabel", 42, 3);
    auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["scenario"] == "trinion-relabel");
    CHECK(j["pass"] == r.pass);
    CHECK(j["checks"].size() == r.checks.size());
    std::string t = to_text(r);
    CHECK(t.find("result PASS") != std::string::npos);
}

TEST_CASE("the separating reduction ends in one vertex") {
    Gamma2 g = build_gamma2(sep_g2_spec());
    SeparatingReduction red = reduce_separating(g);
    const AdmissiblePair& last = red.steps.back().pair;
    int nonempty = 0;
    for (const auto& v : last.graph.vertices) nonempty += !v.rot.empty();
    CHECK(nonempty == 1);
    std::mt19937_64 rng(41);
    Point x = sample_point(g, rng);
    for (bool balanced : {false, true}) {
        auto m = glued_tuple(g, red, balanced);
        MonodromyTuple<Mat2c> v;
        for (size_t i = 0; i < m.alpha.size(); ++i) {
            v.alpha.push_back(eval_value(m.alpha[i], x));
            v.beta.push_back(eval_value(m.beta[i], x));
        }
        CHECK(relation_residual(v) < 1e-9);
    }
    CHECK_THROWS_AS(reduce_separating(build_gamma2(nonsep_g2_spec())), GraphError);
}

TEST_CASE("eigen frames diagonalize") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 20; ++k) {
        Mat2c g = random_sl2(rng);
        cplx l = gft::rand_nonzero(rng);
        Mat2c m = g * Mat2c::diag(l, 1.0 / l) * g.inverse();
        Mat2c f = eigen_frame(m, l, 1.0 / l);
        CHECK(std::abs(f.det() - 1.0) < 1e-12);
        CHECK(max_abs_diff(f * Mat2c::diag(l, 1.0 / l) * f.inverse(), m) < 1e-11 * std::max(1.0, max_abs(m)));
    }
    CHECK_THROWS_AS(eigen_frame(Mat2c::identity(), 1.0, 1.0), DomainError);
}
