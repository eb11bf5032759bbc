#include <doctest.h>

#include <numbers>

#include "goldform/coords.hpp"
#include "goldform/errors.hpp"
#include "support.hpp"

using namespace gf;

namespace {

// x0 + x1 + x2 = i pi (mod 2 pi i), x3 - 2 x4 = 0.
CoordinateSystem small_system() {
    CoordinateSystem cs;
    for (const char* n : {"a", "b", "c", "t", "u"}) cs.add(n, CoordRole::Shear);
    cs.relations.push_back({"sum", {{0, 1.0}, {1, 1.0}, {2, 1.0}}, cplx(0.0, std::numbers::pi), true});
    cs.relations.push_back({"twist", {{3, 1.0}, {4, -2.0}}, 0.0, false});
    cs.free = choose_free(cs, {});
    return cs;
}

}  // namespace

TEST_CASE("choose_free picks one dependent per relation") {
    CoordinateSystem cs = small_system();
    CHECK(cs.free.size() == 3);
    CHECK(cs.dependent().size() == 2);
    CoordinateSystem g = small_system();
    g.free = choose_free(g, {{2, 1, 0}});
    CHECK(std::find(g.free.begin(), g.free.end(), 2) == g.free.end());
}

TEST_CASE("lifted points satisfy the relations and tangents their differentials") {
    CoordinateSystem cs = small_system();
    Lift lift(cs);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) {
        std::vector<cplx> f{gft::rand_c(rng), gft::rand_c(rng), gft::rand_c(rng)};
        auto x = lift.point(f);
        CHECK(relation_residual(cs, x) < 1e-14);
        auto t = lift.tangent(f);
        CHECK(std::abs(t[0] + t[1] + t[2]) < 1e-14);
        CHECK(std::abs(t[3] - 2.0 * t[4]) < 1e-14);
        auto back = lift.restrict_free(x);
        for (size_t i = 0; i < f.size(); ++i) CHECK(std::abs(back[i] - f[i]) < 1e-15);
    }
}

TEST_CASE("modular relations accept shifts by 2 pi i") {
    CoordinateSystem cs = small_system();
    Lift lift(cs);
    auto x = lift.point({0.1, 0.2, 0.3});
    x[0] += cplx(0.0, 2 * std::numbers::pi);
    CHECK(relation_residual(cs, x) < 1e-13);
    x[3] += cplx(0.0, 2 * std::numbers::pi);
    CHECK(relation_residual(cs, x) > 1.0);
}

TEST_CASE("complete_point fills dependents and checks consistency") {
    CoordinateSystem cs = small_system();
    std::map<std::string, cplx> bound;
    for (int i : cs.free) bound[cs.names[i]] = 0.25;
    auto x = complete_point(cs, bound);
    CHECK(relation_residual(cs, x) < 1e-14);
    bound["zz"] = 1.0;
    CHECK_THROWS_AS(complete_point(cs, bound), GraphError);
    bound.erase("zz");
    bound.erase(cs.names[cs.free[0]]);
    CHECK_THROWS_AS(complete_point(cs, bound), GraphError);
}

TEST_CASE("dependent relations are rejected") {
    CoordinateSystem cs = small_system();
    cs.relations.push_back({"dup", {{3, 2.0}, {4, -4.0}}, 0.0, false});
    CHECK_THROWS_AS(choose_free(cs, {}), GraphError);
    CHECK_THROWS_AS(cs.add("a", CoordRole::Other), GraphError);
    CHECK_THROWS_AS(role_from_name("spin"), GraphError);
    CHECK(role_from_name(role_name(CoordRole::SideTwist)) == CoordRole::SideTwist);
}
