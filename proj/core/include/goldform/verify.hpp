#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "goldform/builders.hpp"

namespace gf {

struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool below = true;  // pass when value < threshold, otherwise when value > threshold
    bool pass = false;
};

struct Report {
    std::string scenario;
    std::uint64_t seed = 0;
    int samples = 0;
    double tol = 0.0;
    std::vector<Check> checks;
    double max_residual = 0.0;  // over the "below" checks
    bool pass = false;
    double wall_ms = 0.0;
    std::string digest;  // FNV-1a over sampled points and check values
    std::string error;   // builder or precondition failure
};

struct ScenarioInfo {
    std::string name;
    std::string description;
};

std::vector<ScenarioInfo> list_scenarios();
bool has_scenario(const std::string& name);
// Throws GraphError for an unknown name; other failures are recorded in the report.
Report run_scenario(const std::string& name, std::uint64_t seed = 42, int samples = 50, double tol = 1e-9);

std::string to_json(const Report& r);
std::string to_text(const Report& r);

// ---------------------------------------------------------------------------
// Pieces shared with the tests.

// Random tangent of the free coordinates, lifted to the full space.
Tangent random_tangent(const Lift& lift, std::mt19937_64& rng);

// Random element of SL(2, C) with entries of moderate size.
Mat2c random_sl2(std::mt19937_64& rng);

// Random point of the genus-1 two-boundary space with common Lambda = diag(-l, -1/l).
TwoBoundaryPoint<Mat2c> random_two_boundary_point(std::mt19937_64& rng);

// M = G diag(m0, m1) G^{-1} with det G = 1, for distinct eigenvalues.
Mat2c eigen_frame(const Mat2c& m, cplx m0, cplx m1);

struct ReductionStep {
    std::string label;
    AdmissiblePair pair;
};

// Merges, zips and regroups that take the separating genus-2 graph to one handle per torus,
// then merge the plumbing into a single vertex. Each torus handle (U, V) satisfies
// M_t [U, V^{-1}] = I at its vertex.
struct SeparatingReduction {
    std::vector<ReductionStep> steps;
    ExprPtr u_t, v_t, u_h, v_h;
};

SeparatingReduction reduce_separating(const Gamma2& g);

// Glued monodromies of a separating two-torus graph as coordinate expressions.
// With balanced = false this is the gluing map verbatim (tilde conjugated by C_h b^{-1} C_t^{-1});
// balanced conjugates the whole tuple by C_h^{-1}, which leaves traces and Omega unchanged.
MonodromyTuple<ExprPtr> glued_tuple(const Gamma2& g, const SeparatingReduction& r, bool balanced);

// Deliberately non-admissible copy of a pair: one shear jump is multiplied by T(z) A T(beta),
// which also makes the form non-closed.
AdmissiblePair break_vertex(const Gamma2& g);

}  // namespace gf
