#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "goldform/jet.hpp"

namespace gf {

enum class CoordRole { Shear, Length, Twist, SideTwist, Other };

const char* role_name(CoordRole r);
CoordRole role_from_name(const std::string& s);

// sum_k c_k x_k = rhs, modulo 2 pi i when modular.
struct LinearRelation {
    std::string label;
    std::vector<std::pair<int, double>> terms;
    cplx rhs{};
    bool modular = true;
};

struct CoordinateSystem {
    std::vector<std::string> names;
    std::vector<CoordRole> roles;
    std::vector<LinearRelation> relations;
    std::vector<int> free;  // coordinates spanning the reduced space, in basis order

    int index(const std::string& name) const;
    int add(const std::string& name, CoordRole role);
    std::vector<std::string> free_names() const;
    std::vector<int> dependent() const;
};

// Picks at most one dependent per group, the first in group order that keeps the dependent
// block nonsingular, then completes from all coordinates. Returns the free coordinates.
std::vector<int> choose_free(const CoordinateSystem& cs, const std::vector<std::vector<int>>& groups);

// Linear solve from free coordinates to the full coordinate vector.
class Lift {
public:
    explicit Lift(const CoordinateSystem& cs);

    std::vector<cplx> tangent(const std::vector<cplx>& free_values) const;
    std::vector<cplx> point(const std::vector<cplx>& free_values) const;
    std::vector<cplx> basis_tangent(int i) const;
    std::vector<cplx> restrict_free(const std::vector<cplx>& full) const;
    size_t dim() const { return free_.size(); }

private:
    size_t n_ = 0;
    std::vector<int> free_, dep_;
    Eigen::MatrixXcd solve_;   // -A_D^{-1} A_F
    Eigen::VectorXcd offset_;  // A_D^{-1} rhs
};

// Residual of every relation; modular ones are reduced modulo 2 pi i.
double relation_residual(const CoordinateSystem& cs, const std::vector<cplx>& x);

// Fills unbound coordinates from the relations. Bound dependents must agree.
std::vector<cplx> complete_point(const CoordinateSystem& cs, const std::map<std::string, cplx>& bound,
                                 double tol = 1e-9);

}  // namespace gf
