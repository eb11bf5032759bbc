#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "goldform/coords.hpp"
#include "goldform/ribbon_graph.hpp"

namespace gf {

using Point = std::vector<cplx>;
using Tangent = std::vector<cplx>;

// One vertex term: 1/2 sum_{l<n} tr(P_l^{-1} dP_l ^ J_l^{-1} dJ_l), P_l = J_1 ... J_l,
// given the outgoing jumps and their derivatives along u and v.
template <class T>
T vertex_form(const std::vector<Mat2<T>>& j, const std::vector<Mat2<T>>& ju, const std::vector<Mat2<T>>& jv) {
    size_t n = j.size();
    T sum(0.0);
    if (n < 2) return sum;
    Mat2<T> p = j[0], pu = ju[0], pv = jv[0];
    for (size_t l = 0; l + 1 < n; ++l) {
        if (l > 0) {
            Mat2<T> pnu = pu * j[l] + p * ju[l];
            Mat2<T> pnv = pv * j[l] + p * jv[l];
            p = p * j[l];
            pu = pnu;
            pv = pnv;
        }
        Mat2<T> pi = p.inverse();
        Mat2<T> ji = j[l].inverse();
        sum = sum + (pi * pu * ji * jv[l]).trace() - (pi * pv * ji * ju[l]).trace();
    }
    return T(0.5) * sum;
}

struct OmegaOptions {
    bool require_admissible = true;
    double admissibility_tol = 1e-8;
};

cplx omega_eval(const AdmissiblePair& p, const Point& x, const Tangent& u, const Tangent& v,
                const OmegaOptions& opt = {});

std::vector<cplx> omega_per_vertex(const AdmissiblePair& p, const Point& x, const Tangent& u, const Tangent& v);

struct TwoFormMatrix {
    std::vector<std::string> basis;
    Eigen::MatrixXcd coeffs;  // coeffs(i, j) = Omega(e_i, e_j)

    double antisymmetry_residual() const;
};

// Omega in the free coordinates of a coordinate system, via lifted basis tangents.
TwoFormMatrix omega_matrix(const AdmissiblePair& p, const CoordinateSystem& cs, const Point& x,
                           const OmegaOptions& opt = {});

// D_a Omega(b, c): derivative of Omega(b, c) along a, from second-order jets.
cplx omega_derivative(const AdmissiblePair& p, const Point& x, const Tangent& a, const Tangent& b, const Tangent& c);

// d Omega(u, v, w) for three tangents, using second-order jets.
cplx closedness_residual(const AdmissiblePair& p, const Point& x, const Tangent& u, const Tangent& v,
                         const Tangent& w);

struct PoissonMatrix {
    std::vector<std::string> basis;
    Eigen::MatrixXcd coeffs;
    double condition = 0.0;
};

// Throws DomainError when the form is degenerate.
PoissonMatrix invert_to_poisson(const TwoFormMatrix& m, double cond_limit = 1e12);

// {tr f, tr g} in the free coordinates, from gradients along lifted basis tangents.
cplx bracket_trace_functions(const AdmissiblePair& p, const CoordinateSystem& cs, const PoissonMatrix& pm,
                             const Point& x, const ExprPtr& f, const ExprPtr& g);

std::string to_csv(const TwoFormMatrix& m);
std::string to_json(const TwoFormMatrix& m);
std::string to_text(const TwoFormMatrix& m);
TwoFormMatrix two_form_from_json(const std::string& text);

}  // namespace gf
