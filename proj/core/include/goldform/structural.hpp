#pragma once

#include <cmath>

#include "goldform/errors.hpp"
#include "goldform/mat2.hpp"

namespace gf {

// Singularity guard used by the structural formulas.
inline constexpr double kSingularTol = 1e-14;

template <class T>
Mat2<T> shear_matrix(const T& z) {
    if (std::abs(value_of(z)) < kSingularTol) throw DomainError("shear coordinate must be nonzero");
    return {T(0.0), z, -(T(1.0) / z), T(0.0)};
}

// Order-three element on every trivalent corner.
template <class T = cplx>
Mat2<T> a_matrix() {
    return {T(0.0), T(-1.0), T(1.0), T(-1.0)};
}

// Loop jump at the middle plumbing vertex.
template <class T = cplx>
Mat2<T> b_matrix() {
    return {T(0.0), T(1.0), T(-1.0), T(0.0)};
}

template <class T>
struct DiagPair {
    Mat2<T> c;       // unipotent lower triangular
    Mat2<T> lambda;  // diagonal, raw entries (M11, M22)
};

// M = C Lambda C^{-1} for lower triangular M with distinct diagonal entries.
template <class T>
DiagPair<T> diag_lower(const Mat2<T>& m, double tol = 1e-10) {
    double scale = std::max(1.0, std::abs(value_of(m.a)) + std::abs(value_of(m.d)));
    if (std::abs(value_of(m.b)) > tol * scale) throw DomainError("matrix is not lower triangular");
    T gap = m.a - m.d;
    if (std::abs(value_of(gap)) < tol * scale) throw DomainError("non-diagonalizable within tolerance (lambda^2 = 1)");
    T cc = m.c / gap;
    DiagPair<T> r;
    r.c = {T(1.0), T(0.0), cc, T(1.0)};
    r.lambda = Mat2<T>::diag(m.a, m.d);
    return r;
}

// C diag(b^{-1}, b); preserves C Lambda C^{-1}.
template <class T>
Mat2<T> toric_conjugate(const Mat2<T>& c, const T& b) {
    if (std::abs(value_of(b)) < kSingularTol) throw DomainError("toric parameter must be nonzero");
    return c * Mat2<T>::diag(T(1.0) / b, b);
}

// diag(e^beta, e^{-beta}); right multiplication by this is toric_conjugate with b = e^{-beta}.
template <class T>
Mat2<T> toric_matrix(const T& beta) {
    using std::exp;
    return Mat2<T>::diag(exp(beta), exp(-beta));
}

}  // namespace gf
