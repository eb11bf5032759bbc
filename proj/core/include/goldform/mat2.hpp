#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "goldform/jet.hpp"

namespace gf {

// Dense 2x2 matrix [[a, b], [c, d]] over a commutative scalar ring.
template <class T>
struct Mat2 {
    T a{}, b{}, c{}, d{};

    static Mat2 identity() { return {T(1.0), T(0.0), T(0.0), T(1.0)}; }
    static Mat2 diag(const T& x, const T& y) { return {x, T(0.0), T(0.0), y}; }

    T det() const { return a * d - b * c; }
    T trace() const { return a + d; }
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    Mat2 inverse() const {
        T inv = T(1.0) / det();
        return {d * inv, -b * inv, -c * inv, a * inv};
    }
};

template <class T>
Mat2<T> operator*(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

template <class T>
Mat2<T> operator+(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

template <class T>
Mat2<T> operator-(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

template <class T>
Mat2<T> operator*(const T& s, const Mat2<T>& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
}

using Mat2c = Mat2<cplx>;
using Mat2J = Mat2<Jet>;

inline double max_abs(const Mat2c& m) {
    return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

inline double max_abs_diff(const Mat2c& x, const Mat2c& y) { return max_abs(x - y); }

inline double distance_to_identity(const Mat2c& m) { return max_abs(m - Mat2c::identity()); }

inline Mat2c value_of(const Mat2J& m) { return {m.a.v, m.b.v, m.c.v, m.d.v}; }

// First derivative of every entry along direction i.
inline Mat2c derivative(const Mat2J& m, int i) { return {m.a.d[i], m.b.d[i], m.c.d[i], m.d.d[i]}; }

inline Mat2J lift(const Mat2c& m) { return {Jet(m.a), Jet(m.b), Jet(m.c), Jet(m.d)}; }

template <class F>
Mat2J map_entries(const Mat2J& m, F f) {
    return {f(m.a), f(m.b), f(m.c), f(m.d)};
}

}  // namespace gf
