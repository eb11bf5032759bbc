#pragma once

#include <array>
#include <complex>

namespace gf {

using cplx = std::complex<double>;

// Index of the mixed term eps_i eps_j (i < j) in Jet::dd.
constexpr int pair_index(int i, int j) {
    if (i > j) {
        int t = i;
        i = j;
        j = t;
    }
    return i + j - 1;
}

// Truncated multivariate jet over C[e0,e1,e2]/(e0^2, e1^2, e2^2, e0 e1 e2).
// Carries a value, three first derivatives and the three mixed second derivatives.
struct Jet {
    cplx v{};
    std::array<cplx, 3> d{};
    std::array<cplx, 3> dd{};

    Jet() = default;
    Jet(cplx value) : v(value) {}
    Jet(double value) : v(value) {}

    static Jet variable(cplx value, const std::array<cplx, 3>& dirs) {
        Jet j(value);
        j.d = dirs;
        return j;
    }

    Jet& operator+=(const Jet& o) {
        v += o.v;
        for (int i = 0; i < 3; ++i) {
            d[i] += o.d[i];
            dd[i] += o.dd[i];
        }
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        v -= o.v;
        for (int i = 0; i < 3; ++i) {
            d[i] -= o.d[i];
            dd[i] -= o.dd[i];
        }
        return *this;
    }
    Jet& operator*=(const Jet& o);
    Jet& operator/=(const Jet& o);
};

inline Jet operator-(const Jet& a) {
    Jet r;
    r.v = -a.v;
    for (int i = 0; i < 3; ++i) {
        r.d[i] = -a.d[i];
        r.dd[i] = -a.dd[i];
    }
    return r;
}

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    r.v = a.v * b.v;
    for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            int p = pair_index(i, j);
            r.dd[p] = a.dd[p] * b.v + a.v * b.dd[p] + a.d[i] * b.d[j] + a.d[j] * b.d[i];
        }
    }
    return r;
}

// f(a) for a scalar holomorphic f, given f, f', f'' at a.v.
inline Jet apply(const Jet& a, cplx f0, cplx f1, cplx f2) {
    Jet r;
    r.v = f0;
    for (int i = 0; i < 3; ++i) r.d[i] = f1 * a.d[i];
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            int p = pair_index(i, j);
            r.dd[p] = f1 * a.dd[p] + f2 * a.d[i] * a.d[j];
        }
    }
    return r;
}

inline Jet reciprocal(const Jet& a) {
    cplx inv = 1.0 / a.v;
    return apply(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

inline Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
inline Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

inline Jet exp(const Jet& a) {
    cplx e = std::exp(a.v);
    return apply(a, e, e, e);
}

inline Jet log(const Jet& a) {
    cplx inv = 1.0 / a.v;
    return apply(a, std::log(a.v), inv, -inv * inv);
}

// Principal branch.
inline Jet sqrt(const Jet& a) {
    cplx s = std::sqrt(a.v);
    return apply(a, s, 0.5 / s, -0.25 / (s * a.v));
}

// Directional derivative along e_i, re-expanded as a jet in the remaining direction k.
// The result carries D_i f and D_k D_i f.
inline Jet partial(const Jet& a, int i, int k) {
    Jet r;
    r.v = a.d[i];
    r.d[k] = a.dd[pair_index(i, k)];
    return r;
}

// Keep value and the first-order part along direction k only.
inline Jet restrict_to(const Jet& a, int k) {
    Jet r;
    r.v = a.v;
    r.d[k] = a.d[k];
    return r;
}

inline cplx value_of(const cplx& a) { return a; }
inline cplx value_of(const Jet& a) { return a.v; }

}  // namespace gf
