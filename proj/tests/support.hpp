#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "goldform/builders.hpp"
#include "goldform/two_form.hpp"

namespace gft {

using gf::cplx;

inline cplx rand_c(std::mt19937_64& rng, double r = 1.0) {
    std::uniform_real_distribution<double> u(-r, r);
    double re = u(rng);
    return {re, u(rng)};
}

// Nonzero complex number with modulus in [lo, hi].
inline cplx rand_nonzero(std::mt19937_64& rng, double lo = 0.5, double hi = 2.0) {
    std::uniform_real_distribution<double> m(lo, hi), a(-3.14159, 3.14159);
    double r = m(rng);
    return std::polar(r, a(rng));
}

inline std::vector<cplx> axpy(const std::vector<cplx>& x, cplx s, const std::vector<cplx>& d) {
    std::vector<cplx> r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += s * d[i];
    return r;
}

inline double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace gft
