#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "goldform/coords.hpp"
#include "goldform/ribbon_graph.hpp"
#include "goldform/structural.hpp"
#include "goldform/surfaces.hpp"
#include "goldform/two_form.hpp"

namespace gf {

// ---------------------------------------------------------------------------
// Canonical dissection and gluing of monodromy data.

inline Mat2c gmul(const Mat2c& a, const Mat2c& b) { return a * b; }
inline Mat2c ginv(const Mat2c& a) { return a.inverse(); }
inline ExprPtr gmul(const ExprPtr& a, const ExprPtr& b) { return e_mul(a, b); }
inline ExprPtr ginv(const ExprPtr& a) { return e_inv(a); }

template <class M>
M b_matrix_of();
template <>
inline Mat2c b_matrix_of<Mat2c>() {
    return b_matrix();
}
template <>
inline ExprPtr b_matrix_of<ExprPtr>() {
    return e_b();
}

// [a, b] = a b^{-1} a^{-1} b
template <class M>
M commutator(const M& a, const M& b) {
    return gmul(gmul(gmul(a, ginv(b)), ginv(a)), b);
}

template <class M>
struct MonodromyTuple {
    std::vector<M> alpha, beta;
};

template <class M>
M commutator_product(const MonodromyTuple<M>& t) {
    M p = commutator(t.alpha.at(0), t.beta.at(0));
    for (size_t i = 1; i < t.alpha.size(); ++i) p = gmul(p, commutator(t.alpha[i], t.beta[i]));
    return p;
}

double relation_residual(const MonodromyTuple<Mat2c>& t);

// Surface with one boundary: C Lambda C^{-1} prod [alpha_i, beta_i] = I.
template <class M>
struct OneBoundaryPoint {
    MonodromyTuple<M> gens;
    M c;
    M lambda;
};

// Genus g-1 surface with two boundaries: C1 L C1^{-1} C2 L C2^{-1} prod [alpha_i, beta_i] = I.
template <class M>
struct TwoBoundaryPoint {
    MonodromyTuple<M> gens;
    M c1, c2;
    M lambda;
};

template <class M>
MonodromyTuple<M> glue_separating_unchecked(const OneBoundaryPoint<M>& tilde, const OneBoundaryPoint<M>& hat) {
    M x = gmul(gmul(hat.c, ginv(b_matrix_of<M>())), ginv(tilde.c));
    M xi = ginv(x);
    MonodromyTuple<M> r;
    for (size_t i = 0; i < tilde.gens.alpha.size(); ++i) {
        r.alpha.push_back(gmul(gmul(x, tilde.gens.alpha[i]), xi));
        r.beta.push_back(gmul(gmul(x, tilde.gens.beta[i]), xi));
    }
    for (size_t i = 0; i < hat.gens.alpha.size(); ++i) {
        r.alpha.push_back(hat.gens.alpha[i]);
        r.beta.push_back(hat.gens.beta[i]);
    }
    return r;
}

// Throws DomainError when the two Lambdas differ or are degenerate.
MonodromyTuple<Mat2c> glue_separating(const OneBoundaryPoint<Mat2c>& tilde, const OneBoundaryPoint<Mat2c>& hat,
                                      double tol = 1e-9);

// The new handle comes first: (alpha_g, beta_g) = (C1 L C1^{-1}, C1 b C2^{-1}), then the old generators.
template <class M>
MonodromyTuple<M> glue_nonseparating_unchecked(const TwoBoundaryPoint<M>& p) {
    MonodromyTuple<M> r;
    r.alpha.push_back(gmul(gmul(p.c1, p.lambda), ginv(p.c1)));
    r.beta.push_back(gmul(gmul(p.c1, b_matrix_of<M>()), ginv(p.c2)));
    for (size_t i = 0; i < p.gens.alpha.size(); ++i) {
        r.alpha.push_back(p.gens.alpha[i]);
        r.beta.push_back(p.gens.beta[i]);
    }
    return r;
}

MonodromyTuple<Mat2c> glue_nonseparating(const TwoBoundaryPoint<Mat2c>& p, double tol = 1e-9);

// One vertex, 2g loop edges alpha_j, beta_j with J(alpha_j) = M_beta_j, J(beta_j) = M_alpha_j.
AdmissiblePair build_gamma0(const MonodromyTuple<ExprPtr>& m, const std::vector<std::string>& coords);
AdmissiblePair build_gamma0(const MonodromyTuple<Mat2c>& m);

// ---------------------------------------------------------------------------
// Shear-coordinate graphs with plumbing.

struct PieceSpec {
    std::string name;
    Triangulation tri;
};

struct BoundaryRef {
    int piece;
    int vertex;
};

struct ContourSpec {
    std::string name;
    BoundaryRef tilde, hat;
};

struct SurfaceSpec {
    int genus = 0;
    std::vector<PieceSpec> pieces;
    std::vector<ContourSpec> contours;

    // Every triangulation vertex is used by exactly one contour side; Euler counts agree.
    void validate() const;
    bool separating(int contour) const;
};

struct ContourInfo {
    std::string name;
    int l = -1, beta = -1, beta_t = -1, beta_h = -1;         // coordinates
    int stem_t = -1, gam_t = -1, lam_t = -1, bee = -1;         // edges
    int lam_h = -1, gam_h = -1, stem_h = -1;
    int v_t = -1, q_t = -1, q = -1, q_h = -1, v_h = -1;       // vertices
};

struct BoundaryInfo {
    int piece = -1, tri_vertex = -1, graph_vertex = -1, contour = -1;
    bool tilde = true;
    cplx offset{};  // l - sum mu zeta for this side
};

struct Gamma2 {
    AdmissiblePair pair;
    CoordinateSystem cs;
    SurfaceSpec spec;
    std::vector<std::vector<int>> shear;   // [piece][triangulation edge] -> coordinate
    std::vector<std::vector<int>> vertex;  // [piece][triangulation vertex] -> graph vertex
    std::vector<std::vector<int>> sedge;   // [piece][triangulation edge] -> graph edge
    std::vector<ContourInfo> contours;
    std::vector<BoundaryInfo> boundaries;

    // Sum over boundary vertices of sum_{i<j} dzeta_i ^ dzeta_j plus sum over contours of
    // dbeta ^ dl, pulled back to the free coordinates.
    TwoFormMatrix combinatorial_form() const;
};

Gamma2 build_gamma2(const SurfaceSpec& spec);
Gamma2 build_gamma2_separating(const Triangulation& tilde, const Triangulation& hat);
Gamma2 build_gamma2_nonseparating(int genus, const Triangulation& piece, int v_tilde, int v_hat);
Gamma2 build_multicontour(const SurfaceSpec& spec);

// Lower triangular boundary monodromy of a triangulation vertex: inverse of the product of its
// outgoing jumps after the stem.
DiagPair<cplx> boundary_monodromy(const AdmissiblePair& p, int vertex, const Point& x);

// Sampling: every shear in the annulus 1/2 <= |z| <= 2,
// |lambda^2 - 1| >= 0.1 on every contour.
Point sample_point(const Gamma2& g, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Trinions.

struct TrinionGraph {
    struct Outlet {
        int trinion;
        int slot;  // position in the trinion's cyclic order of outlets
    };
    struct GEdge {
        std::string name;
        Outlet a, b;
    };
    int trinions = 0;
    std::vector<GEdge> edges;

    void validate() const;
    int genus() const { return trinions / 2 + 1; }
};

Gamma2 build_trinion_decomposition(const TrinionGraph& t);

// Outlet slot k of a trinion attaches to this pants vertex.
int trinion_slot_vertex(int slot);

TrinionGraph theta_graph();
TrinionGraph theta_prime_graph();
TrinionGraph dumbbell_graph();

struct TrinionRep {
    std::array<Mat2c, 3> m;      // M_j, with M_1 M_2 M_3 = I
    std::array<Mat2c, 3> mloc;   // local monodromies at the three vertices
    std::array<Mat2c, 3> c;      // unit lower triangular, mloc_j = C_j diag(-l_j, -1/l_j) C_j^{-1}
    std::array<cplx, 3> z;       // shears of e1, e2, e3
};

TrinionRep build_trinion_rep(cplx l1, cplx l2, cplx l3);

// Toric coordinates after reversing the cyclic labelling of a trinion's boundaries
// (1, 2, 3) -> (3, 2, 1); the lengths are permuted the same way.
template <class T>
std::array<T, 3> toric_shift(const std::array<T, 3>& beta, const std::array<T, 3>& l) {
    return {beta[2] + T(0.5) * (l[1] - l[0] - l[2]), beta[1] + T(0.5) * (l[0] - l[1] - l[2]),
            beta[0] + T(0.5) * (l[2] - l[0] - l[1])};
}

template <class T>
std::array<T, 3> relabel_lengths(const std::array<T, 3>& l) {
    return {l[2], l[1], l[0]};
}

// ---------------------------------------------------------------------------
// Catalog surfaces.

SurfaceSpec sep_g2_spec();
SurfaceSpec nonsep_g2_spec();
SurfaceSpec two_contour_g2_spec();
SurfaceSpec multicontour_g3_spec(int m);

// Hard-coded targets in the free basis of the corresponding builder.
TwoFormMatrix target_sep_g2();
TwoFormMatrix target_two_contour_g2();
TwoFormMatrix target_theta();
TwoFormMatrix target_theta_prime();
TwoFormMatrix target_dumbbell();

// Reorders a form to the basis of another, by name.
TwoFormMatrix align(const TwoFormMatrix& m, const std::vector<std::string>& basis);

}  // namespace gf
