#include "goldform/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "goldform/errors.hpp"

namespace gf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-scenario state: the RNG, the running digest and the checks accumulated over samples.
struct Ctx {
    Report& rep;
    std::mt19937_64 rng;
    std::uint64_t hash = 1469598103934665603ull;

    Ctx(Report& r, std::uint64_t seed) : rep(r), rng(seed) {}

    int samples() const { return rep.samples; }
    double tol() const { return rep.tol; }

    void feed_bytes(const void* p, size_t n) {
        const auto* b = static_cast<const unsigned char*>(p);
        for (size_t i = 0; i < n; ++i) {
            hash ^= b[i];
            hash *= 1099511628211ull;
        }
    }
    void feed(double v) { feed_bytes(&v, sizeof v); }
    void feed(cplx z) {
        feed(z.real());
        feed(z.imag());
    }
    void feed(const Point& x) {
        for (cplx z : x) feed(z);
    }

    // Keeps the worst value seen: the largest for "below" checks, the smallest otherwise.
    void bump(const std::string& name, double value, double threshold, bool below = true) {
        if (!std::isfinite(value)) value = below ? kInf : 0.0;
        for (auto& c : rep.checks)
            if (c.name == name) {
                c.value = below ? std::max(c.value, value) : std::min(c.value, value);
                return;
            }
        rep.checks.push_back({name, value, threshold, below, false});
    }
};

double max_entry(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

cplx uniform_c(std::mt19937_64& rng, double r) {
    std::uniform_real_distribution<double> u(-r, r);
    double re = u(rng);
    return {re, u(rng)};
}

// Eigenvalue of the boundary monodromy against the product of the shear exponentials around it.
void eigen_checks(Ctx& c, const Gamma2& g, const Point& x) {
    std::vector<cplx> side(g.boundaries.size());
    for (size_t k = 0; k < g.boundaries.size(); ++k) {
        const auto& b = g.boundaries[k];
        const auto& tri = g.spec.pieces[b.piece].tri;
        cplx prod = (tri.heads_at(b.tri_vertex) % 2 == 0) ? -1.0 : 1.0;
        for (int h : tri.rotation[b.tri_vertex]) prod *= std::exp(x[g.shear[b.piece][h / 2]]);
        cplx mono = -boundary_monodromy(g.pair, b.graph_vertex, x).lambda.a;
        c.bump("eigenvalue identity", std::abs(mono - prod) / std::abs(prod), 1e-12);
        side[k] = mono;
    }
    for (size_t k = 0; k < g.boundaries.size(); ++k)
        for (size_t j = k + 1; j < g.boundaries.size(); ++j)
            if (g.boundaries[k].contour == g.boundaries[j].contour)
                c.bump("contour sides agree", std::abs(side[k] - side[j]) / std::abs(side[k]), 1e-12);
}

void point_checks(Ctx& c, const Gamma2& g, const Point& x) {
    c.bump("admissibility", validate_admissible(g.pair, x, 1e-10).max_residual, 1e-10);
    c.bump("relations", relation_residual(g.cs, x), 1e-10);
    eigen_checks(c, g, x);
}

// Omega against a constant target over sampled points, plus the sample variance of the form.
void form_scenario(Ctx& c, const Gamma2& g, const TwoFormMatrix& target) {
    std::vector<Eigen::MatrixXcd> ms;
    for (int s = 0; s < c.samples(); ++s) {
        Point x = sample_point(g, c.rng);
        c.feed(x);
        point_checks(c, g, x);
        TwoFormMatrix m = align(omega_matrix(g.pair, g.cs, x), target.basis);
        c.bump("target", max_entry(m.coeffs - target.coeffs), c.tol());
        c.bump("antisymmetry", m.antisymmetry_residual(), 1e-12);
        ms.push_back(m.coeffs);
    }
    Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(target.coeffs.rows(), target.coeffs.cols());
    for (const auto& m : ms) mean += m;
    mean /= static_cast<double>(ms.size());
    Eigen::MatrixXd var = Eigen::MatrixXd::Zero(mean.rows(), mean.cols());
    for (const auto& m : ms) var += (m - mean).cwiseAbs2();
    var /= static_cast<double>(ms.size());
    c.bump("variance", var.size() ? var.maxCoeff() : 0.0, 1e-18);
}

std::vector<Tangent> tangents(const Lift& lift, std::mt19937_64& rng, int n) {
    std::vector<Tangent> t;
    for (int i = 0; i < n; ++i) t.push_back(random_tangent(lift, rng));
    return t;
}

void moves_scenario(Ctx& c) {
    Gamma2 g = build_gamma2(sep_g2_spec());
    SeparatingReduction red = reduce_separating(g);
    red.steps.push_back({"one-vertex graph of the glued monodromies",
                         build_gamma0(glued_tuple(g, red, true), g.pair.jumps.coords)});
    Lift lift(g.cs);
    for (int s = 0; s < c.samples(); ++s) {
        Point x = sample_point(g, c.rng);
        c.feed(x);
        auto us = tangents(lift, c.rng, 10), vs = tangents(lift, c.rng, 10);
        std::vector<cplx> ref;
        for (int k = 0; k < 10; ++k) ref.push_back(omega_eval(g.pair, x, us[k], vs[k]));
        for (size_t st = 1; st < red.steps.size(); ++st) {
            const auto& p = red.steps[st].pair;
            c.bump("admissibility along moves", validate_admissible(p, x, 1e-10).max_residual, 1e-10);
            double dev = 0.0;
            for (int k = 0; k < 10; ++k) dev = std::max(dev, rel_diff(omega_eval(p, x, us[k], vs[k]), ref[k]));
            char name[160];
            std::snprintf(name, sizeof name, "step %02zu %s", st, red.steps[st].label.c_str());
            c.bump(name, dev, 1e-9);
        }
    }
}

void closedness_scenario(Ctx& c) {
    Gamma2 g = build_gamma2(sep_g2_spec());
    SeparatingReduction red = reduce_separating(g);
    AdmissiblePair g0 = build_gamma0(glued_tuple(g, red, true), g.pair.jumps.coords);
    Lift lift(g.cs);
    for (int s = 0; s < c.samples(); ++s) {
        Point x = sample_point(g, c.rng);
        c.feed(x);
        auto t = tangents(lift, c.rng, 3);
        c.bump("closedness two-vertex-per-face graph", std::abs(closedness_residual(g.pair, x, t[0], t[1], t[2])), 1e-8);
        c.bump("closedness one-vertex graph", std::abs(closedness_residual(g0, x, t[0], t[1], t[2])), 1e-8);
    }
}

void goldman_scenario(Ctx& c) {
    Gamma2 g = build_gamma2(sep_g2_spec());
    SeparatingReduction red = reduce_separating(g);
    MonodromyTuple<ExprPtr> m = glued_tuple(g, red, true);
    ExprPtr a1 = m.alpha[0], b1 = m.beta[0], a2 = m.alpha[1], b2 = m.beta[1];
    ExprPtr a1b1 = e_mul(a1, b1);
    double sign = 0.0;
    for (int s = 0; s < c.samples(); ++s) {
        Point x = sample_point(g, c.rng);
        c.feed(x);
        PoissonMatrix pm = invert_to_poisson(omega_matrix(g.pair, g.cs, x));
        cplx br = bracket_trace_functions(g.pair, g.cs, pm, x, a1, b1);
        cplx ta = eval_value(a1, x).trace(), tb = eval_value(b1, x).trace(), tab = eval_value(a1b1, x).trace();
        cplx rhs = tab - 0.5 * ta * tb;
        if (s == 0) {
            cplx nu = br / rhs;
            sign = nu.real() >= 0.0 ? 1.0 : -1.0;
            c.feed(nu);
            c.bump("normalisation |nu| = 1", std::abs(nu - sign), 1e-7);
        }
        c.bump("intersecting pair", std::abs(br - sign * rhs) / std::max(std::abs(rhs), 1e-300), 1e-7);
        double scale = std::max(1.0, std::abs(ta));
        c.bump("disjoint pair alpha1 alpha2",
               std::abs(bracket_trace_functions(g.pair, g.cs, pm, x, a1, a2)) / scale, 1e-9);
        c.bump("disjoint pair alpha1 beta2",
               std::abs(bracket_trace_functions(g.pair, g.cs, pm, x, a1, b2)) / scale, 1e-9);
        c.bump("self bracket", std::abs(bracket_trace_functions(g.pair, g.cs, pm, x, a1, a1)) / scale, 1e-9);
    }
}

using Jet6 = std::array<Jet, 6>;  // l1 l2 l3 beta1 beta2 beta3

cplx form_on(const TwoFormMatrix& t, const Jet6& j) {
    cplx s = 0.0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) s += t.coeffs(a, b) * j[a].d[0] * j[b].d[1];
    return s;
}

void relabel_scenario(Ctx& c) {
    TwoFormMatrix theta = target_theta(), theta_p = target_theta_prime();
    for (int s = 0; s < c.samples(); ++s) {
        Jet6 v;
        for (auto& j : v) j = Jet::variable(uniform_c(c.rng, 1.0), {uniform_c(c.rng, 1.0), uniform_c(c.rng, 1.0), 0.0});
        for (const auto& j : v) c.feed(j.v);
        std::array<Jet, 3> l{v[0], v[1], v[2]}, beta{v[3], v[4], v[5]};
        auto w = [](const Jet& a, const Jet& b) { return a.d[0] * b.d[1] - a.d[1] * b.d[0]; };

        auto bt = toric_shift(beta, l);
        auto lt = relabel_lengths(l);
        cplx lhs = 0.0, rhs = w(l[0], l[1]) + w(l[1], l[2]) + w(l[2], l[0]);
        for (int j = 0; j < 3; ++j) {
            lhs += w(bt[j], lt[j]);
            rhs += w(beta[j], l[j]);
        }
        c.bump("relabelled toric form", std::abs(lhs - rhs), 1e-12);

        // Coordinate change between the two trinion gluings.
        Jet6 p = v;
        p[3] = v[3] + (v[2] - v[0] - v[1]);
        p[4] = v[4] + (v[0] - v[2] - v[1]);
        p[5] = v[5] + (v[1] - v[0] - v[2]);
        c.bump("theta and theta-prime forms correspond", std::abs(form_on(theta_p, p) - form_on(theta, v)), 1e-12);

        cplx l1 = std::exp(l[0].v), l2 = std::exp(l[1].v), l3 = std::exp(l[2].v);
        cplx lhs_m = std::exp(2.0 * bt[2].v), rhs_m = l3 / (l1 * l2) * std::exp(2.0 * beta[0].v);
        c.bump("multiplicative toric shift", std::abs(lhs_m - rhs_m) / std::abs(rhs_m), 1e-12);

        if (std::abs(l1 * l1 - 1.0) < 0.1 || std::abs(l2 * l2 - 1.0) < 0.1 || std::abs(l3 * l3 - 1.0) < 0.1) continue;
        TrinionRep r = build_trinion_rep(l1, l2, l3);
        c.bump("trinion relation", distance_to_identity(r.m[0] * r.m[1] * r.m[2]), 1e-12);
        std::array<cplx, 3> ls{l1, l2, l3};
        for (int j = 0; j < 3; ++j) {
            Mat2c lam = Mat2c::diag(-ls[j], -1.0 / ls[j]);
            c.bump("trinion frames", max_abs_diff(r.c[j] * lam * r.c[j].inverse(), r.mloc[j]) / max_abs(r.mloc[j]),
                   1e-12);
            c.bump("trinion traces", rel_diff(r.m[j].trace(), -ls[j] - 1.0 / ls[j]), 1e-12);
            cplx a = ls[j], b = ls[(j + 1) % 3], cc = ls[(j + 2) % 3];
            cplx z2 = r.z[(j + 2) % 3] * r.z[(j + 2) % 3];
            c.bump("trinion shears", rel_diff(z2, a * b / cc), 1e-12);
        }
    }
}

std::vector<Mat2c> word_traces_basis(const MonodromyTuple<Mat2c>& t) {
    std::vector<Mat2c> g;
    for (size_t i = 0; i < t.alpha.size(); ++i) {
        g.push_back(t.alpha[i]);
        g.push_back(t.beta[i]);
    }
    return g;
}

// Traces of a fixed list of words in the generators.
std::vector<cplx> word_traces(const MonodromyTuple<Mat2c>& t) {
    std::vector<Mat2c> g = word_traces_basis(t);
    std::vector<cplx> r;
    for (size_t i = 0; i < g.size(); ++i) {
        r.push_back(g[i].trace());
        for (size_t j = i + 1; j < g.size(); ++j) {
            r.push_back((g[i] * g[j]).trace());
            r.push_back((g[i] * g[j].inverse()).trace());
        }
    }
    Mat2c all = Mat2c::identity();
    for (const auto& m : g) all = all * m;
    r.push_back(all.trace());
    return r;
}

double trace_deviation(const MonodromyTuple<Mat2c>& a, const MonodromyTuple<Mat2c>& b) {
    auto ta = word_traces(a), tb = word_traces(b);
    double d = 0.0;
    for (size_t i = 0; i < ta.size(); ++i) d = std::max(d, rel_diff(ta[i], tb[i]));
    return d;
}

Mat2c one_boundary_product(const OneBoundaryPoint<Mat2c>& p) {
    return p.c * p.lambda * p.c.inverse() * commutator(p.gens.alpha[0], p.gens.beta[0]);
}

void glue_scenario(Ctx& c) {
    Gamma2 g = build_gamma2(sep_g2_spec());
    SeparatingReduction red = reduce_separating(g);
    MonodromyTuple<ExprPtr> balanced = glued_tuple(g, red, true);
    const auto& ci = g.contours[0];
    for (int s = 0; s < c.samples(); ++s) {
        Point x = sample_point(g, c.rng);
        c.feed(x);
        OneBoundaryPoint<Mat2c> tilde, hat;
        tilde.gens = {{eval_value(red.u_t, x)}, {eval_value(red.v_t, x).inverse()}};
        tilde.c = eval_value(g.pair.jumps.jump[ci.gam_t], x);
        tilde.lambda = eval_value(g.pair.jumps.jump[ci.lam_t], x);
        hat.gens = {{eval_value(red.u_h, x)}, {eval_value(red.v_h, x).inverse()}};
        hat.c = eval_value(g.pair.jumps.jump[ci.gam_h], x);
        hat.lambda = eval_value(g.pair.jumps.jump[ci.lam_h], x);
        c.bump("one-boundary piece relations",
               std::max(distance_to_identity(one_boundary_product(tilde)), distance_to_identity(one_boundary_product(hat))),
               1e-11);
        MonodromyTuple<Mat2c> glued = glue_separating(tilde, hat);
        c.bump("separating glued relation", relation_residual(glued), 1e-11);
        MonodromyTuple<Mat2c> bal;
        for (size_t i = 0; i < balanced.alpha.size(); ++i) {
            bal.alpha.push_back(eval_value(balanced.alpha[i], x));
            bal.beta.push_back(eval_value(balanced.beta[i], x));
        }
        c.bump("separating relation, balanced conjugate", relation_residual(bal), 1e-11);

        Mat2c n = commutator(glued.alpha[0], glued.beta[0]);
        Mat2c gf = eigen_frame(n, tilde.lambda.a, tilde.lambda.d);
        OneBoundaryPoint<Mat2c> t2{{{glued.alpha[0]}, {glued.beta[0]}}, gf * b_matrix(), tilde.lambda};
        OneBoundaryPoint<Mat2c> h2{{{glued.alpha[1]}, {glued.beta[1]}}, gf, tilde.lambda};
        c.bump("separating cut pieces",
               std::max(distance_to_identity(one_boundary_product(t2)), distance_to_identity(one_boundary_product(h2))),
               1e-9);
        c.bump("separating round trip", trace_deviation(glue_separating(t2, h2), glued), 1e-9);

        TwoBoundaryPoint<Mat2c> p = random_two_boundary_point(c.rng);
        c.feed(p.lambda.a);
        Mat2c piece = commutator(p.gens.alpha[0], p.gens.beta[0]) * p.c1 * p.lambda * p.c1.inverse() * p.c2 *
                      p.lambda * p.c2.inverse();
        c.bump("two-boundary piece relation", distance_to_identity(piece), 1e-11);
        MonodromyTuple<Mat2c> ng = glue_nonseparating(p);
        c.bump("non-separating glued relation", relation_residual(ng), 1e-11);
        c.bump("new handle trace", rel_diff(ng.alpha[0].trace(), p.lambda.a + p.lambda.d), 1e-12);
        Mat2c c1 = eigen_frame(ng.alpha[0], p.lambda.a, p.lambda.d);
        TwoBoundaryPoint<Mat2c> q;
        q.gens = {{ng.alpha[1]}, {ng.beta[1]}};
        q.lambda = p.lambda;
        q.c1 = c1;
        q.c2 = ng.beta[0].inverse() * c1 * b_matrix();
        c.bump("non-separating round trip", trace_deviation(glue_nonseparating(q), ng), 1e-9);
    }
}

void broken_vertex_scenario(Ctx& c) {
    Gamma2 g = build_gamma2(sep_g2_spec());
    AdmissiblePair broken = break_vertex(g);
    Lift lift(g.cs);
    for (int s = 0; s < c.samples(); ++s) {
        Point x = sample_point(g, c.rng);
        c.feed(x);
        c.bump("admissibility failure detected", validate_admissible(broken, x, 1e-10).max_residual, 1e-6, false);
        auto t = tangents(lift, c.rng, 3);
        c.bump("closedness failure detected", std::abs(closedness_residual(broken, x, t[0], t[1], t[2])), 1e-3, false);
        double refused = 0.0;
        try {
            (void)omega_eval(broken, x, t[0], t[1]);
        } catch (const NotAdmissibleError&) {
            refused = 1.0;
        }
        c.bump("form evaluation refused", refused, 0.5, false);
    }
}

void mismatched_lambda_scenario(Ctx& c) {
    Gamma2 g = build_gamma2(sep_g2_spec());
    SeparatingReduction red = reduce_separating(g);
    const auto& ci = g.contours[0];
    auto piece = [&](const Point& x, bool t) {
        OneBoundaryPoint<Mat2c> p;
        ExprPtr u = t ? red.u_t : red.u_h, v = t ? red.v_t : red.v_h;
        p.gens = {{eval_value(u, x)}, {eval_value(v, x).inverse()}};
        p.c = eval_value(g.pair.jumps.jump[t ? ci.gam_t : ci.gam_h], x);
        p.lambda = eval_value(g.pair.jumps.jump[t ? ci.lam_t : ci.lam_h], x);
        return p;
    };
    for (int s = 0; s < c.samples(); ++s) {
        Point x = sample_point(g, c.rng), y = sample_point(g, c.rng);
        c.feed(x);
        c.feed(y);
        auto tilde = piece(x, true), hat = piece(y, false);
        double rejected = 0.0;
        try {
            (void)glue_separating(tilde, hat);
        } catch (const DomainError&) {
            rejected = 1.0;
        }
        c.bump("mismatched eigenvalues rejected", rejected, 0.5, false);
        c.bump("unchecked gluing breaks the relation",
               relation_residual(glue_separating_unchecked(tilde, hat)), 1e-3, false);
        auto degenerate = tilde;
        degenerate.lambda = Mat2c::diag(-1.0, -1.0);
        double deg = 0.0;
        try {
            (void)glue_separating(degenerate, degenerate);
        } catch (const DomainError&) {
            deg = 1.0;
        }
        c.bump("degenerate eigenvalues rejected", deg, 0.5, false);
    }
}

struct Scenario {
    std::string name, description;
    std::function<void(Ctx&)> run;
};

const std::vector<Scenario>& catalog() {
    static const std::vector<Scenario> s = {
        {"sep-g2", "two one-vertex tori glued along a separating contour",
         [](Ctx& c) { form_scenario(c, build_gamma2(sep_g2_spec()), target_sep_g2()); }},
        {"nonsep-g2", "one-vertex torus with a non-separating contour",
         [](Ctx& c) {
             Gamma2 g = build_gamma2(nonsep_g2_spec());
             form_scenario(c, g, g.combinatorial_form());
         }},
        {"two-contour-g2", "torus and two-vertex torus joined by two contours",
         [](Ctx& c) { form_scenario(c, build_gamma2(two_contour_g2_spec()), target_two_contour_g2()); }},
        {"trinion-g2-theta", "two trinions, theta gluing",
         [](Ctx& c) { form_scenario(c, build_trinion_decomposition(theta_graph()), target_theta()); }},
        {"trinion-g2-theta-prime", "two trinions, theta gluing with reversed labels",
         [](Ctx& c) { form_scenario(c, build_trinion_decomposition(theta_prime_graph()), target_theta_prime()); }},
        {"trinion-g2-dumbbell", "two trinions, dumbbell gluing",
         [](Ctx& c) { form_scenario(c, build_trinion_decomposition(dumbbell_graph()), target_dumbbell()); }},
        {"multicontour-g3", "genus three with one to four contours",
         [](Ctx& c) {
             int n = c.rep.samples;
             for (int m = 1; m <= 4; ++m) {
                 Gamma2 g = build_multicontour(multicontour_g3_spec(m));
                 Report sub;
                 sub.samples = n;
                 sub.tol = c.tol();
                 Ctx sc(sub, c.rng());
                 form_scenario(sc, g, g.combinatorial_form());
                 c.feed(static_cast<double>(sc.hash));
                 for (auto& ch : sub.checks) c.bump("m=" + std::to_string(m) + " " + ch.name, ch.value, ch.threshold);
             }
         }},
        {"moves-invariance-g2", "form preserved by merges, zips, regroups and the one-vertex graph", moves_scenario},
        {"closedness-g2", "exterior derivative of the form from second-order jets", closedness_scenario},
        {"goldman-bracket-g2", "Poisson bracket of trace functions", goldman_scenario},
        {"trinion-relabel", "trinion relabelling and the trinion representation", relabel_scenario},
        {"glue-roundtrip", "gluing maps and their inverses", glue_scenario},
        {"control-broken-vertex", "negative control: non-admissible vertex", broken_vertex_scenario},
        {"control-mismatched-lambda", "negative control: gluing with different eigenvalues",
         mismatched_lambda_scenario},
    };
    return s;
}

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

std::vector<ScenarioInfo> list_scenarios() {
    std::vector<ScenarioInfo> r;
    for (const auto& s : catalog()) r.push_back({s.name, s.description});
    return r;
}

bool has_scenario(const std::string& name) {
    for (const auto& s : catalog())
        if (s.name == name) return true;
    return false;
}

Report run_scenario(const std::string& name, std::uint64_t seed, int samples, double tol) {
    const Scenario* sc = nullptr;
    for (const auto& s : catalog())
        if (s.name == name) sc = &s;
    if (!sc) throw GraphError("unknown scenario " + name);
    if (samples < 1) throw GraphError("samples must be positive");
    Report rep;
    rep.scenario = name;
    rep.seed = seed;
    rep.samples = samples;
    rep.tol = tol;
    auto t0 = std::chrono::steady_clock::now();
    Ctx c(rep, seed);
    try {
        sc->run(c);
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.pass = rep.error.empty() && !rep.checks.empty();
    for (auto& ch : rep.checks) {
        ch.pass = ch.below ? ch.value < ch.threshold : ch.value > ch.threshold;
        rep.pass = rep.pass && ch.pass;
        if (ch.below) rep.max_residual = std::max(rep.max_residual, ch.value);
        c.feed(ch.value);
    }
    rep.digest = hex64(c.hash);
    return rep;
}

std::string to_json(const Report& r) {
    nlohmann::json j;
    j["scenario"] = r.scenario;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["max_residual"] = r.max_residual;
    j["wall_ms"] = r.wall_ms;
    j["digest"] = r.digest;
    if (!r.error.empty()) j["error"] = r.error;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name},
                               {"value", c.value},
                               {"threshold", c.threshold},
                               {"relation", c.below ? "<" : ">"},
                               {"pass", c.pass}});
    return j.dump(2);
}

std::string to_text(const Report& r) {
    std::string s;
    char buf[256];
    std::snprintf(buf, sizeof buf, "scenario %s  seed %llu  samples %d  tol %.3g\n", r.scenario.c_str(),
                  static_cast<unsigned long long>(r.seed), r.samples, r.tol);
    s += buf;
    for (const auto& c : r.checks) {
        std::snprintf(buf, sizeof buf, "  %s  %-48s %.3e %s %.1e\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value,
                      c.below ? "<" : ">", c.threshold);
        s += buf;
    }
    if (!r.error.empty()) s += "  error: " + r.error + "\n";
    std::snprintf(buf, sizeof buf, "result %s  max residual %.3e  wall %.1f ms  digest %s\n", r.pass ? "PASS" : "FAIL",
                  r.max_residual, r.wall_ms, r.digest.c_str());
    s += buf;
    return s;
}

// ---------------------------------------------------------------------------

Tangent random_tangent(const Lift& lift, std::mt19937_64& rng) {
    std::vector<cplx> f(lift.dim());
    for (auto& z : f) z = uniform_c(rng, 1.0);
    return lift.tangent(f);
}

Mat2c random_sl2(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mod(0.7, 1.5), arg(-std::numbers::pi, std::numbers::pi);
    double r = mod(rng);
    cplx a = std::polar(r, arg(rng));
    cplx b = uniform_c(rng, 1.0), c = uniform_c(rng, 1.0);
    return {a, b, c, (1.0 + b * c) / a};
}

TwoBoundaryPoint<Mat2c> random_two_boundary_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mod(0.6, 1.6), arg(-std::numbers::pi, std::numbers::pi), u01(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        double r = mod(rng);
        cplx l = std::polar(r, arg(rng));
        if (std::abs(l * l - 1.0) < 0.2) continue;
        TwoBoundaryPoint<Mat2c> p;
        p.lambda = Mat2c::diag(-l, -1.0 / l);
        p.c1 = random_sl2(rng);
        p.c2 = random_sl2(rng);
        Mat2c n = (p.c1 * p.lambda * p.c1.inverse() * p.c2 * p.lambda * p.c2.inverse()).inverse();
        // A with det 1 and tr(A^{-1} n) = tr(A^{-1}).
        cplx b = uniform_c(rng, 1.0), c = uniform_c(rng, 1.0);
        cplx pp = n.d - 1.0, q = n.a - 1.0, rr = b * n.c + c * n.b, s = 1.0 + b * c;
        if (std::abs(pp) < 1e-3 || std::abs(q) < 1e-3) continue;
        cplx d = (rr + std::sqrt(rr * rr - 4.0 * q * s * pp)) / (2.0 * q);
        cplx a = (rr - q * d) / pp;
        Mat2c am{a, b, c, d};
        if (max_abs(am) > 20.0) continue;
        // B with A^{-1} B = B A^{-1} n, so that A B^{-1} A^{-1} B = n.
        Mat2c pm = am.inverse(), qm = am.inverse() * n;
        Eigen::Matrix4cd k;
        for (int col = 0; col < 4; ++col) {
            Mat2c e{};
            (col == 0 ? e.a : col == 1 ? e.b : col == 2 ? e.c : e.d) = 1.0;
            Mat2c img = pm * e - e * qm;
            k.col(col) << img.a, img.b, img.c, img.d;
        }
        Eigen::FullPivLU<Eigen::Matrix4cd> lu(k);
        lu.setThreshold(1e-9);
        Eigen::MatrixXcd ker = lu.kernel();
        if (ker.cols() < 1) continue;
        Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
        for (int j = 0; j < ker.cols(); ++j) v += uniform_c(rng, 1.0) * ker.col(j);
        Mat2c bm{v(0), v(1), v(2), v(3)};
        cplx det = bm.det();
        if (std::abs(det) < 1e-3) continue;
        bm = (1.0 / std::sqrt(det)) * bm;
        if (max_abs(bm) > 20.0) continue;
        p.gens = {{am}, {bm}};
        (void)u01;
        return p;
    }
    throw DomainError("no two-boundary point found");
}

Mat2c eigen_frame(const Mat2c& m, cplx m0, cplx m1) {
    if (std::abs(m0 - m1) < 1e-12) throw DomainError("eigen_frame needs distinct eigenvalues");
    auto vec = [&](cplx mu) -> std::pair<cplx, cplx> {
        cplx x1 = m.b, y1 = mu - m.a, x2 = mu - m.d, y2 = m.c;
        if (std::abs(x1) + std::abs(y1) >= std::abs(x2) + std::abs(y2)) return {x1, y1};
        return {x2, y2};
    };
    auto [a, c] = vec(m0);
    auto [b, d] = vec(m1);
    cplx det = a * d - b * c;
    if (std::abs(det) < 1e-300) throw DomainError("eigen_frame: degenerate eigenvectors");
    return {a / det, b, c / det, d};
}

SeparatingReduction reduce_separating(const Gamma2& g) {
    if (g.spec.pieces.size() != 2 || g.contours.size() != 1 || !g.spec.separating(0))
        throw GraphError("reduction needs two pieces and one separating contour");
    SeparatingReduction r;
    AdmissiblePair cur = g.pair;
    r.steps.push_back({"initial graph", cur});
    const auto& ci = g.contours[0];
    for (int s = 0; s < 2; ++s) {
        const auto& piece = g.spec.pieces[s];
        if (piece.tri.genus() != 1 || piece.tri.vertex_names.size() != 1)
            throw GraphError("reduction needs one-vertex tori");
        std::string pf = piece.name;
        std::string vname = g.pair.graph.vertices[g.vertex[s][0]].name;
        for (size_t f = 0; f < piece.tri.faces.size(); ++f) {
            std::string w = pf + "_w" + std::to_string(f + 1);
            int v = cur.graph.find_vertex(w);
            cur = merge_vertices(cur, edge_of(cur.graph.vertices[v].rot[f % 3]));
            r.steps.push_back({"merge " + w, cur});
        }
        while (true) {
            auto z = find_zippable(cur);
            if (z.first < 0) break;
            std::string lbl = "zip " + cur.graph.edges[z.first].name + " " + cur.graph.edges[z.second].name;
            cur = zip_edges(cur, z.first, z.second).pair;
            r.steps.push_back({lbl, cur});
        }
        int v = cur.graph.find_vertex(vname);
        int st = find_handle(cur, v);
        if (st < 0) throw GraphError("reduction found no handle at " + vname);
        MoveResult m = regroup_handle(cur, v, st);
        cur = m.pair;
        std::string su = s == 0 ? "_t" : "_h";
        cur.graph.edges[m.new_edges[0]].name = "U" + su;
        cur.graph.edges[m.new_edges[1]].name = "V" + su;
        r.steps.push_back({"regroup handle at " + vname, cur});
        const auto& rot = cur.graph.vertices[v].rot;
        int stem = cur.graph.find_edge(g.pair.graph.edges[s == 0 ? ci.stem_t : ci.stem_h].name);
        int u = m.new_edges[0], w = m.new_edges[1];
        std::vector<int> want{tail_of(u), tail_of(w), head_of(u), head_of(w)};
        bool ok = rot.size() == 5;
        size_t k0 = 0;
        while (ok && k0 < 5 && edge_of(rot[k0]) != stem) ++k0;
        for (int k = 0; ok && k < 4; ++k) ok = k0 < 5 && rot[(k0 + 1 + k) % 5] == want[k];
        if (!ok) throw GraphError("reduction left an unexpected rotation at " + vname);
        (s == 0 ? r.u_t : r.u_h) = cur.jumps.jump[u];
        (s == 0 ? r.v_t : r.v_h) = cur.jumps.jump[w];
    }
    for (int e : {ci.stem_t, ci.stem_h, ci.lam_t, ci.lam_h}) {
        const std::string& en = g.pair.graph.edges[e].name;
        cur = merge_vertices(cur, cur.graph.find_edge(en));
        r.steps.push_back({"merge along " + en, cur});
    }
    return r;
}

MonodromyTuple<ExprPtr> glued_tuple(const Gamma2& g, const SeparatingReduction& r, bool balanced) {
    const auto& ci = g.contours.at(0);
    ExprPtr ct = g.pair.jumps.jump[ci.gam_t], ch = g.pair.jumps.jump[ci.gam_h];
    if (!balanced) {
        OneBoundaryPoint<ExprPtr> tilde{{{r.u_t}, {e_inv(r.v_t)}}, ct, g.pair.jumps.jump[ci.lam_t]};
        OneBoundaryPoint<ExprPtr> hat{{{r.u_h}, {e_inv(r.v_h)}}, ch, g.pair.jumps.jump[ci.lam_h]};
        return glue_separating_unchecked(tilde, hat);
    }
    ExprPtr y = e_mul(e_inv(e_b()), e_inv(ct)), yi = e_inv(y), chi = e_inv(ch);
    MonodromyTuple<ExprPtr> m;
    m.alpha = {e_mul(e_mul(y, r.u_t), yi), e_mul(e_mul(chi, r.u_h), ch)};
    m.beta = {e_mul(e_mul(y, e_inv(r.v_t)), yi), e_mul(e_mul(chi, e_inv(r.v_h)), ch)};
    return m;
}

AdmissiblePair break_vertex(const Gamma2& g) {
    if (g.sedge.empty() || g.sedge[0].empty() || g.shear.back().size() < 2 || g.contours.empty())
        throw GraphError("nothing to break");
    AdmissiblePair p = g.pair;
    int e = g.sedge[0][0];
    // A single toric factor leaves the form closed; a non-abelian factor in two coordinates does not.
    ExprPtr f = e_mul(e_mul(e_toric(g.shear.back()[1]), e_a()), e_toric(g.contours[0].beta));
    p.jumps.jump[e] = e_mul(p.jumps.jump[e], f);
    return p;
}

}  // namespace gf
