#include "goldform/two_form.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "goldform/errors.hpp"

namespace gf {

namespace {

struct VertexJets {
    std::vector<Mat2J> j;
};

std::vector<VertexJets> vertex_jets(const AdmissiblePair& p, Evaluator& ev) {
    std::vector<VertexJets> out;
    for (const auto& v : p.graph.vertices) {
        VertexJets vj;
        for (int h : v.rot) {
            const ExprPtr& e = p.jumps.jump[edge_of(h)];
            vj.j.push_back(is_tail(h) ? ev.eval(e) : ev.eval_inverse(e));
        }
        out.push_back(std::move(vj));
    }
    return out;
}

cplx vertex_value(const std::vector<Mat2J>& jets) {
    std::vector<Mat2c> j, ju, jv;
    for (const auto& m : jets) {
        j.push_back(value_of(m));
        ju.push_back(derivative(m, 0));
        jv.push_back(derivative(m, 1));
    }
    return vertex_form(j, ju, jv);
}

void check_point(const AdmissiblePair& p, const Point& x) {
    if (x.size() != p.jumps.coords.size()) throw GraphError("point has wrong number of coordinates");
}

}  // namespace

std::vector<cplx> omega_per_vertex(const AdmissiblePair& p, const Point& x, const Tangent& u, const Tangent& v) {
    check_point(p, x);
    Evaluator ev(seed_jets(x, {u, v}));
    std::vector<cplx> r;
    for (const auto& vj : vertex_jets(p, ev)) r.push_back(vertex_value(vj.j));
    return r;
}

cplx omega_eval(const AdmissiblePair& p, const Point& x, const Tangent& u, const Tangent& v, const OmegaOptions& opt) {
    check_point(p, x);
    if (opt.require_admissible) {
        auto rep = validate_admissible(p, x, opt.admissibility_tol);
        if (!rep.admissible)
            throw NotAdmissibleError("pair is not admissible at the point (residual " +
                                     std::to_string(rep.max_residual) + ")");
    }
    cplx s = 0.0;
    for (cplx c : omega_per_vertex(p, x, u, v)) s += c;
    return s;
}

double TwoFormMatrix::antisymmetry_residual() const {
    return (coeffs + coeffs.transpose()).cwiseAbs().maxCoeff();
}

TwoFormMatrix omega_matrix(const AdmissiblePair& p, const CoordinateSystem& cs, const Point& x,
                           const OmegaOptions& opt) {
    if (cs.names != p.jumps.coords) throw GraphError("coordinate system does not match the pair");
    if (relation_residual(cs, x) > 1e-8) throw GraphError("point violates the coordinate relations");
    if (opt.require_admissible) {
        auto rep = validate_admissible(p, x, opt.admissibility_tol);
        if (!rep.admissible)
            throw NotAdmissibleError("pair is not admissible at the point (residual " +
                                     std::to_string(rep.max_residual) + ")");
    }
    Lift lift(cs);
    size_t n = lift.dim();
    std::vector<Tangent> t;
    for (size_t i = 0; i < n; ++i) t.push_back(lift.basis_tangent(static_cast<int>(i)));
    TwoFormMatrix m;
    m.basis = cs.free_names();
    m.coeffs = Eigen::MatrixXcd::Zero(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            cplx w = 0.0;
            for (cplx c : omega_per_vertex(p, x, t[i], t[j])) w += c;
            m.coeffs(i, j) = w;
            m.coeffs(j, i) = -w;
        }
    }
    return m;
}

namespace {

// D_a Omega(b, c) from jets seeded with three directions.
cplx directional(const std::vector<VertexJets>& vjs, int a, int b, int c) {
    cplx s = 0.0;
    for (const auto& vj : vjs) {
        std::vector<Mat2J> j, jb, jc;
        for (const auto& m : vj.j) {
            j.push_back(map_entries(m, [&](const Jet& e) { return restrict_to(e, a); }));
            jb.push_back(map_entries(m, [&](const Jet& e) { return partial(e, b, a); }));
            jc.push_back(map_entries(m, [&](const Jet& e) { return partial(e, c, a); }));
        }
        s += vertex_form(j, jb, jc).d[a];
    }
    return s;
}

}  // namespace

cplx omega_derivative(const AdmissiblePair& p, const Point& x, const Tangent& a, const Tangent& b, const Tangent& c) {
    check_point(p, x);
    Evaluator ev(seed_jets(x, {a, b, c}));
    return directional(vertex_jets(p, ev), 0, 1, 2);
}

cplx closedness_residual(const AdmissiblePair& p, const Point& x, const Tangent& u, const Tangent& v,
                         const Tangent& w) {
    check_point(p, x);
    Evaluator ev(seed_jets(x, {u, v, w}));
    auto vjs = vertex_jets(p, ev);
    return directional(vjs, 0, 1, 2) - directional(vjs, 1, 0, 2) + directional(vjs, 2, 0, 1);
}

PoissonMatrix invert_to_poisson(const TwoFormMatrix& m, double cond_limit) {
    long n = m.coeffs.rows();
    if (n == 0 || n % 2 == 1) throw DomainError("two-form is degenerate (odd dimension)");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.coeffs);
    const auto& s = svd.singularValues();
    double smax = s(0), smin = s(n - 1);
    PoissonMatrix pm;
    pm.basis = m.basis;
    pm.condition = smin > 0 ? smax / smin : INFINITY;
    if (!(pm.condition < cond_limit))
        throw DomainError("two-form is degenerate (condition number " + std::to_string(pm.condition) + ")");
    pm.coeffs = m.coeffs.inverse();
    double res = (pm.coeffs * m.coeffs - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (res > 1e-9) throw DomainError("Poisson inversion residual " + std::to_string(res));
    return pm;
}

cplx bracket_trace_functions(const AdmissiblePair& p, const CoordinateSystem& cs, const PoissonMatrix& pm,
                             const Point& x, const ExprPtr& f, const ExprPtr& g) {
    Lift lift(cs);
    size_t n = lift.dim();
    if (static_cast<size_t>(pm.coeffs.rows()) != n) throw GraphError("Poisson matrix dimension mismatch");
    check_point(p, x);
    Eigen::VectorXcd df(n), dg(n);
    for (size_t i = 0; i < n; ++i) {
        Evaluator ev(seed_jets(x, {lift.basis_tangent(static_cast<int>(i))}));
        df(i) = ev.eval(f).trace().d[0];
        dg(i) = ev.eval(g).trace().d[0];
    }
    return (df.transpose() * (pm.coeffs * dg))(0);
}

namespace {

std::string fmt_complex(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    return buf;
}

}  // namespace

std::string to_csv(const TwoFormMatrix& m) {
    std::ostringstream o;
    o << "coord";
    for (const auto& b : m.basis) o << "," << b;
    o << "\n";
    for (size_t i = 0; i < m.basis.size(); ++i) {
        o << m.basis[i];
        for (size_t j = 0; j < m.basis.size(); ++j) o << "," << fmt_complex(m.coeffs(i, j));
        o << "\n";
    }
    return o.str();
}

std::string to_json(const TwoFormMatrix& m) {
    nlohmann::json j;
    j["basis"] = m.basis;
    nlohmann::json rows = nlohmann::json::array();
    for (long i = 0; i < m.coeffs.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (long k = 0; k < m.coeffs.cols(); ++k) row.push_back({m.coeffs(i, k).real(), m.coeffs(i, k).imag()});
        rows.push_back(row);
    }
    j["coeffs"] = rows;
    j["antisymmetry_residual"] = m.coeffs.size() ? m.antisymmetry_residual() : 0.0;
    return j.dump(2);
}

std::string to_text(const TwoFormMatrix& m) {
    std::ostringstream o;
    bool any = false;
    for (size_t i = 0; i < m.basis.size(); ++i) {
        for (size_t j = i + 1; j < m.basis.size(); ++j) {
            cplx c = m.coeffs(i, j);
            if (std::abs(c) < 1e-9) continue;
            o << (any ? " + " : "") << "(" << fmt_complex(c) << ") d" << m.basis[i] << "^d" << m.basis[j];
            any = true;
        }
    }
    if (!any) o << "0";
    o << "\n";
    return o.str();
}

TwoFormMatrix two_form_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    TwoFormMatrix m;
    m.basis = j.at("basis").get<std::vector<std::string>>();
    size_t n = m.basis.size();
    m.coeffs = Eigen::MatrixXcd::Zero(n, n);
    const auto& rows = j.at("coeffs");
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) m.coeffs(i, k) = {rows[i][k][0].get<double>(), rows[i][k][1].get<double>()};
    return m;
}

}  // namespace gf
