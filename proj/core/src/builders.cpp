#include "goldform/builders.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "goldform/errors.hpp"

namespace gf {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_lambda(const Mat2c& lam, double tol) {
    if (std::abs(lam.b) > tol || std::abs(lam.c) > tol) throw DomainError("Lambda must be diagonal");
    if (std::abs(lam.a - lam.d) <= tol) throw DomainError("degenerate boundary monodromy (lambda^2 = 1)");
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

double relation_residual(const MonodromyTuple<Mat2c>& t) {
    if (t.alpha.empty()) return 0.0;
    return distance_to_identity(commutator_product(t));
}

MonodromyTuple<Mat2c> glue_separating(const OneBoundaryPoint<Mat2c>& tilde, const OneBoundaryPoint<Mat2c>& hat,
                                      double tol) {
    check_lambda(tilde.lambda, tol);
    check_lambda(hat.lambda, tol);
    if (max_abs_diff(tilde.lambda, hat.lambda) > tol * std::max(1.0, max_abs(tilde.lambda)))
        throw DomainError("boundary eigenvalues of the two pieces differ");
    return glue_separating_unchecked(tilde, hat);
}

MonodromyTuple<Mat2c> glue_nonseparating(const TwoBoundaryPoint<Mat2c>& p, double tol) {
    check_lambda(p.lambda, tol);
    return glue_nonseparating_unchecked(p);
}

AdmissiblePair build_gamma0(const MonodromyTuple<ExprPtr>& m, const std::vector<std::string>& coords) {
    if (m.alpha.size() != m.beta.size() || m.alpha.empty()) throw GraphError("gamma0 needs g >= 1 pairs");
    AdmissiblePair p;
    for (const auto& c : coords) p.add_coord(c);
    int v = p.add_vertex("v0");
    for (size_t j = 0; j < m.alpha.size(); ++j) {
        std::string k = std::to_string(j + 1);
        int a = p.add_edge("alpha" + k, m.beta[j]);
        int b = p.add_edge("beta" + k, m.alpha[j]);
        for (int h : {tail_of(b), head_of(a), head_of(b), tail_of(a)}) p.attach(v, h);
    }
    return p;
}

AdmissiblePair build_gamma0(const MonodromyTuple<Mat2c>& m) {
    MonodromyTuple<ExprPtr> e;
    for (size_t j = 0; j < m.alpha.size(); ++j) {
        e.alpha.push_back(e_const(m.alpha[j]));
        e.beta.push_back(e_const(m.beta[j]));
    }
    if (relation_residual(m) > 1e-9) throw DomainError("monodromies violate the surface group relation");
    return build_gamma0(e, {});
}

void SurfaceSpec::validate() const {
    if (pieces.empty()) throw GraphError("surface has no pieces");
    std::vector<std::vector<int>> used(pieces.size());
    for (size_t i = 0; i < pieces.size(); ++i) used[i].assign(pieces[i].tri.rotation.size(), 0);
    auto use = [&](const BoundaryRef& b, const std::string& c) {
        if (b.piece < 0 || static_cast<size_t>(b.piece) >= pieces.size())
            throw GraphError("contour " + c + " references an unknown piece");
        if (b.vertex < 0 || static_cast<size_t>(b.vertex) >= used[b.piece].size())
            throw GraphError("contour " + c + " references an unknown vertex");
        ++used[b.piece][b.vertex];
    };
    for (const auto& c : contours) {
        use(c.tilde, c.name);
        use(c.hat, c.name);
    }
    int total_k = 0, euler = 0;
    for (size_t i = 0; i < pieces.size(); ++i) {
        int k = static_cast<int>(used[i].size());
        for (int u : used[i])
            if (u != 1) throw GraphError("piece " + pieces[i].name + " has a boundary not used exactly once");
        total_k += k;
        euler += 2 * pieces[i].tri.genus() - 2 + k;
    }
    if (total_k != 2 * static_cast<int>(contours.size())) throw GraphError("boundary count differs from 2m");
    if (euler != 2 * genus - 2) throw GraphError("Euler count of the pieces does not match the genus");
    if (contours.empty() || static_cast<int>(contours.size()) > 3 * genus - 3)
        throw GraphError("contour count out of range");
}

bool SurfaceSpec::separating(int contour) const {
    std::vector<int> parent(pieces.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (size_t c = 0; c < contours.size(); ++c) {
        if (static_cast<int>(c) == contour) continue;
        parent[find_root(parent, contours[c].tilde.piece)] = find_root(parent, contours[c].hat.piece);
    }
    const auto& c = contours.at(contour);
    return find_root(parent, c.tilde.piece) != find_root(parent, c.hat.piece);
}

TwoFormMatrix Gamma2::combinatorial_form() const {
    size_t n = cs.names.size();
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(n, n);
    auto add = [&](int a, int b, double c) {
        w(a, b) += c;
        w(b, a) -= c;
    };
    for (const auto& b : boundaries) {
        const auto& rot = spec.pieces[b.piece].tri.rotation[b.tri_vertex];
        for (size_t i = 0; i < rot.size(); ++i)
            for (size_t j = i + 1; j < rot.size(); ++j) {
                int zi = shear[b.piece][rot[i] / 2], zj = shear[b.piece][rot[j] / 2];
                if (zi != zj) add(zi, zj, 1.0);
            }
    }
    for (const auto& c : contours) add(c.beta, c.l, 1.0);
    Lift lift(cs);
    Eigen::MatrixXcd l(n, lift.dim());
    for (size_t i = 0; i < lift.dim(); ++i) {
        auto t = lift.basis_tangent(static_cast<int>(i));
        for (size_t k = 0; k < n; ++k) l(k, i) = t[k];
    }
    TwoFormMatrix r;
    r.basis = cs.free_names();
    r.coeffs = l.transpose() * w * l;
    return r;
}

Gamma2 build_gamma2(const SurfaceSpec& spec) {
    spec.validate();
    Gamma2 g;
    g.spec = spec;
    AdmissiblePair& p = g.pair;
    CoordinateSystem& cs = g.cs;
    auto coord = [&](const std::string& name, CoordRole role) {
        p.add_coord(name);
        return cs.add(name, role);
    };

    // Shear coordinates, S-edges and vertices.
    g.shear.resize(spec.pieces.size());
    g.sedge.resize(spec.pieces.size());
    g.vertex.resize(spec.pieces.size());
    for (size_t i = 0; i < spec.pieces.size(); ++i) {
        const auto& pc = spec.pieces[i];
        for (const auto& e : pc.tri.edge_names) g.shear[i].push_back(coord("zeta_" + pc.name + "_" + e, CoordRole::Shear));
        for (size_t e = 0; e < pc.tri.edge_names.size(); ++e)
            g.sedge[i].push_back(p.add_edge(pc.name + "_" + pc.tri.edge_names[e], e_shear(g.shear[i][e])));
        for (const auto& v : pc.tri.vertex_names) g.vertex[i].push_back(p.add_vertex(pc.name + "_" + v));
    }
    for (const auto& c : spec.contours) {
        ContourInfo ci;
        ci.name = c.name;
        ci.l = coord("l_" + c.name, CoordRole::Length);
        ci.beta = coord("beta_" + c.name, CoordRole::Twist);
        ci.beta_t = coord("beta_" + c.name + "_t", CoordRole::SideTwist);
        ci.beta_h = coord("beta_" + c.name + "_h", CoordRole::SideTwist);
        g.contours.push_back(ci);
    }

    // Faces: internal vertex joined to the three corners by A-edges.
    std::vector<std::vector<std::vector<int>>> aedge(spec.pieces.size());
    for (size_t i = 0; i < spec.pieces.size(); ++i) {
        const auto& pc = spec.pieces[i];
        for (size_t f = 0; f < pc.tri.faces.size(); ++f) {
            std::string fs = std::to_string(f + 1);
            int w = p.add_vertex(pc.name + "_w" + fs);
            std::vector<int> es;
            for (int k = 0; k < 3; ++k) {
                int a = p.add_edge(pc.name + "_A" + fs + "_" + std::to_string(k + 1), e_a());
                es.push_back(a);
                p.attach(w, head_of(a));
            }
            aedge[i].push_back(es);
        }
    }

    // Stems and plumbing.
    auto side = [&](const BoundaryRef& b, int ci, bool tilde) {
        const auto& tri = spec.pieces[b.piece].tri;
        const auto& rot = tri.rotation[b.vertex];
        const auto& cor = tri.corners[b.vertex];
        const auto& cname = spec.contours[ci].name;
        std::string sfx = tilde ? "_t" : "_h";
        int gv = g.vertex[b.piece][b.vertex];
        int n = static_cast<int>(rot.size());
        int stem = p.add_edge("stem_" + cname + sfx, e_identity());
        p.attach(gv, tail_of(stem));
        std::vector<ExprPtr> out;
        for (int k = 0; k < n; ++k) {
            auto corner = cor[(k + n - 1) % n];
            int a = aedge[b.piece][corner.face][corner.index];
            p.attach(gv, tail_of(a));
            int se = g.sedge[b.piece][rot[k] / 2];
            int h = rot[k] % 2 == 0 ? tail_of(se) : head_of(se);
            p.attach(gv, h);
            out.push_back(p.out_jump(tail_of(a)));
            out.push_back(p.out_jump(h));
        }
        ExprPtr m = e_named("M_" + cname + sfx, e_inv(e_product(out)));
        p.jumps.jump[stem] = m;

        BoundaryInfo bi;
        bi.piece = b.piece;
        bi.tri_vertex = b.vertex;
        bi.graph_vertex = gv;
        bi.contour = ci;
        bi.tilde = tilde;
        int heads = tri.heads_at(b.vertex);
        bi.offset = kI * std::numbers::pi * static_cast<double>((1 + heads) % 2);
        g.boundaries.push_back(bi);

        LinearRelation rel;
        rel.label = "l_" + cname + sfx;
        rel.terms.push_back({g.contours[ci].l, 1.0});
        for (int h : rot) rel.terms.push_back({g.shear[b.piece][h / 2], -1.0});
        rel.rhs = bi.offset;
        rel.modular = true;
        cs.relations.push_back(rel);
        return std::pair<int, ExprPtr>{stem, m};
    };

    for (size_t ci = 0; ci < spec.contours.size(); ++ci) {
        const auto& c = spec.contours[ci];
        auto& info = g.contours[ci];
        auto [st, mt] = side(c.tilde, static_cast<int>(ci), true);
        auto [sh, mh] = side(c.hat, static_cast<int>(ci), false);
        info.stem_t = st;
        info.stem_h = sh;
        info.v_t = g.vertex[c.tilde.piece][c.tilde.vertex];
        info.v_h = g.vertex[c.hat.piece][c.hat.vertex];
        info.q_t = p.add_vertex("q_" + c.name + "_t");
        info.q = p.add_vertex("q_" + c.name);
        info.q_h = p.add_vertex("q_" + c.name + "_h");
        ExprPtr lam = e_named("L_" + c.name, e_low_l(mt));
        ExprPtr ct = e_named("Cp_" + c.name + "_t", e_mul(e_low_c(mt), e_toric(info.beta_t)));
        ExprPtr ch = e_named("Cp_" + c.name + "_h", e_mul(e_low_c(mh), e_toric(info.beta_h)));
        info.gam_t = p.add_edge("gam_" + c.name + "_t", ct);
        info.lam_t = p.add_edge("lam_" + c.name + "_t", lam);
        info.bee = p.add_edge("bee_" + c.name, e_b());
        info.lam_h = p.add_edge("lam_" + c.name + "_h", lam);
        info.gam_h = p.add_edge("gam_" + c.name + "_h", ch);
        for (int h : {head_of(st), tail_of(info.gam_t), tail_of(info.lam_t), head_of(info.gam_t)}) p.attach(info.q_t, h);
        for (int h : {head_of(info.bee), head_of(info.lam_t), tail_of(info.bee), head_of(info.lam_h)}) p.attach(info.q, h);
        for (int h : {head_of(sh), tail_of(info.gam_h), tail_of(info.lam_h), head_of(info.gam_h)}) p.attach(info.q_h, h);

        LinearRelation bd;
        bd.label = "beta_" + c.name;
        bd.terms = {{info.beta, 1.0}, {info.beta_t, -2.0}, {info.beta_h, -2.0}};
        bd.modular = false;
        cs.relations.push_back(bd);
        LinearRelation gauge;
        gauge.label = "gauge_" + c.name;
        gauge.terms = {{info.beta_h, 1.0}};
        gauge.modular = false;
        cs.relations.push_back(gauge);
    }
    p.graph.validate();

    // Free basis: eliminate the first shear in cyclic order on each side, then the side twists.
    std::vector<std::vector<int>> groups;
    for (const auto& b : g.boundaries) {
        std::vector<int> grp;
        for (int h : spec.pieces[b.piece].tri.rotation[b.tri_vertex]) grp.push_back(g.shear[b.piece][h / 2]);
        groups.push_back(grp);
    }
    for (const auto& c : g.contours) groups.push_back({c.beta_t});
    for (const auto& c : g.contours) groups.push_back({c.beta_h});
    std::vector<int> fr = choose_free(cs, groups);
    auto rank = [&](int k) {
        switch (cs.roles[k]) {
            case CoordRole::Shear: return 0;
            case CoordRole::Length: return 1;
            case CoordRole::Twist: return 2;
            default: return 3;
        }
    };
    std::stable_sort(fr.begin(), fr.end(), [&](int a, int b) { return rank(a) < rank(b); });
    cs.free = fr;
    if (static_cast<int>(cs.free.size()) != 6 * spec.genus - 6)
        throw GraphError("free coordinate count differs from 6g - 6");
    return g;
}

Gamma2 build_gamma2_separating(const Triangulation& tilde, const Triangulation& hat) {
    if (tilde.rotation.size() != 1 || hat.rotation.size() != 1)
        throw GraphError("separating pieces must have one vertex each");
    SurfaceSpec s;
    s.genus = tilde.genus() + hat.genus();
    s.pieces = {{"t", tilde}, {"h", hat}};
    s.contours = {{"g", {0, 0}, {1, 0}}};
    return build_gamma2(s);
}

Gamma2 build_gamma2_nonseparating(int genus, const Triangulation& piece, int v_tilde, int v_hat) {
    if (piece.rotation.size() != 2) throw GraphError("non-separating piece must have two vertices");
    if (piece.genus() != genus - 1) throw GraphError("piece genus must be g - 1");
    SurfaceSpec s;
    s.genus = genus;
    s.pieces = {{"t", piece}};
    s.contours = {{"g", {0, v_tilde}, {0, v_hat}}};
    return build_gamma2(s);
}

Gamma2 build_multicontour(const SurfaceSpec& spec) {
    if (spec.genus < 2) throw GraphError("multi-contour surfaces need genus >= 2");
    return build_gamma2(spec);
}

DiagPair<cplx> boundary_monodromy(const AdmissiblePair& p, int vertex, const Point& x) {
    const auto& rot = p.graph.vertices.at(vertex).rot;
    if (rot.size() < 2) throw GraphError("vertex has no half-edges after the stem");
    std::vector<ExprPtr> out;
    for (size_t k = 1; k < rot.size(); ++k) out.push_back(p.out_jump(rot[k]));
    Mat2c m = eval_value(e_product(out), x).inverse();
    return diag_lower(m);
}

Point sample_point(const Gamma2& g, std::mt19937_64& rng) {
    Lift lift(g.cs);
    std::uniform_real_distribution<double> radius(0.5, 2.0), angle(-std::numbers::pi, std::numbers::pi),
        twist(-0.5, 0.5);
    size_t n = g.cs.names.size();
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Point raw(n, 0.0);
        for (size_t k = 0; k < n; ++k)
            if (g.cs.roles[k] == CoordRole::Shear) raw[k] = cplx(std::log(radius(rng)), angle(rng));
        for (const auto& b : g.boundaries) {
            if (!b.tilde) continue;
            const auto& c = g.contours[b.contour];
            cplx l = b.offset;
            for (int h : g.spec.pieces[b.piece].tri.rotation[b.tri_vertex]) l += raw[g.shear[b.piece][h / 2]];
            raw[c.l] = l;
            double re = twist(rng);
            raw[c.beta] = cplx(re, twist(rng));
        }
        Point x = lift.point(lift.restrict_free(raw));
        bool ok = true;
        for (size_t k = 0; k < n && ok; ++k)
            if (g.cs.roles[k] == CoordRole::Shear) {
                double r = std::exp(x[k].real());
                ok = r >= 0.5 && r <= 2.0;
            }
        for (const auto& c : g.contours) {
            if (!ok) break;
            cplx lam = std::exp(x[c.l]);
            ok = std::abs(lam * lam - 1.0) >= 0.1;
        }
        if (ok) return x;
    }
    throw DomainError("no admissible sample found");
}

// ---------------------------------------------------------------------------

void TrinionGraph::validate() const {
    if (trinions < 2 || trinions % 2 != 0) throw GraphError("trinion graph needs an even number >= 2 of trinions");
    if (static_cast<int>(edges.size()) != 3 * genus() - 3) throw GraphError("trinion graph needs 3g - 3 edges");
    std::vector<std::array<int, 3>> used(trinions, {0, 0, 0});
    for (const auto& e : edges)
        for (const auto& o : {e.a, e.b}) {
            if (o.trinion < 0 || o.trinion >= trinions || o.slot < 0 || o.slot > 2)
                throw GraphError("edge " + e.name + " is dangling");
            ++used[o.trinion][o.slot];
        }
    for (const auto& u : used)
        for (int k : u)
            if (k != 1) throw GraphError("trinion vertex is not trivalent");
}

int trinion_slot_vertex(int slot) {
    if (slot < 0 || slot > 2) throw GraphError("trinion slot out of range");
    return slot;
}

Gamma2 build_trinion_decomposition(const TrinionGraph& t) {
    t.validate();
    SurfaceSpec s;
    s.genus = t.genus();
    for (int j = 0; j < t.trinions; ++j) s.pieces.push_back({"T" + std::to_string(j + 1), pants()});
    for (const auto& e : t.edges)
        s.contours.push_back({e.name, {e.a.trinion, trinion_slot_vertex(e.a.slot)},
                              {e.b.trinion, trinion_slot_vertex(e.b.slot)}});
    return build_gamma2(s);
}

TrinionGraph theta_graph() {
    return {2, {{"e1", {0, 0}, {1, 0}}, {"e2", {0, 1}, {1, 2}}, {"e3", {0, 2}, {1, 1}}}};
}

TrinionGraph theta_prime_graph() {
    return {2, {{"e1", {0, 0}, {1, 0}}, {"e2", {0, 1}, {1, 1}}, {"e3", {0, 2}, {1, 2}}}};
}

TrinionGraph dumbbell_graph() {
    return {2, {{"e1", {0, 0}, {0, 1}}, {"e2", {0, 2}, {1, 2}}, {"e3", {1, 0}, {1, 1}}}};
}

TrinionRep build_trinion_rep(cplx l1, cplx l2, cplx l3) {
    std::array<cplx, 3> l{l1, l2, l3};
    for (cplx x : l)
        if (std::abs(x * x - 1.0) < 1e-12 || std::abs(x) < 1e-300) throw DomainError("degenerate trinion eigenvalue");
    TrinionRep r;
    r.m[0] = {-l1, 0.0, (l1 * l2 + l3) / (l1 * l3), -1.0 / l1};
    r.m[1] = {l3 / l1, (-l2 * l3 - l1) / (l1 * l2), (l1 * l2 + l3) / l1, (-l1 * l2 * l2 - l2 * l3 - l1) / (l1 * l2)};
    r.m[2] = {-1.0 / l3, (-l2 * l3 - l1) / l2, 0.0, -l3};
    for (int j = 0; j < 3; ++j) {
        cplx a = l[j], b = l[(j + 1) % 3], c = l[(j + 2) % 3];
        r.mloc[j] = {-a, 0.0, (a * b + c) / (c * a), -1.0 / a};
        r.c[j] = {1.0, 0.0, (-a * b - c) / ((a * a - 1.0) * c), 1.0};
    }
    r.z = {std::sqrt(l3 * l2 / l1), std::sqrt(l1 * l3 / l2), std::sqrt(l1 * l2 / l3)};
    return r;
}

// ---------------------------------------------------------------------------

SurfaceSpec sep_g2_spec() {
    SurfaceSpec s;
    s.genus = 2;
    s.pieces = {{"t", one_vertex_surface(1)}, {"h", one_vertex_surface(1)}};
    s.contours = {{"g", {0, 0}, {1, 0}}};
    return s;
}

SurfaceSpec nonsep_g2_spec() {
    SurfaceSpec s;
    s.genus = 2;
    s.pieces = {{"t", two_vertex_torus()}};
    s.contours = {{"g", {0, 0}, {0, 1}}};
    return s;
}

SurfaceSpec two_contour_g2_spec() {
    SurfaceSpec s;
    s.genus = 2;
    s.pieces = {{"t", one_vertex_surface(1)}, {"h", pants()}};
    s.contours = {{"g1", {0, 0}, {1, 0}}, {"g2", {1, 1}, {1, 2}}};
    return s;
}

SurfaceSpec multicontour_g3_spec(int m) {
    SurfaceSpec s;
    s.genus = 3;
    Triangulation torus = one_vertex_surface(1);
    switch (m) {
        case 1:
            s.pieces = {{"p1", torus}, {"p2", one_vertex_surface(2)}};
            s.contours = {{"g1", {0, 0}, {1, 0}}};
            break;
        case 2:
            s.pieces = {{"p1", torus}, {"p2", stellar_subdivision(torus, 0, "n")}, {"p3", torus}};
            s.contours = {{"g1", {0, 0}, {1, 0}}, {"g2", {1, 1}, {2, 0}}};
            break;
        case 3:
            s.pieces = {{"p1", torus}, {"p2", torus}, {"p3", torus}, {"p4", pants()}};
            s.contours = {{"g1", {0, 0}, {3, 0}}, {"g2", {1, 0}, {3, 1}}, {"g3", {2, 0}, {3, 2}}};
            break;
        case 4:
            s.pieces = {{"p1", torus}, {"p2", pants()}, {"p3", pants()}, {"p4", torus}};
            s.contours = {{"g1", {0, 0}, {1, 0}},
                          {"g2", {1, 1}, {2, 1}},
                          {"g3", {1, 2}, {2, 2}},
                          {"g4", {2, 0}, {3, 0}}};
            break;
        default: throw GraphError("multicontour genus-3 catalog has m = 1..4");
    }
    return s;
}

namespace {

struct FormBuilder {
    TwoFormMatrix m;
    explicit FormBuilder(std::vector<std::string> basis) {
        m.basis = std::move(basis);
        m.coeffs = Eigen::MatrixXcd::Zero(m.basis.size(), m.basis.size());
    }
    int at(const std::string& n) const {
        auto it = std::find(m.basis.begin(), m.basis.end(), n);
        if (it == m.basis.end()) throw GraphError("unknown basis element " + n);
        return static_cast<int>(it - m.basis.begin());
    }
    // c dx ^ dy
    void wedge(const std::string& x, const std::string& y, double c) {
        int a = at(x), b = at(y);
        m.coeffs(a, b) += c;
        m.coeffs(b, a) -= c;
    }
};

TwoFormMatrix trinion_target(bool cyclic_lengths) {
    FormBuilder f({"l_e1", "l_e2", "l_e3", "beta_e1", "beta_e2", "beta_e3"});
    for (const char* e : {"e1", "e2", "e3"}) f.wedge(std::string("beta_") + e, std::string("l_") + e, 1.0);
    if (cyclic_lengths) {
        f.wedge("l_e3", "l_e2", 2.0);
        f.wedge("l_e1", "l_e3", 2.0);
        f.wedge("l_e2", "l_e1", 2.0);
    }
    return f.m;
}

}  // namespace

TwoFormMatrix target_sep_g2() {
    FormBuilder f({"zeta_t_e2", "zeta_t_e3", "zeta_h_e2", "zeta_h_e3", "l_g", "beta_g"});
    f.wedge("zeta_t_e2", "zeta_t_e3", 2.0);
    f.wedge("zeta_h_e2", "zeta_h_e3", 2.0);
    for (const char* z : {"zeta_t_e2", "zeta_t_e3", "zeta_h_e2", "zeta_h_e3"}) f.wedge("l_g", z, 1.0);
    f.wedge("beta_g", "l_g", 1.0);
    return f.m;
}

TwoFormMatrix target_two_contour_g2() {
    FormBuilder f({"zeta_t_e2", "zeta_t_e3", "l_g1", "l_g2", "beta_g1", "beta_g2"});
    f.wedge("zeta_t_e2", "zeta_t_e3", 2.0);
    f.wedge("l_g1", "zeta_t_e2", 1.0);
    f.wedge("l_g1", "zeta_t_e3", 1.0);
    f.wedge("beta_g1", "l_g1", 1.0);
    f.wedge("beta_g2", "l_g2", 1.0);
    return f.m;
}

TwoFormMatrix target_theta() { return trinion_target(false); }
TwoFormMatrix target_theta_prime() { return trinion_target(true); }
TwoFormMatrix target_dumbbell() { return trinion_target(false); }

TwoFormMatrix align(const TwoFormMatrix& m, const std::vector<std::string>& basis) {
    if (basis.size() != m.basis.size()) throw GraphError("cannot align forms of different dimension");
    std::vector<int> idx;
    for (const auto& b : basis) {
        auto it = std::find(m.basis.begin(), m.basis.end(), b);
        if (it == m.basis.end()) throw GraphError("basis element " + b + " missing");
        idx.push_back(static_cast<int>(it - m.basis.begin()));
    }
    TwoFormMatrix r;
    r.basis = basis;
    r.coeffs.resize(basis.size(), basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) r.coeffs(i, j) = m.coeffs(idx[i], idx[j]);
    return r;
}

}  // namespace gf
