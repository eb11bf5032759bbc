#include "goldform/ribbon_graph.hpp"

#include <sstream>

#include "goldform/errors.hpp"

namespace gf {

void RibbonGraph::validate() const {
    std::vector<int> seen(2 * edges.size(), 0);
    for (const auto& v : vertices) {
        for (int h : v.rot) {
            if (h < 0 || static_cast<size_t>(h) >= seen.size())
                throw GraphError("vertex " + v.name + " references unknown half-edge");
            if (++seen[h] > 1) throw GraphError("half-edge " + half_edge_name(h) + " used twice");
        }
    }
    for (size_t h = 0; h < seen.size(); ++h)
        if (seen[h] == 0) throw GraphError("half-edge " + half_edge_name(static_cast<int>(h)) + " is not attached");
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i].name == edges[j].name) throw GraphError("duplicate edge " + edges[i].name);
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i].name == vertices[j].name) throw GraphError("duplicate vertex " + vertices[i].name);
}

std::pair<int, int> RibbonGraph::locate(int h) const {
    for (size_t v = 0; v < vertices.size(); ++v) {
        const auto& rot = vertices[v].rot;
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == h) return {static_cast<int>(v), static_cast<int>(i)};
    }
    throw GraphError("half-edge " + half_edge_name(h) + " is not attached");
}

int RibbonGraph::find_edge(const std::string& name) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return static_cast<int>(i);
    return -1;
}

int RibbonGraph::find_vertex(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].name == name) return static_cast<int>(i);
    return -1;
}

int RibbonGraph::half_edge(const std::string& token) const {
    if (token.size() < 2) throw GraphError("bad half-edge token '" + token + "'");
    char s = token.back();
    if (s != '+' && s != '-') throw GraphError("half-edge token must end in + or -: '" + token + "'");
    int e = find_edge(token.substr(0, token.size() - 1));
    if (e < 0) throw GraphError("unknown edge in '" + token + "'");
    return s == '+' ? tail_of(e) : head_of(e);
}

std::string RibbonGraph::half_edge_name(int h) const {
    std::string base = static_cast<size_t>(edge_of(h)) < edges.size() ? edges[edge_of(h)].name
                                                                       : "#" + std::to_string(edge_of(h));
    return base + (is_tail(h) ? "+" : "-");
}

int JumpAssignment::coord_index(const std::string& name) const {
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == name) return static_cast<int>(i);
    return -1;
}

int AdmissiblePair::add_vertex(const std::string& name) {
    if (graph.find_vertex(name) >= 0) throw GraphError("duplicate vertex " + name);
    graph.vertices.push_back({name, {}});
    return static_cast<int>(graph.vertices.size()) - 1;
}

int AdmissiblePair::add_edge(const std::string& name, ExprPtr jump) {
    if (graph.find_edge(name) >= 0) throw GraphError("duplicate edge " + name);
    graph.edges.push_back({name});
    jumps.jump.push_back(std::move(jump));
    return static_cast<int>(graph.edges.size()) - 1;
}

int AdmissiblePair::add_coord(const std::string& name) {
    if (jumps.coord_index(name) >= 0) throw GraphError("duplicate coordinate " + name);
    jumps.coords.push_back(name);
    return static_cast<int>(jumps.coords.size()) - 1;
}

ExprPtr AdmissiblePair::out_jump(int h) const {
    const ExprPtr& j = jumps.jump.at(edge_of(h));
    return is_tail(h) ? j : e_inv(j);
}

AdmissibilityReport validate_admissible(const AdmissiblePair& p, const std::vector<cplx>& point, double tol) {
    p.graph.validate();
    Evaluator ev(std::vector<Jet>(point.begin(), point.end()));
    AdmissibilityReport r;
    for (const auto& v : p.graph.vertices) {
        Mat2c prod = Mat2c::identity();
        for (int h : v.rot) {
            const ExprPtr& j = p.jumps.jump[edge_of(h)];
            prod = prod * value_of(is_tail(h) ? ev.eval(j) : ev.eval_inverse(j));
        }
        double res = distance_to_identity(prod);
        r.residual.push_back(res);
        r.max_residual = std::max(r.max_residual, res);
    }
    r.admissible = r.max_residual <= tol;
    return r;
}

PathSpec parse_path(const RibbonGraph& g, const std::string& text) {
    PathSpec path;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int h = g.half_edge(tok);
        path.crossings.push_back({edge_of(h), is_tail(h) ? 1 : -1});
    }
    return path;
}

ExprPtr path_expr(const AdmissiblePair& p, const PathSpec& path) {
    std::vector<ExprPtr> f;
    for (auto [e, s] : path.crossings) {
        if (e < 0 || static_cast<size_t>(e) >= p.graph.edges.size()) throw GraphError("path crosses unknown edge");
        if (s != 1 && s != -1) throw GraphError("path crossing sign must be +1 or -1");
        f.push_back(s > 0 ? p.jumps.jump[e] : e_inv(p.jumps.jump[e]));
    }
    return e_product(f);
}

Mat2c path_monodromy(const AdmissiblePair& p, const PathSpec& path, const std::vector<cplx>& point) {
    return eval_value(path_expr(p, path), point);
}

namespace {

// Removes flagged edges and vertices with empty rotation flags, renumbering half-edges.
AdmissiblePair compact(const AdmissiblePair& p, const std::vector<bool>& drop_edge,
                       const std::vector<bool>& drop_vertex, std::vector<int>* edge_map_out = nullptr) {
    std::vector<int> map(p.graph.edges.size(), -1);
    AdmissiblePair r;
    r.jumps.coords = p.jumps.coords;
    for (size_t e = 0; e < p.graph.edges.size(); ++e) {
        if (e < drop_edge.size() && drop_edge[e]) continue;
        map[e] = static_cast<int>(r.graph.edges.size());
        r.graph.edges.push_back(p.graph.edges[e]);
        r.jumps.jump.push_back(p.jumps.jump[e]);
    }
    for (size_t v = 0; v < p.graph.vertices.size(); ++v) {
        if (v < drop_vertex.size() && drop_vertex[v]) continue;
        Vertex nv{p.graph.vertices[v].name, {}};
        for (int h : p.graph.vertices[v].rot) {
            int e = map[edge_of(h)];
            if (e < 0) throw GraphError("internal: dropped edge still attached");
            nv.rot.push_back(2 * e + (h & 1));
        }
        r.graph.vertices.push_back(std::move(nv));
    }
    if (edge_map_out) *edge_map_out = map;
    return r;
}

std::vector<int> rotated(const std::vector<int>& rot, int pos) {
    std::vector<int> r;
    int n = static_cast<int>(rot.size());
    for (int i = 0; i < n; ++i) r.push_back(rot[(pos + i) % n]);
    return r;
}

std::string fresh_edge_name(const RibbonGraph& g, const std::string& base) {
    if (g.find_edge(base) < 0) return base;
    for (int k = 2;; ++k) {
        std::string n = base + "_" + std::to_string(k);
        if (g.find_edge(n) < 0) return n;
    }
}

}  // namespace

AdmissiblePair merge_vertices(const AdmissiblePair& p, int edge) {
    if (edge < 0 || static_cast<size_t>(edge) >= p.graph.edges.size()) throw GraphError("merge: unknown edge");
    auto [v1, i] = p.graph.locate(tail_of(edge));
    auto [v2, j] = p.graph.locate(head_of(edge));
    if (v1 == v2) throw GraphError("merge: edge " + p.graph.edges[edge].name + " is a loop");
    const auto& r1 = p.graph.vertices[v1].rot;
    const auto& r2 = p.graph.vertices[v2].rot;
    std::vector<int> rot;
    for (size_t k = 1; k < r1.size(); ++k) rot.push_back(r1[(i + k) % r1.size()]);
    for (size_t k = 1; k < r2.size(); ++k) rot.push_back(r2[(j + k) % r2.size()]);
    AdmissiblePair q = p;
    q.graph.vertices[v1].rot = rot;
    q.graph.vertices[v2].rot.clear();
    std::vector<bool> de(p.graph.edges.size(), false), dv(p.graph.vertices.size(), false);
    de[edge] = true;
    dv[v2] = true;
    return compact(q, de, dv);
}

MoveResult zip_edges(const AdmissiblePair& p, int e1, int e2) {
    if (e1 == e2) throw GraphError("zip: edges must differ");
    const RibbonGraph& g = p.graph;
    for (int x1 : {tail_of(e1), head_of(e1)}) {
        for (int x2 : {tail_of(e2), head_of(e2)}) {
            auto [pv, i] = g.locate(x1);
            auto [pv2, i2] = g.locate(x2);
            int np = static_cast<int>(g.vertices[pv].rot.size());
            if (pv != pv2 || i2 != (i + 1) % np) continue;
            int y1 = other_end(x1), y2 = other_end(x2);
            auto [qv, j] = g.locate(y2);
            auto [qv2, j2] = g.locate(y1);
            int nq = static_cast<int>(g.vertices[qv].rot.size());
            if (qv != qv2 || j2 != (j + 1) % nq) continue;

            AdmissiblePair q = p;
            if (i2 == 0) q.graph.vertices[pv].rot = rotated(q.graph.vertices[pv].rot, i);
            if (j2 == 0) q.graph.vertices[qv].rot = rotated(q.graph.vertices[qv].rot, j);
            std::string name = fresh_edge_name(g, g.edges[e1].name + "_" + g.edges[e2].name);
            int f = q.add_edge(name, e_mul(p.out_jump(x1), p.out_jump(x2)));
            auto replace = [&](int old_h, int new_h) {
                for (auto& v : q.graph.vertices)
                    for (auto& h : v.rot)
                        if (h == old_h) h = new_h;
            };
            auto erase = [&](int old_h) {
                for (auto& v : q.graph.vertices) std::erase(v.rot, old_h);
            };
            replace(x1, tail_of(f));
            erase(x2);
            replace(y2, head_of(f));
            erase(y1);
            std::vector<bool> de(q.graph.edges.size(), false);
            de[e1] = de[e2] = true;
            std::vector<int> map;
            MoveResult r{compact(q, de, {}, &map), {}};
            r.new_edges.push_back(map[f]);
            return r;
        }
    }
    throw GraphError("zip: edges " + g.edges[e1].name + " and " + g.edges[e2].name + " do not bound a bigon");
}

namespace {

bool handle_at(const std::vector<int>& rot, int s) {
    int n = static_cast<int>(rot.size());
    if (n < 6) return false;
    auto w = [&](int k) { return rot[(s + k) % n]; };
    for (int k = 0; k < 3; ++k)
        if (w(k + 3) != other_end(w(k))) return false;
    int a = edge_of(w(0)), b = edge_of(w(1)), c = edge_of(w(2));
    return a != b && b != c && a != c;
}

}  // namespace

int find_handle(const AdmissiblePair& p, int vertex) {
    const auto& rot = p.graph.vertices.at(vertex).rot;
    for (int s = 0; s < static_cast<int>(rot.size()); ++s)
        if (handle_at(rot, s)) return s;
    return -1;
}

MoveResult regroup_handle(const AdmissiblePair& p, int vertex, int start) {
    const auto& rot0 = p.graph.vertices.at(vertex).rot;
    if (!handle_at(rot0, start)) throw GraphError("regroup: no handle run at the given position");
    AdmissiblePair q = p;
    auto& rot = q.graph.vertices[vertex].rot;
    int n = static_cast<int>(rot.size());
    if (start + 6 > n) {
        rot = rotated(rot, start);
        start = 0;
    }
    std::vector<int> w(rot.begin() + start, rot.begin() + start + 6);
    const RibbonGraph& g = p.graph;
    std::string base = g.edges[edge_of(w[0])].name + "_" + g.edges[edge_of(w[1])].name;
    int u = q.add_edge(fresh_edge_name(q.graph, base + "_u"), e_mul(p.out_jump(w[0]), p.out_jump(w[1])));
    int v = q.add_edge(fresh_edge_name(q.graph, base + "_v"), e_mul(p.out_jump(w[2]), p.out_jump(w[3])));
    std::vector<int> nr(rot.begin(), rot.begin() + start);
    nr.insert(nr.end(), {tail_of(u), tail_of(v), head_of(u), head_of(v)});
    nr.insert(nr.end(), rot.begin() + start + 6, rot.end());
    q.graph.vertices[vertex].rot = nr;
    std::vector<bool> de(q.graph.edges.size(), false);
    for (int k = 0; k < 3; ++k) de[edge_of(w[k])] = true;
    std::vector<int> map;
    MoveResult r{compact(q, de, {}, &map), {}};
    r.new_edges = {map[u], map[v]};
    return r;
}

AdmissiblePair remove_identity_edge(const AdmissiblePair& p, int edge) {
    if (!is_identity(p.jumps.jump.at(edge))) throw GraphError("remove: jump is not the identity");
    AdmissiblePair q = p;
    std::vector<bool> dv(q.graph.vertices.size(), false);
    for (size_t v = 0; v < q.graph.vertices.size(); ++v) {
        auto& rot = q.graph.vertices[v].rot;
        size_t before = rot.size();
        std::erase(rot, tail_of(edge));
        std::erase(rot, head_of(edge));
        if (rot.empty() && before > 0) dv[v] = true;
    }
    std::vector<bool> de(q.graph.edges.size(), false);
    de[edge] = true;
    return compact(q, de, dv);
}

AdmissiblePair rotate_cilium(const AdmissiblePair& p, int vertex, int pos) {
    AdmissiblePair q = p;
    auto& rot = q.graph.vertices.at(vertex).rot;
    if (pos < 0 || pos >= static_cast<int>(rot.size())) throw GraphError("rotate: position out of range");
    rot = rotated(rot, pos);
    return q;
}

std::pair<int, int> find_zippable(const AdmissiblePair& p, const std::vector<bool>& allowed) {
    int ne = static_cast<int>(p.graph.edges.size());
    for (int a = 0; a < ne; ++a) {
        for (int b = 0; b < ne; ++b) {
            if (a == b) continue;
            if (!allowed.empty() && !allowed[a] && !allowed[b]) continue;
            try {
                (void)zip_edges(p, a, b);
                return {a, b};
            } catch (const GraphError&) {
            }
        }
    }
    return {-1, -1};
}

}  // namespace gf
