#include "goldform/surfaces.hpp"

#include <algorithm>

#include "goldform/errors.hpp"

namespace gf {

namespace {

int h_out(const Side& s) { return s.forward ? 2 * s.edge : 2 * s.edge + 1; }
int h_in(const Side& s) { return s.forward ? 2 * s.edge + 1 : 2 * s.edge; }

// Reorders vertices so that vertex k contains starts[k] and its rotation begins there.
void normalize_vertices(Triangulation& t, const std::vector<int>& starts, const std::vector<std::string>& names) {
    std::vector<std::vector<int>> rot;
    std::vector<std::vector<Triangulation::Corner>> cor;
    for (int s : starts) {
        int v = t.vertex_of(s);
        const auto& r = t.rotation[v];
        int pos = static_cast<int>(std::find(r.begin(), r.end(), s) - r.begin());
        std::vector<int> nr;
        std::vector<Triangulation::Corner> nc;
        for (size_t k = 0; k < r.size(); ++k) {
            nr.push_back(r[(pos + k) % r.size()]);
            nc.push_back(t.corners[v][(pos + k) % r.size()]);
        }
        rot.push_back(nr);
        cor.push_back(nc);
    }
    if (rot.size() != t.rotation.size()) throw GraphError("vertex normalization must list every vertex");
    t.rotation = rot;
    t.corners = cor;
    t.vertex_names = names;
}

}  // namespace

int Triangulation::genus() const {
    int chi = static_cast<int>(rotation.size()) - static_cast<int>(edge_names.size()) + static_cast<int>(faces.size());
    return (2 - chi) / 2;
}

int Triangulation::vertex_of(int h) const {
    for (size_t v = 0; v < rotation.size(); ++v)
        for (int x : rotation[v])
            if (x == h) return static_cast<int>(v);
    throw GraphError("half-edge not found in triangulation");
}

int Triangulation::find_edge(const std::string& name) const {
    for (size_t i = 0; i < edge_names.size(); ++i)
        if (edge_names[i] == name) return static_cast<int>(i);
    return -1;
}

int Triangulation::multiplicity(int e, int v) const {
    int m = 0;
    for (int h : rotation.at(v))
        if (h / 2 == e) ++m;
    return m;
}

int Triangulation::heads_at(int v) const {
    int m = 0;
    for (int h : rotation.at(v))
        if (h % 2 == 1) ++m;
    return m;
}

Triangulation make_triangulation(std::vector<std::string> edge_names, std::vector<std::array<Side, 3>> faces) {
    Triangulation t;
    t.edge_names = std::move(edge_names);
    t.faces = std::move(faces);
    size_t nh = 2 * t.edge_names.size();
    std::vector<int> succ(nh, -1);
    std::vector<Triangulation::Corner> corner_after(nh, {-1, -1});
    for (size_t f = 0; f < t.faces.size(); ++f) {
        for (int i = 0; i < 3; ++i) {
            const Side& s = t.faces[f][i];
            const Side& prev = t.faces[f][(i + 2) % 3];
            if (s.edge < 0 || static_cast<size_t>(s.edge) >= t.edge_names.size())
                throw GraphError("face references unknown edge");
            int h = h_out(s);
            if (succ[h] >= 0) throw GraphError("edge " + t.edge_names[s.edge] + " traversed twice in one direction");
            succ[h] = h_in(prev);
            corner_after[h] = {static_cast<int>(f), i};
        }
    }
    for (size_t h = 0; h < nh; ++h)
        if (succ[h] < 0) throw GraphError("edge " + t.edge_names[h / 2] + " does not bound two faces");
    std::vector<bool> seen(nh, false);
    for (size_t h0 = 0; h0 < nh; ++h0) {
        if (seen[h0]) continue;
        std::vector<int> rot;
        std::vector<Triangulation::Corner> cor;
        for (int h = static_cast<int>(h0); !seen[h]; h = succ[h]) {
            seen[h] = true;
            rot.push_back(h);
            cor.push_back(corner_after[h]);
        }
        t.rotation.push_back(rot);
        t.corners.push_back(cor);
        t.vertex_names.push_back("v" + std::to_string(t.rotation.size() - 1));
    }
    int chi = static_cast<int>(t.rotation.size()) - static_cast<int>(t.edge_names.size()) +
              static_cast<int>(t.faces.size());
    if (chi % 2 != 0 || chi > 2) throw GraphError("triangulation has invalid Euler characteristic");
    return t;
}

Triangulation one_vertex_surface(int genus) {
    if (genus < 1) throw GraphError("one-vertex surface needs genus >= 1");
    int n = 4 * genus;
    std::vector<std::string> names;
    std::vector<Side> polygon;
    if (genus == 1) {
        // a = e1, b = e3, diagonal = e2
        names = {"e1", "e3", "e2"};
        polygon = {{0, true}, {1, true}, {0, false}, {1, false}};
    } else {
        for (int k = 1; k <= genus; ++k) {
            names.push_back("a" + std::to_string(k));
            names.push_back("b" + std::to_string(k));
        }
        for (int k = 0; k < genus; ++k) {
            int a = 2 * k, b = 2 * k + 1;
            polygon.insert(polygon.end(), {{a, true}, {b, true}, {a, false}, {b, false}});
        }
        for (int k = 2; k <= n - 2; ++k) names.push_back("d" + std::to_string(k));
    }
    int first_diag = 2 * genus;
    auto diag = [&](int k) { return first_diag + (k - 2); };
    std::vector<std::array<Side, 3>> faces;
    for (int k = 1; k <= n - 2; ++k) {
        Side s0 = k == 1 ? polygon[0] : Side{diag(k), true};
        Side s2 = k + 1 == n - 1 ? polygon[n - 1] : Side{diag(k + 1), false};
        faces.push_back({s0, polygon[k], s2});
    }
    Triangulation t = make_triangulation(names, faces);
    if (t.rotation.size() != 1) throw GraphError("internal: polygon word does not close to one vertex");
    t.vertex_names = {"v0"};
    return t;
}

Triangulation pants() {
    // e1 = v2 -> v3, e2 = v3 -> v1, e3 = v1 -> v2
    Triangulation t = make_triangulation({"e1", "e2", "e3"}, {{Side{2, true}, Side{0, true}, Side{1, true}},
                                                              {Side{1, false}, Side{0, false}, Side{2, false}}});
    normalize_vertices(t, {2 * 2, 2 * 0, 2 * 1}, {"v1", "v2", "v3"});
    return t;
}

Triangulation two_vertex_torus() {
    enum { A = 0, X = 1, B = 2, C = 3, H = 4, D = 5 };
    Triangulation t = make_triangulation(
        {"e1", "e2", "e3", "e4", "e5", "e6"},
        {{Side{H, true}, Side{B, true}, Side{A, false}},
         {Side{H, false}, Side{D, true}, Side{C, false}},
         {Side{D, false}, Side{C, true}, Side{X, true}},
         {Side{B, false}, Side{A, true}, Side{X, false}}});
    if (t.rotation.size() != 2) throw GraphError("internal: two-vertex torus has wrong vertex count");
    normalize_vertices(t, {2 * A, 2 * A + 1}, {"P", "Q"});
    return t;
}

Triangulation stellar_subdivision(const Triangulation& t, int face, const std::string& prefix) {
    if (face < 0 || static_cast<size_t>(face) >= t.faces.size()) throw GraphError("stellar: unknown face");
    std::vector<std::string> names = t.edge_names;
    int base = static_cast<int>(names.size());
    for (int i = 0; i < 3; ++i) names.push_back(prefix + std::to_string(i + 1));
    std::vector<std::array<Side, 3>> faces;
    for (size_t f = 0; f < t.faces.size(); ++f)
        if (static_cast<int>(f) != face) faces.push_back(t.faces[f]);
    const auto& old = t.faces[face];
    // new edge base + i runs from corner i to the new vertex
    for (int i = 0; i < 3; ++i)
        faces.push_back({old[i], Side{base + (i + 1) % 3, true}, Side{base + i, false}});
    Triangulation r = make_triangulation(names, faces);
    // keep old vertices first, in their old rotation starts
    std::vector<int> starts;
    std::vector<std::string> vnames;
    for (size_t v = 0; v < t.rotation.size(); ++v) {
        starts.push_back(t.rotation[v][0]);
        vnames.push_back(t.vertex_names[v]);
    }
    starts.push_back(2 * base + 1);
    vnames.push_back(prefix);
    normalize_vertices(r, starts, vnames);
    return r;
}

}  // namespace gf
