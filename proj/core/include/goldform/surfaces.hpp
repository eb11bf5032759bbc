#pragma once

#include <array>
#include <string>
#include <vector>

namespace gf {

// Directed side of a triangle: the edge, traversed along (forward) or against its orientation.
struct Side {
    int edge;
    bool forward;
};

// Closed oriented triangulated surface. Faces list their sides counterclockwise; each vertex
// is a puncture that will carry one boundary component.
struct Triangulation {
    struct Corner {
        int face;
        int index;  // corner i sits at the start of side i
    };

    std::vector<std::string> edge_names;
    std::vector<std::array<Side, 3>> faces;
    std::vector<std::string> vertex_names;

    // Derived by make_triangulation. Half-edges: 2e at the tail, 2e + 1 at the head.
    std::vector<std::vector<int>> rotation;      // counterclockwise around each vertex
    std::vector<std::vector<Corner>> corners;    // corners[v][k] lies between rotation[v][k] and [k + 1]

    int genus() const;
    int vertex_of(int half_edge) const;
    int find_edge(const std::string& name) const;
    // Number of endpoints of edge e at vertex v (0, 1 or 2).
    int multiplicity(int e, int v) const;
    // Number of head endpoints at v.
    int heads_at(int v) const;
};

Triangulation make_triangulation(std::vector<std::string> edge_names, std::vector<std::array<Side, 3>> faces);

// Fan triangulation of the standard 4g-gon a1 b1 a1' b1' ...; one vertex, 6g - 3 edges.
// For g = 1 the edges are named e1, e2, e3 with e1 first in the vertex rotation.
Triangulation one_vertex_surface(int genus);

// Sphere with three vertices v1, v2, v3 and edges e3 = v1->v2, e1 = v2->v3, e2 = v3->v1.
Triangulation pants();

// Two-vertex torus: vertex P carries the loop e5, vertex Q the loop e2, and e1, e3, e4, e6 run P -> Q.
Triangulation two_vertex_torus();

// Adds a vertex inside face f, splitting it into three.
Triangulation stellar_subdivision(const Triangulation& t, int face, const std::string& prefix);

}  // namespace gf
