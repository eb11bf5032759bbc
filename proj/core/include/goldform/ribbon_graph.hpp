#pragma once

#include <string>
#include <utility>
#include <vector>

#include "goldform/expr.hpp"

namespace gf {

// Half-edge ids: 2e is the tail of edge e, 2e + 1 its head.
inline int tail_of(int e) { return 2 * e; }
inline int head_of(int e) { return 2 * e + 1; }
inline int edge_of(int h) { return h / 2; }
inline bool is_tail(int h) { return h % 2 == 0; }
inline int other_end(int h) { return h ^ 1; }

struct Vertex {
    std::string name;
    std::vector<int> rot;  // cyclic order of incident half-edges, rot[0] follows the cilium
};

struct Edge {
    std::string name;
};

struct RibbonGraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    // Throws GraphError unless every half-edge appears exactly once and names are unique.
    void validate() const;
    // (vertex, position) of a half-edge.
    std::pair<int, int> locate(int h) const;
    int find_edge(const std::string& name) const;
    int find_vertex(const std::string& name) const;
    int half_edge(const std::string& token) const;  // "name+" tail, "name-" head
    std::string half_edge_name(int h) const;
};

struct JumpAssignment {
    std::vector<std::string> coords;
    std::vector<ExprPtr> jump;  // per edge, tail to head

    int coord_index(const std::string& name) const;
};

struct AdmissiblePair {
    RibbonGraph graph;
    JumpAssignment jumps;

    int add_vertex(const std::string& name);
    int add_edge(const std::string& name, ExprPtr jump);
    int add_coord(const std::string& name);
    // Appends a half-edge at the end of a vertex rotation.
    void attach(int vertex, int h) { graph.vertices[vertex].rot.push_back(h); }
    // Jump read leaving the vertex through half-edge h.
    ExprPtr out_jump(int h) const;
};

struct AdmissibilityReport {
    std::vector<double> residual;  // max-entry distance of each vertex product to I
    double max_residual = 0.0;
    bool admissible = true;
};

AdmissibilityReport validate_admissible(const AdmissiblePair& p, const std::vector<cplx>& point,
                                        double tol = 1e-10);

// Ordered list of edge crossings; +1 crosses along the edge's jump, -1 against it.
struct PathSpec {
    std::vector<std::pair<int, int>> crossings;
};

PathSpec parse_path(const RibbonGraph& g, const std::string& text);
Mat2c path_monodromy(const AdmissiblePair& p, const PathSpec& path, const std::vector<cplx>& point);
ExprPtr path_expr(const AdmissiblePair& p, const PathSpec& path);

// Moves. Each returns a new pair; the input is untouched.
struct MoveResult {
    AdmissiblePair pair;
    std::vector<int> new_edges;  // ids in the result of edges created by the move
};

AdmissiblePair merge_vertices(const AdmissiblePair& p, int edge);
MoveResult zip_edges(const AdmissiblePair& p, int e1, int e2);
// Replaces a run w1..w6 at a vertex whose last three half-edges are the other ends of the
// first three (a b c a' b' c') by two edges u, v with rotation u v u' v'.
MoveResult regroup_handle(const AdmissiblePair& p, int vertex, int start);
// Deletes an edge whose jump is the identity constant.
AdmissiblePair remove_identity_edge(const AdmissiblePair& p, int edge);
// Moves the cilium to sit before position pos.
AdmissiblePair rotate_cilium(const AdmissiblePair& p, int vertex, int pos);

// Finds a zippable pair or returns {-1, -1}.
std::pair<int, int> find_zippable(const AdmissiblePair& p, const std::vector<bool>& allowed = {});
// Finds a handle run at a vertex; returns start position or -1.
int find_handle(const AdmissiblePair& p, int vertex);

}  // namespace gf
