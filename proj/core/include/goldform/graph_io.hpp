#pragma once

#include <string>

#include "goldform/builders.hpp"
#include "goldform/coords.hpp"
#include "goldform/ribbon_graph.hpp"

namespace gf {

// Graph-spec text format. Sections, one item per line, '#' starts a comment:
//
//   [coordinates]   name role                     role: shear length twist side-twist other
//   [constraints]   relation label modular|exact re im : name coef name coef ...
//                   free name name ...
//   [defs]          name = expr
//   [edges]         name expr                     jump read from tail to head
//   [vertices]      name : h h h ...              counterclockwise, cilium before the first
//
// Half-edges are written edge+ (tail) and edge- (head). Expressions:
//   A  B  I  S(coord)  T(coord)  inv(e)  lowC(e)  lowL(e)  $def
//   M(re:im, re:im, re:im, re:im)  e * e  (e)
struct GraphDocument {
    AdmissiblePair pair;
    CoordinateSystem cs;
};

std::string serialize(const AdmissiblePair& p, const CoordinateSystem& cs);
GraphDocument parse_graph(const std::string& text);

// Surface documents build a graph instead of listing one:
//
//   [surface]   genus g
//               piece name one-vertex g | pants | two-vertex-torus | stellar g
//               contour name piece:vertex piece:vertex
//   [trinion-graph]
//               trinions n
//               edge name trinion:slot trinion:slot      (1-based trinions, 0-based slots)
SurfaceSpec parse_surface_spec(const std::string& text);
TrinionGraph parse_trinion_graph(const std::string& text);

// Dispatches on the first section header.
GraphDocument load_document(const std::string& text);

}  // namespace gf
