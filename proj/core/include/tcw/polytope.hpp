#pragma once

#include <vector>

#include "tcw/face_vectors.hpp"
#include "tcw/fan.hpp"
#include "tcw/numeric.hpp"

namespace tcw {

/// H-representation lattice polytope: the solution set of
/// <normal_k, x> >= -offset_k over all facets k, with primitive inward
/// normals. Must be bounded and full-dimensional.
struct PolytopeH {
    struct Facet {
        IntVec normal;
        Int offset;
    };
    int dim;
    std::vector<Facet> facets;
};

struct Vertex {
    RatVec point;
    std::vector<int> facets;  // sorted indices of all incident facets
};

/// All vertices by exhaustive enumeration of n-subsets of facets; each vertex
/// carries its full incidence set. Throws unbounded / degenerate.
std::vector<Vertex> vertices(const PolytopeH& p);

/// Exactly n facets meet at every vertex.
bool is_simple(const PolytopeH& p);

/// Simple, and at every vertex the primitive edge directions form a basis of
/// the integer lattice.
bool is_smooth(const PolytopeH& p);

/// Normal fan: rays are the inward facet normals; maximal cones collect the
/// facets incident to each vertex. Throws not_simple.
Fan normal_fan(const PolytopeH& p);

/// h-vector by vertex index counts: orient each edge toward larger <nu, .>;
/// h_{n-q} = number of vertices with in-degree q. Throws nu_degenerate when
/// nu is perpendicular to some edge.
HVector h_vector_by_index(const PolytopeH& p, const IntVec& nu);

/// Deterministic probe (1, M, M^2, ...) with M = 1 + max |entry| over all
/// primitive edge vectors; never perpendicular to an edge.
IntVec default_index_probe(const PolytopeH& p);

/// Edges as pairs of vertex indices into vertices(p), with primitive
/// direction vectors (oriented from first to second endpoint).
struct Edge {
    int tail;
    int head;
    IntVec direction;
};
std::vector<Edge> polytope_edges(const PolytopeH& p, const std::vector<Vertex>& verts);

}  // namespace tcw
