#pragma once

// The tree + short-paths decomposition: BFS tree, dual cotree, subdivision
// counts k_e, even subdivision H, and the admissible extension P.

#include <map>
#include <vector>

#include "rayforge/exact.hpp"
#include "rayforge/planar.hpp"

namespace rayforge {

// Spanning tree of the dual on the duals of non-tree edges, rooted at the
// outer face.
struct Cotree {
    int root_face = -1;
    std::vector<UndirectedEdge> cedges;               // sorted
    std::map<int, int> parent_face;                   // face -> parent (root absent)
    std::map<int, UndirectedEdge> entering_edge;      // face -> C-edge from its parent
    std::map<int, std::vector<int>> children;         // face -> child faces
};

Cotree cotree(const EmbeddedGraph& g, const BfsTree& b);

struct SubdivisionPlan {
    std::map<UndirectedEdge, long> ke;            // every k_e even, >= 4
    std::map<UndirectedEdge, int> endpoint_level; // level in H of P_e's endpoints
};

// Bottom-up assignment.  The endpoint level l(e) of P_e must strictly exceed
// l(e') of every cotree descendant e' and the BFS level of every vertex
// strictly inside e's fundamental cycle; the classic rule (4 on cotree
// leaves, 2 + max descendant elsewhere) is kept as a floor.
SubdivisionPlan assign_ke(const EmbeddedGraph& g, const BfsTree& b, const Cotree& ct);

struct VertexProvenance {
    bool original = true;
    UndirectedEdge edge{};  // for subdivision vertices: the G-edge
    long index = 0;         // 1..k_e along the path from min(edge) to max(edge)
};

struct SubdividedGraph {
    EmbeddedGraph h;
    VertexId root;
    std::map<UndirectedEdge, std::vector<VertexId>> qpaths;  // e -> [u, x1..xk, v]
    std::map<VertexId, int> hlevel;                          // BFS levels in H from root
    std::map<VertexId, VertexProvenance> provenance;
};

SubdividedGraph subdivide(const EmbeddedGraph& g, const BfsTree& b,
                          const SubdivisionPlan& plan);

// For each e in C, the centered 3- or 4-vertex subpath of Q_e whose endpoints
// are equidistant from the root in H.
std::vector<std::vector<VertexId>> extract_extension(const SubdividedGraph& h);

struct Decomposition {
    OrderedTree T;
    std::vector<std::vector<VertexId>> paths;  // P, in sorted C-edge order
    SubdividedGraph H;
    SubdivisionPlan plan;
    long offset = 0;  // sum k_e / 2
};

// Full pipeline: bfs_tree, cotree, assign_ke, subdivide, extract_extension,
// T = H - P (isolated vertices removed) ordered by natural_order with
// r = tail of the designated outer edge and rs = that edge.  Throws
// AdmissibilityFailed when the admissibility check does not pass.
Decomposition decompose(const EmbeddedGraph& g);

} // namespace rayforge
