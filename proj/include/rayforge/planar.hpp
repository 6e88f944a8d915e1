#pragma once

// Embedded planar graphs: rotation systems, face traversal, duals, BFS trees,
// the natural linear order tau, and admissibility checking.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rayforge/errors.hpp"

namespace rayforge {

using VertexId = int;
using DirectedEdge = std::pair<VertexId, VertexId>;
using UndirectedEdge = std::pair<VertexId, VertexId>;  // always (min,max)

inline UndirectedEdge undirected(VertexId u, VertexId v) {
    return u < v ? UndirectedEdge{u, v} : UndirectedEdge{v, u};
}

struct RawEmbedding {
    // Per-vertex clockwise list of neighbors.
    std::map<VertexId, std::vector<VertexId>> rotation;
    // One directed edge on the boundary of the designated outer face.
    DirectedEdge outer_edge;
};

struct Face {
    std::vector<DirectedEdge> boundary;  // closed under the traversal rule
};

// A validated combinatorial embedding.  Faces are traversed with
// next(u->v) = (v, clockwise-successor of u at v); the face lies to the left
// of each directed edge under counterclockwise traversal.
class EmbeddedGraph {
  public:
    // validate_embedding: checks simplicity, connectivity, the Euler formula
    // for the face set induced by the rotation system, and the outer edge.
    static EmbeddedGraph validate(RawEmbedding raw);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<VertexId>& neighbors(VertexId v) const;
    bool has_vertex(VertexId v) const { return rotation_.count(v) != 0; }
    bool has_edge(VertexId u, VertexId v) const;
    VertexId rotation_successor(VertexId v, VertexId u) const;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::vector<UndirectedEdge> edges() const;  // sorted

    const std::vector<Face>& faces() const { return faces_; }
    int outer_face() const { return outer_face_; }
    int face_left_of(DirectedEdge e) const;
    DirectedEdge outer_edge() const { return outer_edge_; }

    const RawEmbedding& raw() const { return raw_; }

  private:
    EmbeddedGraph() = default;

    RawEmbedding raw_;
    std::map<VertexId, std::vector<VertexId>> rotation_;
    std::vector<VertexId> vertices_;
    std::size_t edge_count_ = 0;
    std::vector<Face> faces_;
    std::map<DirectedEdge, int> face_of_;
    int outer_face_ = -1;
    DirectedEdge outer_edge_;
};

// Dual multigraph: one vertex per face, one edge per primal edge joining the
// faces on its two sides.  The primal edge is the bijection e <-> e*.
struct DualGraph {
    int face_count = 0;
    struct DualEdge {
        int f1, f2;
        UndirectedEdge primal;
    };
    std::vector<DualEdge> edges;  // in sorted primal-edge order
};

DualGraph dual_graph(const EmbeddedGraph& g);

struct BfsTree {
    VertexId root;
    std::map<VertexId, int> level;
    std::map<VertexId, VertexId> parent;  // root absent
    std::vector<VertexId> order;          // discovery order
    std::set<UndirectedEdge> edges;
};

// BFS from r; neighbors explored in rotation order starting from the edge
// toward the parent (the designated outer edge at the root), so runs are
// deterministic.
BfsTree bfs_tree(const EmbeddedGraph& g, VertexId r);

// A tree with the natural linear order tau = tau(pi_T, r, rs).
struct OrderedTree {
    EmbeddedGraph tree;
    VertexId root;
    DirectedEdge root_edge;
    std::vector<VertexId> tau;
    std::map<VertexId, int> position;      // vertex -> index in tau
    std::map<VertexId, int> level;
    std::map<VertexId, VertexId> parent;   // root absent
    int depth = 0;

    bool is_leaf(VertexId v) const { return tree.neighbors(v).size() == 1; }
    std::optional<VertexId> successor(VertexId v) const;
    std::optional<VertexId> predecessor(VertexId v) const;
};

OrderedTree natural_order(const EmbeddedGraph& tree, VertexId r, DirectedEdge rs);

struct AdmissibilityViolation {
    std::size_t path_index;
    std::string kind;    // "length", "disjoint", "leaf", "level", "consecutive", "internal"
    std::string detail;
};

struct AdmissibilityReport {
    bool pass = true;
    std::vector<AdmissibilityViolation> violations;
};

// Checks the four admissible-extension conditions of paths against (T, tau).
AdmissibilityReport check_admissible(const OrderedTree& T,
                                     const std::vector<std::vector<VertexId>>& paths);

} // namespace rayforge
