#include "rayforge/planar.hpp"

#include <algorithm>
#include <deque>

namespace rayforge {

EmbeddedGraph EmbeddedGraph::validate(RawEmbedding raw) {
    EmbeddedGraph g;
    g.raw_ = raw;
    g.rotation_ = std::move(raw.rotation);
    if (g.rotation_.empty()) throw NotConnected("empty graph");

    std::size_t incidences = 0;
    for (const auto& [v, ns] : g.rotation_) {
        g.vertices_.push_back(v);
        std::set<VertexId> seen;
        for (VertexId u : ns) {
            if (u == v) throw NotSimple("loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second)
                throw NotSimple("parallel edge " + std::to_string(v) + "-" + std::to_string(u));
            auto it = g.rotation_.find(u);
            if (it == g.rotation_.end() ||
                std::find(it->second.begin(), it->second.end(), v) == it->second.end())
                throw NotSimple("one-sided incidence " + std::to_string(v) + "-" +
                                std::to_string(u));
        }
        incidences += ns.size();
    }
    g.edge_count_ = incidences / 2;

    // connectivity
    {
        std::set<VertexId> seen{g.vertices_.front()};
        std::deque<VertexId> dq{g.vertices_.front()};
        while (!dq.empty()) {
            VertexId v = dq.front();
            dq.pop_front();
            for (VertexId u : g.rotation_.at(v))
                if (seen.insert(u).second) dq.push_back(u);
        }
        if (seen.size() != g.vertices_.size()) throw NotConnected("graph not connected");
    }

    // face traversal: next(u->v) = (v, clockwise-successor of u at v)
    for (VertexId v : g.vertices_) {
        for (VertexId w : g.rotation_.at(v)) {
            DirectedEdge start{v, w};
            if (g.face_of_.count(start)) continue;
            Face f;
            DirectedEdge e = start;
            do {
                g.face_of_[e] = static_cast<int>(g.faces_.size());
                f.boundary.push_back(e);
                e = DirectedEdge{e.second, g.rotation_successor(e.second, e.first)};
            } while (e != start);
            g.faces_.push_back(std::move(f));
        }
    }
    long euler = static_cast<long>(g.vertices_.size()) - static_cast<long>(g.edge_count_) +
                 static_cast<long>(g.faces_.size());
    if (euler != 2)
        throw NotPlanarEmbedding("Euler count " + std::to_string(euler) + " != 2");

    g.outer_edge_ = g.raw_.outer_edge;
    auto it = g.face_of_.find(g.outer_edge_);
    if (it == g.face_of_.end())
        throw BadOuterEdge("designated outer edge is not an edge of the graph");
    g.outer_face_ = it->second;
    return g;
}

const std::vector<VertexId>& EmbeddedGraph::neighbors(VertexId v) const {
    auto it = rotation_.find(v);
    if (it == rotation_.end()) throw Error("unknown vertex " + std::to_string(v));
    return it->second;
}

bool EmbeddedGraph::has_edge(VertexId u, VertexId v) const {
    auto it = rotation_.find(u);
    if (it == rotation_.end()) return false;
    return std::find(it->second.begin(), it->second.end(), v) != it->second.end();
}

VertexId EmbeddedGraph::rotation_successor(VertexId v, VertexId u) const {
    const auto& ns = neighbors(v);
    auto it = std::find(ns.begin(), ns.end(), u);
    if (it == ns.end())
        throw Error("edge " + std::to_string(v) + "-" + std::to_string(u) + " not present");
    ++it;
    return it == ns.end() ? ns.front() : *it;
}

std::vector<UndirectedEdge> EmbeddedGraph::edges() const {
    std::vector<UndirectedEdge> out;
    for (const auto& [v, ns] : rotation_)
        for (VertexId u : ns)
            if (v < u) out.push_back({v, u});
    std::sort(out.begin(), out.end());
    return out;
}

int EmbeddedGraph::face_left_of(DirectedEdge e) const {
    auto it = face_of_.find(e);
    if (it == face_of_.end())
        throw Error("directed edge not in embedding");
    return it->second;
}

DualGraph dual_graph(const EmbeddedGraph& g) {
    DualGraph d;
    d.face_count = static_cast<int>(g.faces().size());
    for (const UndirectedEdge& e : g.edges()) {
        int f1 = g.face_left_of({e.first, e.second});
        int f2 = g.face_left_of({e.second, e.first});
        d.edges.push_back({f1, f2, e});
    }
    return d;
}

BfsTree bfs_tree(const EmbeddedGraph& g, VertexId r) {
    if (!g.has_vertex(r)) throw Error("bfs root not a vertex");
    BfsTree t;
    t.root = r;
    t.level[r] = 0;
    t.order.push_back(r);
    std::deque<VertexId> dq{r};
    while (!dq.empty()) {
        VertexId v = dq.front();
        dq.pop_front();
        const auto& ns = g.neighbors(v);
        // start after the parent edge; at the root, start at the designated
        // outer edge head when applicable
        std::size_t i0 = 0;
        bool skip_first = false;
        if (auto it = t.parent.find(v); it != t.parent.end()) {
            i0 = std::find(ns.begin(), ns.end(), it->second) - ns.begin();
            skip_first = true;
        } else if (v == g.outer_edge().first) {
            i0 = std::find(ns.begin(), ns.end(), g.outer_edge().second) - ns.begin();
            if (i0 == ns.size()) i0 = 0;
        }
        for (std::size_t j = skip_first ? 1 : 0; j < ns.size() + (skip_first ? 1 : 0); ++j) {
            VertexId u = ns[(i0 + j) % ns.size()];
            if (!t.level.count(u)) {
                t.level[u] = t.level[v] + 1;
                t.parent[u] = v;
                t.order.push_back(u);
                t.edges.insert(undirected(v, u));
                dq.push_back(u);
            }
        }
    }
    if (t.order.size() != g.vertex_count()) throw NotConnected("bfs did not span");
    return t;
}

std::optional<VertexId> OrderedTree::successor(VertexId v) const {
    std::size_t i = position.at(v);
    if (i + 1 >= tau.size()) return std::nullopt;
    return tau[i + 1];
}

std::optional<VertexId> OrderedTree::predecessor(VertexId v) const {
    std::size_t i = position.at(v);
    if (i == 0) return std::nullopt;
    return tau[i - 1];
}

OrderedTree natural_order(const EmbeddedGraph& tree, VertexId r, DirectedEdge rs) {
    if (rs.first != r || !tree.has_edge(rs.first, rs.second))
        throw EdgeNotIncident("rs must be an edge incident to r");
    OrderedTree t;
    t.tree = tree;
    t.root = r;
    t.root_edge = rs;
    t.tau.push_back(r);
    t.level[r] = 0;
    std::deque<VertexId> dq;

    // (i) s is the second vertex; the root's children follow pi_r clockwise
    // starting from rs.
    {
        const auto& ns = tree.neighbors(r);
        std::size_t i0 = std::find(ns.begin(), ns.end(), rs.second) - ns.begin();
        for (std::size_t j = 0; j < ns.size(); ++j) {
            VertexId u = ns[(i0 + j) % ns.size()];
            t.tau.push_back(u);
            t.level[u] = 1;
            t.parent[u] = r;
            dq.push_back(u);
        }
    }
    // (ii)+(iii): children of v in clockwise order pi_v, starting with the
    // successor of the parent edge.
    while (!dq.empty()) {
        VertexId v = dq.front();
        dq.pop_front();
        const auto& ns = tree.neighbors(v);
        std::size_t i0 = std::find(ns.begin(), ns.end(), t.parent.at(v)) - ns.begin();
        for (std::size_t j = 1; j <= ns.size(); ++j) {
            VertexId u = ns[(i0 + j) % ns.size()];
            if (u == t.parent.at(v)) continue;
            t.tau.push_back(u);
            t.level[u] = t.level.at(v) + 1;
            t.parent[u] = v;
            dq.push_back(u);
        }
    }
    if (t.tau.size() != tree.vertex_count()) throw Error("natural_order: input is not a tree");
    for (std::size_t i = 0; i < t.tau.size(); ++i) t.position[t.tau[i]] = static_cast<int>(i);
    for (const auto& [v, l] : t.level) t.depth = std::max(t.depth, l);
    return t;
}

AdmissibilityReport check_admissible(const OrderedTree& T,
                                     const std::vector<std::vector<VertexId>>& paths) {
    AdmissibilityReport rep;
    auto fail = [&](std::size_t i, const std::string& kind, const std::string& detail) {
        rep.pass = false;
        rep.violations.push_back({i, kind, detail});
    };
    std::set<VertexId> internal_seen;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        if (p.size() != 3 && p.size() != 4) {
            fail(i, "length", "path must have 3 or 4 vertices, has " + std::to_string(p.size()));
            continue;
        }
        VertexId u = p.front(), v = p.back();
        for (std::size_t j = 1; j + 1 < p.size(); ++j) {
            if (T.tree.has_vertex(p[j]))
                fail(i, "internal", "internal vertex " + std::to_string(p[j]) + " is in V(T)");
            if (!internal_seen.insert(p[j]).second)
                fail(i, "disjoint", "internal vertex " + std::to_string(p[j]) + " reused");
        }
        if (!T.tree.has_vertex(u) || !T.tree.has_vertex(v)) {
            fail(i, "leaf", "endpoint missing from T");
            continue;
        }
        if (!T.is_leaf(u) || !T.is_leaf(v)) fail(i, "leaf", "endpoints must be leaves of T");
        if (T.level.at(u) != T.level.at(v))
            fail(i, "level",
                 "endpoint levels " + std::to_string(T.level.at(u)) + " != " +
                     std::to_string(T.level.at(v)));
        if (std::abs(T.position.at(u) - T.position.at(v)) != 1)
            fail(i, "consecutive", "endpoints " + std::to_string(u) + "," + std::to_string(v) +
                                       " not consecutive in tau");
    }
    return rep;
}

} // namespace rayforge
