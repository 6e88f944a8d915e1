#include "rayforge/decompose.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace rayforge {

Cotree cotree(const EmbeddedGraph& g, const BfsTree& b) {
    Cotree ct;
    ct.root_face = g.outer_face();
    for (const UndirectedEdge& e : g.edges())
        if (!b.edges.count(e)) ct.cedges.push_back(e);

    std::map<int, std::vector<std::pair<int, UndirectedEdge>>> adj;
    for (const UndirectedEdge& e : ct.cedges) {
        int f1 = g.face_left_of({e.first, e.second});
        int f2 = g.face_left_of({e.second, e.first});
        adj[f1].push_back({f2, e});
        adj[f2].push_back({f1, e});
    }
    std::deque<int> dq{ct.root_face};
    std::set<int> seen{ct.root_face};
    while (!dq.empty()) {
        int f = dq.front();
        dq.pop_front();
        for (const auto& [f2, e] : adj[f]) {
            if (seen.insert(f2).second) {
                ct.parent_face[f2] = f;
                ct.entering_edge[f2] = e;
                ct.children[f].push_back(f2);
                dq.push_back(f2);
            }
        }
    }
    // Interdigitating-trees duality guarantees C* spans the dual.
    if (seen.size() != g.faces().size())
        throw Error("cotree does not span the dual graph");
    return ct;
}

namespace {

int edge_min_level(const BfsTree& b, const UndirectedEdge& e) {
    return std::min(b.level.at(e.first), b.level.at(e.second));
}

bool edge_same_level(const BfsTree& b, const UndirectedEdge& e) {
    return b.level.at(e.first) == b.level.at(e.second);
}

} // namespace

SubdivisionPlan assign_ke(const EmbeddedGraph& g, const BfsTree& b, const Cotree& ct) {
    SubdivisionPlan plan;
    // faces incident to each vertex
    std::map<VertexId, std::set<int>> vfaces;
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f)
        for (const DirectedEdge& de : g.faces()[f].boundary) vfaces[de.first].insert(f);

    std::function<std::set<int>(int)> subtree_faces = [&](int f) {
        std::set<int> acc{f};
        auto it = ct.children.find(f);
        if (it != ct.children.end())
            for (int c : it->second) {
                std::set<int> sub = subtree_faces(c);
                acc.insert(sub.begin(), sub.end());
            }
        return acc;
    };

    // post-order over cotree: returns max endpoint level in the subtree
    std::function<int(int)> rec = [&](int f) -> int {
        int deepest = 0;
        auto it = ct.children.find(f);
        if (it != ct.children.end())
            for (int c : it->second) deepest = std::max(deepest, rec(c));
        if (f == ct.root_face) return deepest;

        const UndirectedEdge e = ct.entering_edge.at(f);
        std::set<int> sf = subtree_faces(f);
        int need = deepest;
        for (VertexId v : g.vertices())
            if (vfaces[v].size() && std::includes(sf.begin(), sf.end(), vfaces[v].begin(),
                                                  vfaces[v].end()))
                need = std::max(need, b.level.at(v));

        const bool same = edge_same_level(b, e);
        const int L = edge_min_level(b, e);
        const int lmin = same ? L + 1 : L + 2;
        int l = std::max(lmin, need + 1);
        long k = same ? 2L * (l - L) + 2 : 2L * (l - L);
        // classic floor: 4 on cotree leaves, child + 2 above
        long kfloor = 4;
        if (it != ct.children.end())
            for (int c : it->second)
                kfloor = std::max(kfloor, plan.ke.at(ct.entering_edge.at(c)) + 2);
        if (kfloor > k) {
            k = kfloor % 2 == 0 ? kfloor : kfloor + 1;
            l = same ? L + static_cast<int>((k - 2) / 2) : L + static_cast<int>(k / 2);
        }
        plan.ke[e] = k;
        plan.endpoint_level[e] = l;
        return std::max(deepest, l);
    };
    rec(ct.root_face);
    return plan;
}

SubdividedGraph subdivide(const EmbeddedGraph& g, const BfsTree& b,
                          const SubdivisionPlan& plan) {
    SubdividedGraph out;
    out.root = b.root;
    RawEmbedding raw = g.raw();
    for (VertexId v : g.vertices()) out.provenance[v] = VertexProvenance{};

    VertexId next = g.vertices().empty() ? 0 : g.vertices().back() + 1;
    for (const auto& [e, k] : plan.ke) {
        auto [u, v] = e;  // u < v; internal vertices indexed 1..k from u
        std::vector<VertexId> xs;
        for (long i = 0; i < k; ++i) xs.push_back(next++);
        std::vector<VertexId> q{u};
        q.insert(q.end(), xs.begin(), xs.end());
        q.push_back(v);
        out.qpaths[e] = q;
        for (long i = 0; i < k; ++i)
            out.provenance[xs[i]] = VertexProvenance{false, e, i + 1};

        auto& ru = raw.rotation.at(u);
        *std::find(ru.begin(), ru.end(), v) = xs.front();
        auto& rv = raw.rotation.at(v);
        *std::find(rv.begin(), rv.end(), u) = xs.back();
        for (long i = 0; i < k; ++i) {
            VertexId a = i == 0 ? u : xs[i - 1];
            VertexId c = i == k - 1 ? v : xs[i + 1];
            raw.rotation[xs[i]] = {a, c};
        }
    }
    out.h = EmbeddedGraph::validate(std::move(raw));
    BfsTree hb = bfs_tree(out.h, out.root);
    out.hlevel = hb.level;
    return out;
}

std::vector<std::vector<VertexId>> extract_extension(const SubdividedGraph& h) {
    std::vector<std::vector<VertexId>> paths;
    for (const auto& [e, q] : h.qpaths) {
        VertexId u = q.front(), v = q.back();
        const long k = static_cast<long>(q.size()) - 2;
        std::vector<VertexId> pe;
        if (h.hlevel.at(u) == h.hlevel.at(v)) {
            long j = (k - 2) / 2;  // 1-indexed position of the first endpoint
            pe.assign(q.begin() + j, q.begin() + j + 4);
        } else {
            // count from the lower-level end
            bool u_low = h.hlevel.at(u) < h.hlevel.at(v);
            long j = k / 2;
            if (u_low)
                pe.assign(q.begin() + j, q.begin() + j + 3);
            else
                pe.assign(q.end() - j - 3, q.end() - j);
        }
        if (h.hlevel.at(pe.front()) != h.hlevel.at(pe.back())) {
            std::ostringstream os;
            os << "P_e endpoints for edge (" << e.first << "," << e.second
               << ") are not equidistant from the root";
            throw NoEquidistantSubpath(os.str());
        }
        paths.push_back(std::move(pe));
    }
    return paths;
}

Decomposition decompose(const EmbeddedGraph& g) {
    Decomposition d;
    const VertexId r = g.outer_edge().first;
    const BfsTree b = bfs_tree(g, r);
    const Cotree ct = cotree(g, b);
    d.plan = assign_ke(g, b, ct);
    d.H = subdivide(g, b, d.plan);
    d.paths = extract_extension(d.H);
    for (const auto& [e, k] : d.plan.ke) d.offset += k / 2;

    // T = H - P, after removing isolated vertices
    RawEmbedding raw = d.H.h.raw();
    for (const auto& pe : d.paths) {
        for (std::size_t i = 0; i + 1 < pe.size(); ++i) {
            auto& ra = raw.rotation.at(pe[i]);
            ra.erase(std::find(ra.begin(), ra.end(), pe[i + 1]));
            auto& rb = raw.rotation.at(pe[i + 1]);
            rb.erase(std::find(rb.begin(), rb.end(), pe[i]));
        }
    }
    for (auto it = raw.rotation.begin(); it != raw.rotation.end();)
        it = it->second.empty() ? raw.rotation.erase(it) : std::next(it);
    raw.outer_edge = g.outer_edge();
    EmbeddedGraph tree = EmbeddedGraph::validate(std::move(raw));
    d.T = natural_order(tree, r, g.outer_edge());

    AdmissibilityReport rep = check_admissible(d.T, d.paths);
    if (!rep.pass) {
        std::ostringstream os;
        os << "extension not admissible:";
        for (const auto& v : rep.violations)
            os << " [path " << v.path_index << " " << v.kind << ": " << v.detail << "]";
        throw AdmissibilityFailed(os.str());
    }
    return d;
}

} // namespace rayforge
