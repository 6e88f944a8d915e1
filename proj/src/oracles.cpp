#include "rayforge/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>

namespace rayforge {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw Error("loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw Error("edge endpoint out of range");
        if (!seen.insert({u, v}).second) continue;
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& ns : g.adj) std::sort(ns.begin(), ns.end());
    return g;
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!adjacent(u, v)) {
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
    return g;
}

bool SimpleGraph::adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t s = 0;
    for (const auto& ns : adj) s += ns.size();
    return s / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.push_back({u, v});
    return out;
}

namespace {

// Mutable instance for the solver; vertices are created by folds, so ids can
// exceed the original n.
struct Instance {
    std::map<int, std::set<int>> adj;
    int next_id;

    explicit Instance(const SimpleGraph& g) : next_id(g.n) {
        for (int v = 0; v < g.n; ++v) adj[v] = std::set<int>(g.adj[v].begin(), g.adj[v].end());
    }

    void remove_vertex(int v) {
        for (int u : adj.at(v)) adj.at(u).erase(v);
        adj.erase(v);
    }
};

struct TakeRecord { int v; };
struct FoldRecord { int v, u, w, z; };

struct Reduction {
    bool is_fold;
    TakeRecord take;
    FoldRecord fold;
};

struct Solver {
    long best_known = 0;
    long nodes = 0;

    // Greedy clique cover upper bound on alpha of the remaining instance.
    long upper_bound(const Instance& in) const {
        std::vector<std::vector<int>> cliques;
        for (const auto& [v, ns] : in.adj) {
            bool placed = false;
            for (auto& c : cliques) {
                bool all = true;
                for (int u : c)
                    if (!ns.count(u)) { all = false; break; }
                if (all) {
                    c.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) cliques.push_back({v});
        }
        return static_cast<long>(cliques.size());
    }

    // Returns an optimal independent set of `in` (ids in `in`'s space), or
    // nullopt when the subtree was pruned against best_known.
    std::optional<std::vector<int>> solve(Instance in, long taken_so_far) {
        ++nodes;
        std::vector<Reduction> trail;
        // exhaustive low-degree reductions
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = in.adj.begin(); it != in.adj.end(); ++it) {
                int v = it->first;
                std::size_t deg = it->second.size();
                if (deg == 0) {
                    trail.push_back({false, {v}, {}});
                    in.remove_vertex(v);
                    changed = true;
                    break;
                }
                if (deg == 1) {
                    int u = *it->second.begin();
                    trail.push_back({false, {v}, {}});
                    in.remove_vertex(u);
                    in.remove_vertex(v);
                    changed = true;
                    break;
                }
                if (deg == 2) {
                    auto nit = it->second.begin();
                    int u = *nit++;
                    int w = *nit;
                    if (in.adj.at(u).count(w)) {
                        // triangle: v dominates
                        trail.push_back({false, {v}, {}});
                        in.remove_vertex(u);
                        in.remove_vertex(w);
                        in.remove_vertex(v);
                    } else {
                        // fold u-v-w into z
                        int z = in.next_id++;
                        std::set<int> nz;
                        for (int x : in.adj.at(u)) if (x != v) nz.insert(x);
                        for (int x : in.adj.at(w)) if (x != v) nz.insert(x);
                        in.remove_vertex(u);
                        in.remove_vertex(v);
                        in.remove_vertex(w);
                        in.adj[z] = nz;
                        for (int x : nz) in.adj.at(x).insert(z);
                        trail.push_back({true, {}, {v, u, w, z}});
                    }
                    changed = true;
                    break;
                }
            }
        }
        const long gained = static_cast<long>(trail.size());  // one pick per reduction

        std::vector<int> sub;
        if (!in.adj.empty()) {
            if (taken_so_far + gained + upper_bound(in) <= best_known) return std::nullopt;
            // branch on the highest-degree vertex, lexicographic ties
            int bv = -1;
            std::size_t bd = 0;
            for (const auto& [v, ns] : in.adj)
                if (ns.size() > bd) { bd = ns.size(); bv = v; }
            // include bv
            Instance inc = in;
            std::vector<int> closed(inc.adj.at(bv).begin(), inc.adj.at(bv).end());
            for (int u : closed) inc.remove_vertex(u);
            inc.remove_vertex(bv);
            auto with = solve(std::move(inc), taken_so_far + gained + 1);
            if (with) {
                with->push_back(bv);
                best_known = std::max(best_known,
                                      taken_so_far + gained + static_cast<long>(with->size()));
            }
            // exclude bv
            Instance exc = in;
            exc.remove_vertex(bv);
            auto without = solve(std::move(exc), taken_so_far + gained);
            if (without)
                best_known = std::max(best_known, taken_so_far + gained +
                                                      static_cast<long>(without->size()));
            if (!with && !without) return std::nullopt;
            if (!with)
                sub = std::move(*without);
            else if (!without)
                sub = std::move(*with);
            else
                sub = with->size() >= without->size() ? std::move(*with) : std::move(*without);
        }
        // replay reductions backwards
        std::set<int> chosen(sub.begin(), sub.end());
        for (auto r = trail.rbegin(); r != trail.rend(); ++r) {
            if (r->is_fold) {
                if (chosen.count(r->fold.z)) {
                    chosen.erase(r->fold.z);
                    chosen.insert(r->fold.u);
                    chosen.insert(r->fold.w);
                } else {
                    chosen.insert(r->fold.v);
                }
            } else {
                chosen.insert(r->take.v);
            }
        }
        return std::vector<int>(chosen.begin(), chosen.end());
    }
};

void check_witness_independent(const SimpleGraph& g, const std::vector<int>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (g.adjacent(w[i], w[j])) throw Error("internal: witness not independent");
}

void enforce_cap(const SimpleGraph& g, const SolveOptions& opts) {
    bool sparse = g.edge_count() <= 2 * static_cast<std::size_t>(g.n);
    int cap = sparse ? opts.cap_sparse : opts.cap_general;
    if (g.n > cap)
        throw TooLarge("instance with " + std::to_string(g.n) + " vertices exceeds cap " +
                       std::to_string(cap));
}

} // namespace

SolveResult max_independent_set(const SimpleGraph& g, const SolveOptions& opts) {
    enforce_cap(g, opts);
    auto t0 = std::chrono::steady_clock::now();
    Solver s;
    std::vector<int> w = *s.solve(Instance(g), 0);
    check_witness_independent(g, w);
    SolveResult r;
    r.optimum = static_cast<long>(w.size());
    r.witness = std::move(w);
    r.nodes = s.nodes;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

SolveResult max_clique(const SimpleGraph& g, const SolveOptions& opts) {
    SimpleGraph c = g.complement();
    enforce_cap(c, opts);
    auto t0 = std::chrono::steady_clock::now();
    Solver s;
    std::vector<int> w = *s.solve(Instance(c), 0);
    check_witness_independent(c, w);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (!g.adjacent(w[i], w[j])) throw Error("internal: witness not a clique");
    SolveResult r;
    r.optimum = static_cast<long>(w.size());
    r.witness = std::move(w);
    r.nodes = s.nodes;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

SimpleGraph even_subdivide(const SimpleGraph& g,
                           const std::map<std::pair<int, int>, long>& counts) {
    for (const auto& [e, c] : counts)
        if (c < 0 || c % 2 != 0)
            throw OddCount("subdivision count for (" + std::to_string(e.first) + "," +
                           std::to_string(e.second) + ") must be even and >= 0");
    std::vector<std::pair<int, int>> edges;
    int next = g.n;
    for (auto [u, v] : g.edges()) {
        long c = 0;
        if (auto it = counts.find({u, v}); it != counts.end()) c = it->second;
        if (c == 0) {
            edges.push_back({u, v});
            continue;
        }
        int prev = u;
        for (long i = 0; i < c; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, v});
    }
    return SimpleGraph::from_edges(next, edges);
}

bool check_even_subdivision_lemma(const SimpleGraph& g,
                                  const std::map<std::pair<int, int>, long>& counts,
                                  const SolveOptions& opts) {
    SimpleGraph sub = even_subdivide(g, counts);
    long total = 0;
    for (const auto& [e, c] : counts) {
        if (!g.adjacent(e.first, e.second)) throw Error("count for a non-edge");
        total += c;
    }
    SolveResult a = max_independent_set(g, opts);
    SolveResult b = max_independent_set(sub, opts);
    return b.optimum == a.optimum + total / 2;
}

} // namespace rayforge
