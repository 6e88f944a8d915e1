#pragma once

// Exact brute-force solvers used as ground truth: maximum independent set /
// maximum clique by branch and bound with degree reductions, plus the even
// subdivision lemma check.

#include <map>
#include <utility>
#include <vector>

#include "rayforge/errors.hpp"

namespace rayforge {

// Abstract simple graph on vertices 0..n-1.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    SimpleGraph complement() const;
    bool adjacent(int u, int v) const;
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
};

struct SolveResult {
    long optimum = 0;
    std::vector<int> witness;  // a valid optimal set, sorted
    long nodes = 0;            // branch nodes explored
    double seconds = 0;
};

struct SolveOptions {
    int cap_sparse = 200;   // |E| <= 2|V|
    int cap_general = 64;
};

SolveResult max_independent_set(const SimpleGraph& g, const SolveOptions& opts = {});
SolveResult max_clique(const SimpleGraph& g, const SolveOptions& opts = {});

// Each edge e replaced by a path with counts[e] internal vertices; counts
// must be even (>= 0).
SimpleGraph even_subdivide(const SimpleGraph& g,
                           const std::map<std::pair<int, int>, long>& counts);

// alpha(even_subdivide(g, counts)) == alpha(g) + sum(counts)/2, both sides by
// max_independent_set.
bool check_even_subdivision_lemma(const SimpleGraph& g,
                                  const std::map<std::pair<int, int>, long>& counts,
                                  const SolveOptions& opts = {});

} // namespace rayforge
