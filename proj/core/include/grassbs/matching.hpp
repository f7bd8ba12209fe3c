#pragma once

#include <vector>

namespace grassbs {

struct BipartiteMatching {
    std::vector<int> left_match;   // right index matched to each left vertex, or -1
    std::vector<int> right_match;  // left index matched to each right vertex, or -1
    int size = 0;
};

// Hopcroft-Karp maximum matching. Left vertices 0..nl-1, right 0..nr-1,
// adj[l] lists right neighbors. Deterministic for a fixed adjacency order.
BipartiteMatching max_bipartite_matching(int nl, int nr,
                                         const std::vector<std::vector<int>>& adj);

// Vertices on the chosen side reachable from its unmatched vertices by
// alternating paths (non-matching edge out, matching edge back). Under a
// maximum matching this is a Hall violator side: its neighborhood is smaller
// than itself whenever some vertex is unmatched.
std::vector<int> alternating_reachable_left(int nl, int nr,
                                            const std::vector<std::vector<int>>& adj,
                                            const BipartiteMatching& matching);

}  // namespace grassbs
