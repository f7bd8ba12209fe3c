#include "grassbs/matching.hpp"

#include <limits>
#include <queue>

namespace grassbs {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
    int nl, nr;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> left_match, right_match, dist;

    HopcroftKarp(int nl_, int nr_, const std::vector<std::vector<int>>& adj_)
        : nl(nl_), nr(nr_), adj(adj_),
          left_match(static_cast<std::size_t>(nl_), -1),
          right_match(static_cast<std::size_t>(nr_), -1),
          dist(static_cast<std::size_t>(nl_), kInf) {}

    bool bfs() {
        std::queue<int> queue;
        for (int u = 0; u < nl; ++u) {
            if (left_match[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = 0;
                queue.push(u);
            } else {
                dist[static_cast<std::size_t>(u)] = kInf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                int w = right_match[static_cast<std::size_t>(v)];
                if (w < 0) {
                    found = true;
                } else if (dist[static_cast<std::size_t>(w)] == kInf) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            int w = right_match[static_cast<std::size_t>(v)];
            if (w < 0 || (dist[static_cast<std::size_t>(w)] ==
                              dist[static_cast<std::size_t>(u)] + 1 &&
                          dfs(w))) {
                left_match[static_cast<std::size_t>(u)] = v;
                right_match[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist[static_cast<std::size_t>(u)] = kInf;
        return false;
    }
};

}  // namespace

BipartiteMatching max_bipartite_matching(int nl, int nr,
                                         const std::vector<std::vector<int>>& adj) {
    HopcroftKarp hk(nl, nr, adj);
    int size = 0;
    while (hk.bfs())
        for (int u = 0; u < nl; ++u)
            if (hk.left_match[static_cast<std::size_t>(u)] < 0 && hk.dfs(u)) ++size;
    return {std::move(hk.left_match), std::move(hk.right_match), size};
}

std::vector<int> alternating_reachable_left(int nl, int /*nr*/,
                                            const std::vector<std::vector<int>>& adj,
                                            const BipartiteMatching& matching) {
    std::vector<bool> seen_left(static_cast<std::size_t>(nl), false);
    std::queue<int> queue;
    for (int u = 0; u < nl; ++u)
        if (matching.left_match[static_cast<std::size_t>(u)] < 0) {
            seen_left[static_cast<std::size_t>(u)] = true;
            queue.push(u);
        }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            int w = matching.right_match[static_cast<std::size_t>(v)];
            if (w >= 0 && !seen_left[static_cast<std::size_t>(w)]) {
                seen_left[static_cast<std::size_t>(w)] = true;
                queue.push(w);
            }
        }
    }
    std::vector<int> out;
    for (int u = 0; u < nl; ++u)
        if (seen_left[static_cast<std::size_t>(u)]) out.push_back(u);
    return out;
}

}  // namespace grassbs
