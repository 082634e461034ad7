#include "gnb/matching.hpp"

#include <limits>
#include <queue>

namespace gnb {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

struct HopcroftKarp {
    const std::vector<std::vector<std::size_t>>& adj;
    BipartiteMatching m;
    std::vector<std::size_t> dist;

    HopcroftKarp(const std::vector<std::vector<std::size_t>>& a, std::size_t right_count) : adj(a) {
        m.left_mate.assign(adj.size(), kUnmatched);
        m.right_mate.assign(right_count, kUnmatched);
        dist.assign(adj.size(), kInf);
    }

    bool bfs() {
        std::queue<std::size_t> q;
        for (std::size_t u = 0; u < adj.size(); ++u) {
            if (m.left_mate[u] == kUnmatched) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : adj[u]) {
                auto w = m.right_mate[v];
                if (w == kUnmatched) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t u) {
        for (auto v : adj[u]) {
            auto w = m.right_mate[v];
            if (w == kUnmatched || (dist[w] == dist[u] + 1 && dfs(w))) {
                m.left_mate[u] = v;
                m.right_mate[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    }

    void run() {
        while (bfs())
            for (std::size_t u = 0; u < adj.size(); ++u)
                if (m.left_mate[u] == kUnmatched && dfs(u)) ++m.size;
    }
};

}  // namespace

BipartiteMatching hopcroft_karp(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_count) {
    HopcroftKarp hk(adj, right_count);
    hk.run();
    return std::move(hk.m);
}

}  // namespace gnb
