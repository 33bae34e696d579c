#ifndef STOR_CONNECTIVITY_HPP
#define STOR_CONNECTIVITY_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "stor/graph.hpp"

namespace stor {

inline int max_degree(const UndirectedGraph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); v++) d = std::max(d, g.degree(v));
    return d;
}

/// Longest shortest path; -1 when g is disconnected or empty.
inline int diameter(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return -1;
    int diam = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; s++) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    diam = std::max(diam, dist[w]);
                    reached++;
                    q.push(w);
                }
        }
        if (reached != n) return -1;
    }
    return diam;
}

/// Iteratively replaces x-y-z around each degree-2 vertex y by the edge xz
/// (dropping the result when x and z are already adjacent) and compacts the
/// vertex ids. The inverse of subdividing edges.
inline UndirectedGraph suppress_degree_two(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> gone(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; v++) {
            if (gone[v] || adj[v].size() != 2) continue;
            int a = *adj[v].begin(), b = *std::next(adj[v].begin());
            if (a == b) continue;
            adj[a].erase(v);
            adj[b].erase(v);
            adj[v].clear();
            gone[v] = 1;
            if (!adj[a].count(b)) {
                adj[a].insert(b);
                adj[b].insert(a);
            }
            changed = true;
        }
    }
    std::vector<int> remap(n, -1);
    int nn = 0;
    for (int v = 0; v < n; v++)
        if (!gone[v]) remap[v] = nn++;
    UndirectedGraph out(nn);
    for (int v = 0; v < n; v++) {
        if (gone[v]) continue;
        for (int w : adj[v])
            if (v < w) out.add_edge(remap[v], remap[w]);
    }
    return out;
}

namespace detail {

// unit-capacity vertex-disjoint-path count between u and v, stopping at `need`
inline int vertex_disjoint_paths(const UndirectedGraph& g, int u, int v, int need) {
    // split vertices: node 2x = in, 2x+1 = out; internal capacity 1
    const int n = g.vertex_count();
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> net(2 * n);
    auto add = [&](int a, int b, int cap) {
        net[a].push_back({b, cap, static_cast<int>(net[b].size())});
        net[b].push_back({a, 0, static_cast<int>(net[a].size()) - 1});
    };
    for (int x = 0; x < n; x++) add(2 * x, 2 * x + 1, x == u || x == v ? need : 1);
    for (const Edge& e : g.edges()) {
        add(2 * e.u + 1, 2 * e.v, need);
        add(2 * e.v + 1, 2 * e.u, need);
    }
    const int S = 2 * u + 1, T = 2 * v;
    int flow = 0;
    while (flow < need) {
        // BFS augmenting path
        std::vector<std::pair<int, int>> pre(2 * n, {-1, -1});
        std::queue<int> q;
        q.push(S);
        pre[S] = {S, -1};
        while (!q.empty() && pre[T].first < 0) {
            int x = q.front();
            q.pop();
            for (size_t i = 0; i < net[x].size(); i++) {
                const Arc& a = net[x][i];
                if (a.cap > 0 && pre[a.to].first < 0) {
                    pre[a.to] = {x, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (pre[T].first < 0) break;
        int x = T;
        while (x != S) {
            auto [px, pi] = pre[x];
            Arc& a = net[px][pi];
            a.cap--;
            net[x][a.rev].cap++;
            x = px;
        }
        flow++;
    }
    return flow;
}

} // namespace detail

/// Is the vertex connectivity of g at least k? Flow-based: fix a minimum
/// degree vertex v0, check v0 against all non-neighbors and all non-adjacent
/// pairs inside N(v0).
inline bool vertex_connectivity_at_least(const UndirectedGraph& g, int k) {
    const int n = g.vertex_count();
    if (k <= 0) return true;
    if (n <= k) return false; // kappa <= n-1
    if (!g.is_connected()) return false;
    int v0 = 0;
    for (int v = 1; v < n; v++)
        if (g.degree(v) < g.degree(v0)) v0 = v;
    if (g.degree(v0) < k) return false;
    std::vector<char> nb(n, 0);
    for (int w : g.neighbors(v0)) nb[w] = 1;
    for (int u = 0; u < n; u++) {
        if (u == v0 || nb[u]) continue;
        if (detail::vertex_disjoint_paths(g, v0, u, k) < k) return false;
    }
    const auto& nbs = g.neighbors(v0);
    for (size_t i = 0; i < nbs.size(); i++)
        for (size_t j = i + 1; j < nbs.size(); j++) {
            if (g.has_edge(nbs[i], nbs[j])) continue;
            if (detail::vertex_disjoint_paths(g, nbs[i], nbs[j], k) < k) return false;
        }
    return true;
}

struct StructureClaims {
    std::optional<int> max_degree;
    std::optional<int> max_diameter;
    bool triconnected_subdivision = false;
};

/// Checks structural claims about a generated graph; empty result means all
/// claimed properties hold.
inline std::vector<std::string> validate_structure(const UndirectedGraph& g, const StructureClaims& claims) {
    std::vector<std::string> out;
    if (claims.max_degree) {
        int d = max_degree(g);
        if (d > *claims.max_degree)
            out.push_back("max degree " + std::to_string(d) + " exceeds " + std::to_string(*claims.max_degree));
    }
    if (claims.max_diameter) {
        int d = diameter(g);
        if (d < 0 || d > *claims.max_diameter)
            out.push_back("diameter " + std::to_string(d) + " exceeds " + std::to_string(*claims.max_diameter));
    }
    if (claims.triconnected_subdivision) {
        UndirectedGraph s = suppress_degree_two(g);
        if (!vertex_connectivity_at_least(s, 3))
            out.push_back("suppressed graph is not 3-connected (" + std::to_string(s.vertex_count()) +
                          " vertices)");
    }
    return out;
}

} // namespace stor

#endif
