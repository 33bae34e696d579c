#ifndef STOR_RANDOM_GEN_HPP
#define STOR_RANDOM_GEN_HPP

#include <random>
#include <stdexcept>

#include "stor/graph.hpp"
#include "stor/nae3sat.hpp"

namespace stor {

/// G(n,m) conditioned on connectivity by rejection sampling.
inline UndirectedGraph random_connected_graph(int n, int m, std::mt19937_64& rng, int max_tries = 10000) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) all.push_back({i, j});
    if (m < n - 1 || m > static_cast<int>(all.size()))
        throw std::invalid_argument("infeasible edge count for a connected graph");
    for (int attempt = 0; attempt < max_tries; attempt++) {
        std::shuffle(all.begin(), all.end(), rng);
        UndirectedGraph g(n);
        for (int i = 0; i < m; i++) g.add_edge(all[i].first, all[i].second);
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("failed to sample a connected graph");
}

inline UndirectedGraph random_tree(int n, std::mt19937_64& rng) {
    UndirectedGraph g(n);
    for (int v = 1; v < n; v++) g.add_edge(v, static_cast<int>(rng() % v));
    return g;
}

/// Random partial 3-tree: grow a 3-tree by attaching each new vertex to a
/// random triangle, then delete a random subset of edges while keeping the
/// graph connected. Treewidth is at most 3 by construction.
inline UndirectedGraph random_partial_3tree(int n, double keep_prob, std::mt19937_64& rng, int max_tries = 200) {
    if (n < 4) throw std::invalid_argument("partial 3-tree generator needs n >= 4");
    UndirectedGraph base(n);
    std::vector<std::array<int, 3>> triangles;
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++) base.add_edge(i, j);
    triangles.push_back({0, 1, 2});
    triangles.push_back({0, 1, 3});
    triangles.push_back({0, 2, 3});
    triangles.push_back({1, 2, 3});
    for (int v = 4; v < n; v++) {
        const std::array<int, 3> tri = triangles[rng() % triangles.size()];
        for (int x : tri) base.add_edge(v, x);
        triangles.push_back({v, tri[0], tri[1]});
        triangles.push_back({v, tri[0], tri[2]});
        triangles.push_back({v, tri[1], tri[2]});
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < max_tries; attempt++) {
        UndirectedGraph g(n);
        for (const Edge& e : base.edges())
            if (coin(rng) < keep_prob) g.add_edge(e.u, e.v);
        if (g.is_connected()) return g;
    }
    return base;
}

/// Random 2-connected series-parallel graph: grow a triangle by repeatedly
/// subdividing a random edge or attaching a length-2 parallel path across
/// one. Treewidth at most 2, and every vertex pair admits an st-orientation.
inline UndirectedGraph random_series_parallel(int n, std::mt19937_64& rng) {
    if (n < 3) throw std::invalid_argument("series-parallel generator needs n >= 3");
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 2}};
    int nv = 3;
    while (nv < n) {
        size_t e = rng() % edges.size();
        auto [u, v] = edges[e];
        int w = nv++;
        if (rng() % 2) {
            edges[e] = {u, w};
            edges.push_back({w, v});
        } else {
            edges.push_back({u, w});
            edges.push_back({w, v});
        }
    }
    UndirectedGraph g(nv);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Nae3SatFormula random_nae_formula(int num_vars, int num_clauses, std::mt19937_64& rng) {
    Nae3SatFormula f;
    f.num_vars = num_vars;
    for (int c = 0; c < num_clauses; c++) {
        std::array<int, 3> cl{};
        for (int i = 0; i < 3; i++) {
            int var = 1 + static_cast<int>(rng() % num_vars);
            cl[i] = (rng() % 2) ? var : -var;
        }
        f.clauses.push_back(cl);
    }
    return f;
}

} // namespace stor

#endif
