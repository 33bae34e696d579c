#ifndef STOR_DECOMPOSITION_HPP
#define STOR_DECOMPOSITION_HPP

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stor/graph.hpp"

namespace stor {

/// Bags plus an unrooted tree over bag indices.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;          // each bag sorted ascending
    std::vector<std::pair<int, int>> tree_edges; // unordered bag-index pairs
};

/// Max bag size minus one. The empty and edgeless cases report 0 by
/// convention so callers never see a negative width.
inline int width(const TreeDecomposition& td) {
    size_t mx = 0;
    for (const auto& b : td.bags) mx = std::max(mx, b.size());
    return mx == 0 ? 0 : static_cast<int>(mx) - 1;
}

struct TdViolation {
    enum Kind { NotATree, VertexCoverage, EdgeCoverage, Connectivity, BadIndex } kind;
    std::string message;
};

/// All three tree-decomposition conditions plus tree-shape of tree_edges.
/// Empty result means the decomposition is valid for g.
inline std::vector<TdViolation> validate(const TreeDecomposition& td, const UndirectedGraph& g) {
    std::vector<TdViolation> out;
    const int nb = static_cast<int>(td.bags.size());
    for (const auto& b : td.bags)
        for (int v : b)
            if (v < 0 || v >= g.vertex_count()) {
                out.push_back({TdViolation::BadIndex, "bag vertex id out of range: " + std::to_string(v)});
                return out;
            }
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || b < 0 || a >= nb || b >= nb) {
            out.push_back({TdViolation::BadIndex, "tree edge bag index out of range"});
            return out;
        }

    // tree shape: connected and exactly nb-1 edges
    {
        bool tree_ok = static_cast<int>(td.tree_edges.size()) == nb - 1 && nb > 0;
        if (tree_ok) {
            std::vector<std::vector<int>> adj(nb);
            for (auto [a, b] : td.tree_edges) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            std::vector<char> seen(nb, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int cnt = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        cnt++;
                        stack.push_back(w);
                    }
            }
            tree_ok = cnt == nb;
        }
        if (!tree_ok) out.push_back({TdViolation::NotATree, "tree_edges do not form a tree over the bags"});
    }

    std::vector<std::vector<int>> containing(g.vertex_count());
    for (int i = 0; i < nb; i++)
        for (int v : td.bags[i]) containing[v].push_back(i);

    for (int v = 0; v < g.vertex_count(); v++)
        if (containing[v].empty())
            out.push_back({TdViolation::VertexCoverage, "vertex " + std::to_string(v + 1) + " is in no bag"});

    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (int i : containing[e.u]) {
            if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), e.v)) {
                covered = true;
                break;
            }
        }
        if (!covered)
            out.push_back({TdViolation::EdgeCoverage, "edge " + std::to_string(e.u + 1) + " " +
                                                          std::to_string(e.v + 1) + " is in no bag"});
    }

    // connectivity: bags containing v induce a connected subtree
    {
        std::vector<std::vector<int>> adj(nb);
        for (auto [a, b] : td.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (int v = 0; v < g.vertex_count(); v++) {
            if (containing[v].size() <= 1) continue;
            std::set<int> want(containing[v].begin(), containing[v].end());
            std::vector<int> stack{containing[v][0]};
            std::set<int> seen{containing[v][0]};
            while (!stack.empty()) {
                int b = stack.back();
                stack.pop_back();
                for (int c : adj[b])
                    if (want.count(c) && !seen.count(c)) {
                        seen.insert(c);
                        stack.push_back(c);
                    }
            }
            if (seen.size() != want.size())
                out.push_back({TdViolation::Connectivity,
                               "bags containing vertex " + std::to_string(v + 1) + " are not connected"});
        }
    }
    return out;
}

/// Min-fill elimination ordering with min-degree tie-breaking (then lowest
/// id). Produces a valid decomposition for any connected graph; width is a
/// heuristic upper bound on the treewidth.
inline TreeDecomposition heuristic_decompose(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> order;
    std::vector<std::vector<int>> bag_of(n);

    for (int round = 0; round < n; round++) {
        int best = -1;
        long best_fill = -1, best_deg = -1;
        for (int v = 0; v < n; v++) {
            if (gone[v]) continue;
            long deg = static_cast<long>(adj[v].size());
            long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) fill++;
            if (best < 0 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = deg;
            }
        }
        std::vector<int> bag(adj[best].begin(), adj[best].end());
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        bag_of[best] = bag;
        order.push_back(best);
        for (int a : adj[best])
            for (int b : adj[best])
                if (a < b && !adj[a].count(b)) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        for (int a : adj[best]) adj[a].erase(best);
        adj[best].clear();
        gone[best] = 1;
    }

    // one bag per elimination step; parent is the bag of the earliest
    // eliminated remaining neighbor
    std::vector<int> position(n);
    for (int i = 0; i < n; i++) position[order[i]] = i;
    td.bags.resize(n);
    for (int i = 0; i < n; i++) td.bags[i] = bag_of[order[i]];
    for (int i = 0; i < n; i++) {
        int v = order[i];
        int parent = -1, parent_pos = n;
        for (int w : bag_of[v]) {
            if (w == v) continue;
            if (position[w] > i && position[w] < parent_pos) {
                parent_pos = position[w];
                parent = w;
            }
        }
        if (parent >= 0) td.tree_edges.push_back({i, position[parent]});
    }
    // a connected input yields exactly one bag without a parent (the last)
    return td;
}

// ---------------------------------------------------------------------------
// PACE-style .td file format: optional `c` comments, one line
// `s td <num_bags> <max_bag_size> <n>`, bag lines `b <bag_id> <v1> <v2> ...`,
// then one tree edge `<b1> <b2>` per line. All ids 1-based.
// ---------------------------------------------------------------------------

inline TreeDecomposition parse_td(std::istream& is) {
    TreeDecomposition td;
    std::string line;
    bool have_header = false;
    long nb = 0, maxbag = 0, n = 0;
    int lineno = 0;
    std::vector<char> seen_bag;
    while (std::getline(is, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "s") {
            std::string kind;
            if (have_header || !(ls >> kind >> nb >> maxbag >> n) || kind != "td" || nb < 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": malformed 's td' header");
            td.bags.assign(nb, {});
            seen_bag.assign(nb, 0);
            have_header = true;
            continue;
        }
        if (tag == "b") {
            if (!have_header) throw std::runtime_error("line " + std::to_string(lineno) + ": bag before header");
            long id;
            if (!(ls >> id) || id < 1 || id > nb)
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad bag id");
            if (seen_bag[id - 1]) throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate bag");
            seen_bag[id - 1] = 1;
            long v;
            while (ls >> v) {
                if (v < 1 || v > n)
                    throw std::runtime_error("line " + std::to_string(lineno) + ": bag vertex out of range");
                td.bags[id - 1].push_back(static_cast<int>(v - 1));
            }
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
            td.bags[id - 1].erase(std::unique(td.bags[id - 1].begin(), td.bags[id - 1].end()),
                                  td.bags[id - 1].end());
            continue;
        }
        // tree edge line: two bag ids
        {
            if (!have_header) throw std::runtime_error("line " + std::to_string(lineno) + ": edge before header");
            long a, b;
            std::istringstream es(line);
            if (!(es >> a >> b) || a < 1 || b < 1 || a > nb || b > nb)
                throw std::runtime_error("line " + std::to_string(lineno) + ": malformed tree edge line");
            td.tree_edges.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1)});
        }
    }
    if (!have_header) throw std::runtime_error("missing 's td' header");
    return td;
}

inline TreeDecomposition parse_td(const std::string& text) {
    std::istringstream is(text);
    return parse_td(is);
}

inline std::string serialize_td(const TreeDecomposition& td, int n) {
    size_t maxbag = 0;
    for (const auto& b : td.bags) maxbag = std::max(maxbag, b.size());
    std::ostringstream os;
    os << "s td " << td.bags.size() << " " << maxbag << " " << n << "\n";
    for (size_t i = 0; i < td.bags.size(); i++) {
        os << "b " << i + 1;
        for (int v : td.bags[i]) os << " " << v + 1;
        os << "\n";
    }
    for (auto [a, b] : td.tree_edges) os << a + 1 << " " << b + 1 << "\n";
    return os.str();
}

} // namespace stor

#endif
