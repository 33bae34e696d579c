#ifndef STOR_NICE_DECOMPOSITION_HPP
#define STOR_NICE_DECOMPOSITION_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "stor/decomposition.hpp"

namespace stor {

enum class NodeKind { Leaf, Introduce, Forget, Join };

inline const char* kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Leaf: return "leaf";
        case NodeKind::Introduce: return "introduce";
        case NodeKind::Forget: return "forget";
        case NodeKind::Join: return "join";
    }
    return "?";
}

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1; // introduced or forgotten vertex
    std::vector<int> bag;
    int child0 = -1;
    int child1 = -1;
};

/// Rooted binary decomposition with typed nodes. Nodes are stored in
/// post-order (children before parents); the root is the last node and has an
/// empty bag, as do all leaves.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root() const { return static_cast<int>(nodes.size()) - 1; }
};

inline int nice_width(const NiceTreeDecomposition& ntd) {
    size_t mx = 0;
    for (const auto& n : ntd.nodes) mx = std::max(mx, n.bag.size());
    return mx == 0 ? 0 : static_cast<int>(mx) - 1;
}

namespace detail {

struct NiceBuilder {
    const TreeDecomposition& td;
    std::vector<std::vector<int>> adj;
    NiceTreeDecomposition out;

    explicit NiceBuilder(const TreeDecomposition& td_) : td(td_), adj(td_.bags.size()) {
        for (auto [a, b] : td.tree_edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& v : adj) std::sort(v.begin(), v.end());
    }

    int emit(NiceNode n) {
        out.nodes.push_back(std::move(n));
        return static_cast<int>(out.nodes.size()) - 1;
    }

    // Leaf plus an introduce chain up to `bag` (ascending ids).
    int leaf_chain(const std::vector<int>& bag) {
        int cur = emit({NodeKind::Leaf, -1, {}, -1, -1});
        std::vector<int> acc;
        for (int v : bag) {
            acc.push_back(v);
            cur = emit({NodeKind::Introduce, v, acc, cur, -1});
        }
        return cur;
    }

    // Forget chain (descending) then introduce chain (ascending) turning
    // `from` into `to` above node `cur`.
    int bridge(int cur, std::vector<int> from, const std::vector<int>& to) {
        std::vector<int> drop, add;
        std::set_difference(from.begin(), from.end(), to.begin(), to.end(), std::back_inserter(drop));
        std::set_difference(to.begin(), to.end(), from.begin(), from.end(), std::back_inserter(add));
        std::sort(drop.rbegin(), drop.rend());
        for (int v : drop) {
            from.erase(std::find(from.begin(), from.end(), v));
            cur = emit({NodeKind::Forget, v, from, cur, -1});
        }
        for (int v : add) {
            from.insert(std::upper_bound(from.begin(), from.end(), v), v);
            cur = emit({NodeKind::Introduce, v, from, cur, -1});
        }
        return cur;
    }

    // Builds the nice subtree for original bag i; the returned node's bag
    // equals td.bags[i].
    int build(int i, int parent) {
        std::vector<int> children;
        for (int c : adj[i])
            if (c != parent) children.push_back(c);
        if (children.empty()) return leaf_chain(td.bags[i]);
        int acc = bridge(build(children[0], i), td.bags[children[0]], td.bags[i]);
        for (size_t j = 1; j < children.size(); j++) {
            int rhs = bridge(build(children[j], i), td.bags[children[j]], td.bags[i]);
            acc = emit({NodeKind::Join, -1, td.bags[i], acc, rhs});
        }
        return acc;
    }
};

} // namespace detail

/// Turns a valid tree decomposition into a nice one of the same width: root
/// the tree at bag 0, expand every tree edge into forget and introduce
/// chains, expand branching bags into binary join cascades, and forget the
/// root bag down to empty.
inline NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
    detail::NiceBuilder b(td);
    if (td.bags.empty()) {
        b.emit({NodeKind::Leaf, -1, {}, -1, -1});
        return std::move(b.out);
    }
    int top = b.build(0, -1);
    std::vector<int> bag = td.bags[0];
    std::vector<int> drop(bag.rbegin(), bag.rend());
    for (int v : drop) {
        bag.erase(std::find(bag.begin(), bag.end(), v));
        top = b.emit({NodeKind::Forget, v, bag, top, -1});
    }
    return std::move(b.out);
}

/// Structural validation of a nice decomposition against its graph. Checks
/// node typing rules, post-order child indices, empty root and leaves, and
/// that the underlying (bags, tree) is a valid decomposition of g.
inline std::vector<std::string> validate_nice(const NiceTreeDecomposition& ntd, const UndirectedGraph& g) {
    std::vector<std::string> out;
    const int n = static_cast<int>(ntd.nodes.size());
    if (n == 0) return {"empty decomposition"};
    if (!ntd.nodes[ntd.root()].bag.empty()) out.push_back("root bag not empty");
    for (int i = 0; i < n; i++) {
        const NiceNode& nd = ntd.nodes[i];
        if (!std::is_sorted(nd.bag.begin(), nd.bag.end())) out.push_back("bag not sorted at node " + std::to_string(i));
        if (nd.child0 >= i || nd.child1 >= i) out.push_back("child index not below parent at node " + std::to_string(i));
        switch (nd.kind) {
            case NodeKind::Leaf:
                if (!nd.bag.empty()) out.push_back("leaf bag not empty at node " + std::to_string(i));
                if (nd.child0 != -1 || nd.child1 != -1) out.push_back("leaf with children at node " + std::to_string(i));
                break;
            case NodeKind::Introduce: {
                if (nd.child0 < 0 || nd.child1 != -1) {
                    out.push_back("introduce arity wrong at node " + std::to_string(i));
                    break;
                }
                std::vector<int> expect = ntd.nodes[nd.child0].bag;
                expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
                if (expect != nd.bag ||
                    std::binary_search(ntd.nodes[nd.child0].bag.begin(), ntd.nodes[nd.child0].bag.end(), nd.vertex))
                    out.push_back("introduce bag rule violated at node " + std::to_string(i));
                break;
            }
            case NodeKind::Forget: {
                if (nd.child0 < 0 || nd.child1 != -1) {
                    out.push_back("forget arity wrong at node " + std::to_string(i));
                    break;
                }
                std::vector<int> expect = nd.bag;
                expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
                if (expect != ntd.nodes[nd.child0].bag)
                    out.push_back("forget bag rule violated at node " + std::to_string(i));
                break;
            }
            case NodeKind::Join:
                if (nd.child0 < 0 || nd.child1 < 0) {
                    out.push_back("join arity wrong at node " + std::to_string(i));
                    break;
                }
                if (ntd.nodes[nd.child0].bag != nd.bag || ntd.nodes[nd.child1].bag != nd.bag)
                    out.push_back("join bag rule violated at node " + std::to_string(i));
                break;
        }
    }
    // underlying decomposition of g
    TreeDecomposition td;
    for (int i = 0; i < n; i++) {
        td.bags.push_back(ntd.nodes[i].bag);
        if (ntd.nodes[i].child0 >= 0) td.tree_edges.push_back({i, ntd.nodes[i].child0});
        if (ntd.nodes[i].child1 >= 0) td.tree_edges.push_back({i, ntd.nodes[i].child1});
    }
    for (const TdViolation& v : validate(td, g)) out.push_back(v.message);
    return out;
}

} // namespace stor

#endif
