#ifndef STOR_DP_HPP
#define STOR_DP_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "stor/graph.hpp"
#include "stor/nice_decomposition.hpp"

namespace stor::dp {

/// Hard cap on bag size (width + 1). Pair relations are kept as fixed-size
/// bit rows and bag edge sets as 64-bit masks, which requires
/// C(kMaxBag,2) <= 64.
inline constexpr int kMaxBag = 11;

using PairRows = std::array<uint16_t, kMaxBag>;

/// DP state at a bag. Everything except cost and provenance is key material:
/// orientation of the bag edges, guessed-transitive (admissible) bag edges,
/// directed-path pairs and forbidden pairs over bag vertices, per-vertex
/// source/sink flags for the processed subgraph, and the two flags recording
/// that a source (sink) was already forgotten.
struct RecordKey {
    uint64_t dir = 0; // bit per bag edge, 1 = arc from lower to higher local index
    uint64_t adm = 0;
    PairRows paths{};
    PairRows forb{};
    uint16_t src = 0;
    uint16_t sink = 0;
    uint8_t flags = 0; // bit0: forgotten source, bit1: forgotten sink

    bool operator==(const RecordKey& o) const {
        return dir == o.dir && adm == o.adm && src == o.src && sink == o.sink && flags == o.flags &&
               paths == o.paths && forb == o.forb;
    }
};

struct KeyHash {
    size_t operator()(const RecordKey& k) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix(k.dir);
        mix(k.adm);
        for (int i = 0; i < kMaxBag; i++) mix((uint64_t(k.paths[i]) << 16) | k.forb[i]);
        mix((uint64_t(k.src) << 24) | (uint64_t(k.sink) << 8) | k.flags);
        return static_cast<size_t>(h);
    }
};

struct Record {
    RecordKey key;
    long cost = 0;
    int child0 = -1;
    int child1 = -1;
};

/// Keyed record collection with cost-min dedup. Iteration order is insertion
/// order; on equal cost the first inserted record wins.
struct RecordSet {
    std::vector<Record> recs;
    std::unordered_map<RecordKey, int, KeyHash> index;

    // returns false when dropped as a duplicate with no better cost
    bool insert(const Record& r) {
        auto it = index.find(r.key);
        if (it == index.end()) {
            index.emplace(r.key, static_cast<int>(recs.size()));
            recs.push_back(r);
            return true;
        }
        Record& ex = recs[it->second];
        if (r.cost < ex.cost) {
            ex.cost = r.cost;
            ex.child0 = r.child0;
            ex.child1 = r.child1;
            return true;
        }
        return false;
    }
};

struct NodeStats {
    int node = 0;
    NodeKind kind = NodeKind::Leaf;
    long generated = 0;
    long pruned_validity = 0;
    long pruned_merge = 0;
    long stored = 0;
};

struct SolveResult {
    bool yes = false;
    Orientation orientation;
    long transitive_count = -1;
    std::string diagnostic;
    std::vector<NodeStats> stats;
};

namespace detail {

// strict transitive closure (bit Floyd-Warshall)
inline void closure(PairRows& rows, int b) {
    for (int k = 0; k < b; k++) {
        const uint16_t kr = rows[k];
        for (int i = 0; i < b; i++)
            if (rows[i] >> k & 1) rows[i] |= kr;
    }
}

inline bool has_cycle(const PairRows& rows, int b) {
    for (int i = 0; i < b; i++)
        if (rows[i] >> i & 1) return true;
    return false;
}

// distinct path test for an arc x->y over a closed, acyclic relation:
// some intermediate bag vertex z with x ~> z and z ~> y
inline bool has_distinct_path(const PairRows& rows, int b, int x, int y) {
    uint16_t mids = rows[x] & ~(uint16_t(1) << y);
    for (int z = 0; z < b; z++)
        if ((mids >> z & 1) && (rows[z] >> y & 1)) return true;
    return false;
}

// closes F under composition with the (already closed) path relation:
// (a,b) in F and a ~> z adds (z,b); (a,b) in F and d ~> b adds (a,d)
inline void close_forbidden(PairRows& forb, const PairRows& paths, int b) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < b; a++) {
            uint16_t fa = forb[a];
            uint16_t add = 0;
            for (int d = 0; d < b; d++)
                if (paths[d] & fa) add |= uint16_t(1) << d;
            add &= ~fa;
            add &= ~(uint16_t(1) << a);
            if (add) {
                forb[a] = fa | add;
                fa = forb[a];
                changed = true;
            }
            if (!fa) continue;
            const uint16_t pa = paths[a];
            for (int z = 0; z < b; z++) {
                if (!(pa >> z & 1)) continue;
                uint16_t nf = forb[z] | (fa & ~(uint16_t(1) << z));
                if (nf != forb[z]) {
                    forb[z] = nf;
                    changed = true;
                }
            }
        }
    }
}

struct NodeCtx {
    std::vector<int> verts;
    int b = 0;
    std::vector<std::pair<int, int>> edges; // local (i,j), i < j, lexicographic
    std::array<std::array<int, kMaxBag>, kMaxBag> edge_at{};

    // introduce / forget bookkeeping
    int vpos = -1;                // local index of the handled vertex (introduce: in this bag,
                                  // forget: in the child bag)
    std::vector<int> map_child;   // child local -> this-bag local, -1 for the forgotten vertex
    std::vector<int> edge_map;    // child edge -> this-bag edge, -1 when dropped
    std::vector<int> vedge_idx;   // introduce: this-bag edges at vpos, by neighbor local asc
    std::vector<int> vedge_other; // introduce: the neighbor local per vedge

    int edge_between(int i, int j) const { return i < j ? edge_at[i][j] : edge_at[j][i]; }
};

inline void remap_key(const RecordKey& in, const NodeCtx& child, const NodeCtx& self, RecordKey& out) {
    out = RecordKey{};
    out.flags = in.flags;
    for (size_t e = 0; e < child.edges.size(); e++) {
        int me = self.edge_map[e];
        if (me < 0) continue;
        out.dir |= uint64_t((in.dir >> e) & 1) << me;
        out.adm |= uint64_t((in.adm >> e) & 1) << me;
    }
    for (int i = 0; i < child.b; i++) {
        int mi = self.map_child[i];
        if (mi < 0) continue;
        uint16_t prow = 0, frow = 0;
        for (int j = 0; j < child.b; j++) {
            int mj = self.map_child[j];
            if (mj < 0) continue;
            if (in.paths[i] >> j & 1) prow |= uint16_t(1) << mj;
            if (in.forb[i] >> j & 1) frow |= uint16_t(1) << mj;
        }
        out.paths[mi] = prow;
        out.forb[mi] = frow;
        if (in.src >> i & 1) out.src |= uint16_t(1) << mi;
        if (in.sink >> i & 1) out.sink |= uint16_t(1) << mi;
    }
}

} // namespace detail

/// Bottom-up dynamic programming over a nice tree decomposition.
/// Record sets are kept per node so a solution can be reconstructed by the
/// stored back-pointers after the run.
class Solver {
public:
    Solver(const Instance& inst, const NiceTreeDecomposition& ntd, bool minimize)
        : g_(inst.graph), ntd_(ntd), s_(inst.s), t_(inst.t) {
        budget_ = minimize ? g_.edge_count() : std::min<long>(inst.k, g_.edge_count());
    }

    SolveResult run() {
        SolveResult res;
        if (g_.vertex_count() == 0) {
            res.diagnostic = "empty graph: nothing to orient";
            return res;
        }
        if (g_.vertex_count() == 1) {
            res.diagnostic = "single vertex: it would be both the source and the sink";
            return res;
        }
        if (!g_.is_connected()) throw std::invalid_argument("input graph is disconnected");
        if (s_ && t_ && *s_ == *t_) throw std::invalid_argument("prescribed source equals prescribed sink");
        build_contexts();

        const int n = static_cast<int>(ntd_.nodes.size());
        sets_.assign(n, {});
        res.stats.assign(n, {});
        for (int i = 0; i < n; i++) {
            const NiceNode& nd = ntd_.nodes[i];
            NodeStats& st = res.stats[i];
            st.node = i;
            st.kind = nd.kind;
            switch (nd.kind) {
                case NodeKind::Leaf: process_leaf(i, st); break;
                case NodeKind::Introduce: process_introduce(i, st); break;
                case NodeKind::Forget: process_forget(i, st); break;
                case NodeKind::Join: process_join(i, st); break;
            }
            st.stored = static_cast<long>(sets_[i].recs.size());
            if (sets_[i].recs.empty()) {
                res.yes = false;
                res.diagnostic = "no record survives at node " + std::to_string(i);
                return res;
            }
        }

        const RecordSet& root = sets_[ntd_.root()];
        int best = -1;
        for (int i = 0; i < static_cast<int>(root.recs.size()); i++)
            if (best < 0 || root.recs[i].cost < root.recs[best].cost) best = i;
        if (best < 0) {
            res.diagnostic = "empty root record set";
            return res;
        }
        res.yes = true;
        res.transitive_count = root.recs[best].cost;
        res.orientation = reconstruct(best);
        return res;
    }

    const RecordSet& records(int node) const { return sets_.at(node); }

private:
    const UndirectedGraph& g_;
    const NiceTreeDecomposition& ntd_;
    std::optional<int> s_, t_;
    long budget_ = 0;
    std::vector<detail::NodeCtx> ctx_;
    std::vector<RecordSet> sets_;

    void build_contexts() {
        const int n = static_cast<int>(ntd_.nodes.size());
        ctx_.assign(n, {});
        for (int i = 0; i < n; i++) {
            const NiceNode& nd = ntd_.nodes[i];
            detail::NodeCtx& c = ctx_[i];
            c.verts = nd.bag;
            c.b = static_cast<int>(nd.bag.size());
            if (c.b > kMaxBag)
                throw std::runtime_error("bag of size " + std::to_string(c.b) + " exceeds the solver cap of " +
                                         std::to_string(kMaxBag));
            for (auto& row : c.edge_at) row.fill(-1);
            for (int a = 0; a < c.b; a++)
                for (int bb = a + 1; bb < c.b; bb++)
                    if (g_.has_edge(c.verts[a], c.verts[bb])) {
                        c.edge_at[a][bb] = static_cast<int>(c.edges.size());
                        c.edges.push_back({a, bb});
                    }
            if (static_cast<int>(c.edges.size()) > 64)
                throw std::runtime_error("bag edge set exceeds 64 edges");

            if (nd.kind == NodeKind::Introduce) {
                const detail::NodeCtx& ch = ctx_[nd.child0];
                c.vpos = static_cast<int>(std::lower_bound(c.verts.begin(), c.verts.end(), nd.vertex) -
                                          c.verts.begin());
                c.map_child.resize(ch.b);
                for (int j = 0; j < ch.b; j++) c.map_child[j] = j < c.vpos ? j : j + 1;
                c.edge_map.resize(ch.edges.size());
                for (size_t e = 0; e < ch.edges.size(); e++)
                    c.edge_map[e] = c.edge_between(c.map_child[ch.edges[e].first], c.map_child[ch.edges[e].second]);
                for (int w = 0; w < c.b; w++) {
                    if (w == c.vpos) continue;
                    int e = c.edge_between(c.vpos, w);
                    if (e >= 0) {
                        c.vedge_idx.push_back(e);
                        c.vedge_other.push_back(w);
                    }
                }
            } else if (nd.kind == NodeKind::Forget) {
                const detail::NodeCtx& ch = ctx_[nd.child0];
                c.vpos = static_cast<int>(std::lower_bound(ch.verts.begin(), ch.verts.end(), nd.vertex) -
                                          ch.verts.begin());
                c.map_child.resize(ch.b);
                for (int j = 0; j < ch.b; j++) c.map_child[j] = j < c.vpos ? j : (j == c.vpos ? -1 : j - 1);
                c.edge_map.resize(ch.edges.size());
                for (size_t e = 0; e < ch.edges.size(); e++) {
                    int a = c.map_child[ch.edges[e].first], bb = c.map_child[ch.edges[e].second];
                    c.edge_map[e] = (a < 0 || bb < 0) ? -1 : c.edge_between(a, bb);
                }
            }
        }
    }

    void process_leaf(int i, NodeStats& st) {
        st.generated = 1;
        sets_[i].insert(Record{});
    }

    void process_introduce(int i, NodeStats& st) {
        const NiceNode& nd = ntd_.nodes[i];
        const detail::NodeCtx& c = ctx_[i];
        const detail::NodeCtx& ch = ctx_[nd.child0];
        const RecordSet& child = sets_[nd.child0];
        const int nv = static_cast<int>(c.vedge_idx.size());
        const int vpos = c.vpos;

        RecordKey base;
        for (int ci = 0; ci < static_cast<int>(child.recs.size()); ci++) {
            const Record& cr = child.recs[ci];
            detail::remap_key(cr.key, ch, c, base);
            for (uint32_t o = 0; o < (1u << nv); o++) {
                st.generated += 1u << nv;
                uint16_t out_v = 0, in_v = 0;
                uint64_t dir = base.dir;
                for (int e = 0; e < nv; e++) {
                    int w = c.vedge_other[e];
                    bool v_to_w = o >> e & 1;
                    if (v_to_w) out_v |= uint16_t(1) << w;
                    else in_v |= uint16_t(1) << w;
                    // dir bit is 1 when the arc runs from lower local index to higher
                    bool low_to_high = vpos < w ? v_to_w : !v_to_w;
                    if (low_to_high) dir |= uint64_t(1) << c.vedge_idx[e];
                }

                // auxiliary digraph: all bag arcs plus inherited path pairs
                PairRows rows{};
                for (size_t e = 0; e < c.edges.size(); e++) {
                    auto [a, bb] = c.edges[e];
                    if (dir >> e & 1) rows[a] |= uint16_t(1) << bb;
                    else rows[bb] |= uint16_t(1) << a;
                }
                for (int a = 0; a < c.b; a++) rows[a] |= base.paths[a];
                detail::closure(rows, c.b);
                if (detail::has_cycle(rows, c.b)) {
                    st.pruned_validity += 1u << nv;
                    continue;
                }
                // forbidden pair gained a fresh connection
                bool bad = false;
                for (int a = 0; a < c.b && !bad; a++)
                    if (base.forb[a] & rows[a] & ~base.paths[a]) bad = true;
                // non-admissible old edge, or an old edge under a forbidden-pair
                // obligation, gained a distinct parallel path
                uint32_t must_t = 0;
                for (size_t e = 0; e < c.edges.size() && !bad; e++) {
                    auto [a, bb] = c.edges[e];
                    int x = (dir >> e & 1) ? a : bb;
                    int y = (dir >> e & 1) ? bb : a;
                    bool incident_v = a == vpos || bb == vpos;
                    bool needs_check = !(base.adm >> e & 1) || (!incident_v && (base.forb[x] >> y & 1));
                    if (!needs_check) continue;
                    if (!detail::has_distinct_path(rows, c.b, x, y)) continue;
                    if (!incident_v) {
                        bad = true;
                    } else {
                        for (int k = 0; k < nv; k++)
                            if (c.vedge_idx[k] == static_cast<int>(e)) must_t |= 1u << k;
                    }
                }
                if (bad) {
                    st.pruned_validity += 1u << nv;
                    continue;
                }

                for (uint32_t t = 0; t < (1u << nv); t++) {
                    if ((t & must_t) != must_t) {
                        st.pruned_validity++;
                        continue;
                    }
                    long cost = cr.cost + std::popcount(t);
                    if (cost > budget_) {
                        st.pruned_validity++;
                        continue;
                    }
                    Record rec;
                    rec.cost = cost;
                    rec.child0 = ci;
                    RecordKey& k = rec.key;
                    k.dir = dir;
                    k.adm = base.adm;
                    for (int e = 0; e < nv; e++)
                        if (t >> e & 1) k.adm |= uint64_t(1) << c.vedge_idx[e];
                    k.paths = rows;
                    for (int a = 0; a < c.b; a++) k.paths[a] &= ~(uint16_t(1) << a);
                    k.forb = base.forb;
                    // obligations of v's freshly oriented non-admissible edges
                    for (int e = 0; e < nv; e++) {
                        if (t >> e & 1) continue;
                        int w = c.vedge_other[e];
                        int x = (o >> e & 1) ? vpos : w;
                        int y = (o >> e & 1) ? w : vpos;
                        uint16_t fwd = k.paths[x] | (uint16_t(1) << x);
                        uint16_t back = uint16_t(1) << y;
                        for (int z = 0; z < c.b; z++)
                            if (k.paths[z] >> y & 1) back |= uint16_t(1) << z;
                        // the endpoint pair (x,y) itself is included; checks
                        // that consult F are arc-aware about it
                        for (int p = 0; p < c.b; p++) {
                            if (!(fwd >> p & 1)) continue;
                            k.forb[p] |= back & ~(uint16_t(1) << p);
                        }
                    }
                    detail::close_forbidden(k.forb, k.paths, c.b);
                    for (int a = 0; a < c.b; a++) k.forb[a] &= ~(uint16_t(1) << a);
                    k.src = (base.src & ~out_v);
                    k.sink = (base.sink & ~in_v);
                    if (in_v == 0) k.src |= uint16_t(1) << vpos;
                    if (out_v == 0) k.sink |= uint16_t(1) << vpos;
                    k.flags = base.flags;
                    if (!sets_[i].insert(rec)) st.pruned_merge++;
                }
            }
        }
    }

    void process_forget(int i, NodeStats& st) {
        const NiceNode& nd = ntd_.nodes[i];
        const detail::NodeCtx& c = ctx_[i];
        const detail::NodeCtx& ch = ctx_[nd.child0];
        const RecordSet& child = sets_[nd.child0];
        const int vpos = c.vpos; // position in the child bag
        for (int ci = 0; ci < static_cast<int>(child.recs.size()); ci++) {
            const Record& cr = child.recs[ci];
            st.generated++;
            bool was_src = cr.key.src >> vpos & 1;
            bool was_sink = cr.key.sink >> vpos & 1;
            uint8_t flags = cr.key.flags;
            if (was_src) {
                if (flags & 1) {
                    st.pruned_validity++; // second source
                    continue;
                }
                if (s_ && nd.vertex != *s_) {
                    st.pruned_validity++; // a source other than the prescribed one
                    continue;
                }
                flags |= 1;
            }
            if (was_sink) {
                if (flags & 2) {
                    st.pruned_validity++;
                    continue;
                }
                if (t_ && nd.vertex != *t_) {
                    st.pruned_validity++;
                    continue;
                }
                flags |= 2;
            }
            Record rec;
            rec.cost = cr.cost;
            rec.child0 = ci;
            detail::remap_key(cr.key, ch, c, rec.key);
            rec.key.flags = flags;
            if (!sets_[i].insert(rec)) st.pruned_merge++;
        }
    }

    void process_join(int i, NodeStats& st) {
        const NiceNode& nd = ntd_.nodes[i];
        const detail::NodeCtx& c = ctx_[i];
        const RecordSet& left = sets_[nd.child0];
        const RecordSet& right = sets_[nd.child1];
        st.generated = static_cast<long>(left.recs.size()) * static_cast<long>(right.recs.size());

        std::map<std::pair<uint64_t, uint64_t>, std::vector<int>> groups;
        for (int ri = 0; ri < static_cast<int>(right.recs.size()); ri++)
            groups[{right.recs[ri].key.dir, right.recs[ri].key.adm}].push_back(ri);

        for (int li = 0; li < static_cast<int>(left.recs.size()); li++) {
            const Record& L = left.recs[li];
            auto git = groups.find({L.key.dir, L.key.adm});
            if (git == groups.end()) continue;
            for (int ri : git->second) {
                const Record& R = right.recs[ri];
                long shared = std::popcount(L.key.adm);
                long cost = L.cost + R.cost - shared;
                if (cost > budget_) {
                    st.pruned_merge++;
                    continue;
                }
                if ((L.key.flags & R.key.flags & 1) || (L.key.flags & R.key.flags & 2)) {
                    st.pruned_merge++;
                    continue;
                }
                PairRows rows{};
                for (int a = 0; a < c.b; a++) rows[a] = L.key.paths[a] | R.key.paths[a];
                detail::closure(rows, c.b);
                if (detail::has_cycle(rows, c.b)) {
                    st.pruned_merge++;
                    continue;
                }
                bool bad = false;
                // forbidden pairs of either side against the combined paths
                for (int a = 0; a < c.b && !bad; a++) {
                    uint16_t fa = L.key.forb[a] | R.key.forb[a];
                    if (!fa) continue;
                    for (int bb = 0; bb < c.b && !bad; bb++) {
                        if (!(fa >> bb & 1)) continue;
                        int e = c.edge_between(a, bb);
                        bool is_arc = false;
                        if (e >= 0) {
                            int lo = c.edges[e].first;
                            is_arc = ((L.key.dir >> e & 1) ? lo == a : lo == bb);
                        }
                        if (is_arc) {
                            if (detail::has_distinct_path(rows, c.b, a, bb)) bad = true;
                        } else if (rows[a] >> bb & 1) {
                            bad = true;
                        }
                    }
                }
                // non-admissible bag edges must not gain a distinct parallel path
                for (size_t e = 0; e < c.edges.size() && !bad; e++) {
                    if (L.key.adm >> e & 1) continue;
                    auto [a, bb] = c.edges[e];
                    int x = (L.key.dir >> e & 1) ? a : bb;
                    int y = (L.key.dir >> e & 1) ? bb : a;
                    if (detail::has_distinct_path(rows, c.b, x, y)) bad = true;
                }
                if (bad) {
                    st.pruned_merge++;
                    continue;
                }
                Record rec;
                rec.cost = cost;
                rec.child0 = li;
                rec.child1 = ri;
                RecordKey& k = rec.key;
                k.dir = L.key.dir;
                k.adm = L.key.adm;
                k.paths = rows;
                for (int a = 0; a < c.b; a++) k.paths[a] &= ~(uint16_t(1) << a);
                for (int a = 0; a < c.b; a++) k.forb[a] = L.key.forb[a] | R.key.forb[a];
                detail::close_forbidden(k.forb, k.paths, c.b);
                for (int a = 0; a < c.b; a++) k.forb[a] &= ~(uint16_t(1) << a);
                k.src = L.key.src & R.key.src;
                k.sink = L.key.sink & R.key.sink;
                k.flags = L.key.flags | R.key.flags;
                if (!sets_[i].insert(rec)) st.pruned_merge++;
            }
        }
    }

    Orientation reconstruct(int root_rec) const {
        std::vector<int8_t> dir(g_.edge_count(), -1);
        std::vector<std::pair<int, int>> stack{{ntd_.root(), root_rec}};
        while (!stack.empty()) {
            auto [node, rec_idx] = stack.back();
            stack.pop_back();
            const NiceNode& nd = ntd_.nodes[node];
            const Record& rec = sets_[node].recs[rec_idx];
            switch (nd.kind) {
                case NodeKind::Leaf: break;
                case NodeKind::Introduce: {
                    const detail::NodeCtx& c = ctx_[node];
                    for (size_t e = 0; e < c.vedge_idx.size(); e++) {
                        int idx = c.vedge_idx[e];
                        auto [a, bb] = c.edges[idx];
                        int gu = c.verts[a], gv = c.verts[bb]; // gu < gv
                        int gidx = g_.edge_index(gu, gv);
                        int8_t d = (rec.key.dir >> idx & 1) ? 0 : 1; // 0 = low -> high
                        if (dir[gidx] >= 0 && dir[gidx] != d)
                            throw std::logic_error("inconsistent edge orientation during reconstruction");
                        dir[gidx] = d;
                    }
                    stack.push_back({nd.child0, rec.child0});
                    break;
                }
                case NodeKind::Forget:
                    stack.push_back({nd.child0, rec.child0});
                    break;
                case NodeKind::Join:
                    stack.push_back({nd.child0, rec.child0});
                    stack.push_back({nd.child1, rec.child1});
                    break;
            }
        }
        Orientation o;
        o.dir.resize(g_.edge_count());
        for (int e = 0; e < g_.edge_count(); e++) {
            if (dir[e] < 0) throw std::logic_error("edge never oriented: decomposition does not cover the graph");
            o.dir[e] = static_cast<uint8_t>(dir[e]);
        }
        return o;
    }
};

/// Decision mode: finds any st-orientation with at most inst.k transitive
/// edges, or answers NO.
inline SolveResult solve(const Instance& inst, const NiceTreeDecomposition& ntd) {
    Solver s(inst, ntd, false);
    SolveResult r = s.run();
    if (r.yes) {
        Instance verify = inst;
        Verdict v = check_st_orientation(verify, r.orientation);
        if (!v.pass || v.transitive_count != r.transitive_count)
            throw std::logic_error("solver produced an orientation the verifier rejects");
    }
    return r;
}

/// Optimization mode: ignores inst.k and reports the minimum transitive-edge
/// count over all st-orientations (NO only when none exists).
inline SolveResult solve_min(const Instance& inst, const NiceTreeDecomposition& ntd) {
    Solver s(inst, ntd, true);
    SolveResult r = s.run();
    if (r.yes) {
        Instance verify = inst;
        verify.k = r.transitive_count;
        Verdict v = check_st_orientation(verify, r.orientation);
        if (!v.pass || v.transitive_count != r.transitive_count)
            throw std::logic_error("solver produced an orientation the verifier rejects");
    }
    return r;
}

/// One line per node: node id, kind, generated, pruned_validity,
/// pruned_merge, stored.
inline std::string format_stats(const std::vector<NodeStats>& stats) {
    std::ostringstream os;
    for (const NodeStats& s : stats)
        os << s.node << " " << kind_name(s.kind) << " " << s.generated << " " << s.pruned_validity << " "
           << s.pruned_merge << " " << s.stored << "\n";
    return os.str();
}

} // namespace stor::dp

#endif
