#ifndef STOR_ORACLE_HPP
#define STOR_ORACLE_HPP

#include <climits>
#include <functional>
#include <map>
#include <thread>

#include "stor/graph.hpp"

namespace stor::oracle {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    bool yes = false;
    long min_count = -1;
    Orientation witness;
    /// transitive count -> number of valid st-orientations achieving it
    std::map<long, long> census;
};

namespace detail {

// Orientation variables linked by parity constraints (union-find with parity).
// Node m is a virtual constant-zero node used to pin fixed edges.
struct ParityUF {
    std::vector<int> parent;
    std::vector<uint8_t> par; // parity to parent
    bool contradiction = false;

    explicit ParityUF(int n) : parent(n), par(n, 0) {
        for (int i = 0; i < n; i++) parent[i] = i;
    }
    std::pair<int, uint8_t> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [r, p] = find(parent[x]);
        parent[x] = r;
        par[x] ^= p;
        return {r, par[x]};
    }
    void merge(int a, int b, uint8_t parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != parity) contradiction = true;
            return;
        }
        parent[ra] = rb;
        par[ra] = pa ^ pb ^ parity;
    }
};

struct Prep {
    bool infeasible = false;     // no valid orientation can exist
    int free_bits = 0;           // number of independent direction choices
    std::vector<int> group;      // edge -> free-bit index, or -1 when pinned
    std::vector<uint8_t> parity; // edge dir = chosen_bit(group) ^ parity, or parity when pinned
};

// With prescribed s and t, edges at s (t) must leave (enter) them, and any
// other degree-2 vertex must have one edge in and one out. Every orientation
// pruned this way fails the verifier, so censuses stay exact.
inline Prep prepare(const Instance& inst) {
    const UndirectedGraph& g = inst.graph;
    const int m = g.edge_count();
    Prep prep;
    prep.group.assign(m, -1);
    prep.parity.assign(m, 0);
    if (!inst.s || !inst.t) {
        prep.free_bits = m;
        for (int i = 0; i < m; i++) {
            prep.group[i] = i;
            prep.parity[i] = 0;
        }
        return prep;
    }
    const int s = *inst.s, t = *inst.t;
    ParityUF uf(m + 1);
    const int zero = m;
    for (int i = 0; i < m; i++) {
        const Edge& e = g.edges()[i];
        if (e.u == s || e.v == s) uf.merge(i, zero, e.v == s ? 1 : 0);
        if (e.u == t || e.v == t) uf.merge(i, zero, e.u == t ? 1 : 0);
    }
    for (int w = 0; w < g.vertex_count(); w++) {
        if (w == s || w == t) continue;
        if (g.degree(w) == 1) {
            prep.infeasible = true; // forced second source or sink
            return prep;
        }
        if (g.degree(w) != 2) continue;
        int a = g.neighbors(w)[0], b = g.neighbors(w)[1];
        int i = g.edge_index(a, w), j = g.edge_index(w, b);
        uint8_t c0i = g.edges()[i].v == w ? 1 : 0;
        uint8_t c0j = g.edges()[j].v == w ? 1 : 0;
        uf.merge(i, j, 1 ^ c0i ^ c0j);
    }
    if (uf.contradiction) {
        prep.infeasible = true;
        return prep;
    }
    std::map<int, int> root_to_bit;
    auto [zr, zp] = uf.find(zero);
    for (int i = 0; i < m; i++) {
        auto [r, p] = uf.find(i);
        if (r == zr) {
            prep.group[i] = -1;
            prep.parity[i] = p ^ zp; // relative to the zero node
        } else {
            auto it = root_to_bit.find(r);
            if (it == root_to_bit.end()) it = root_to_bit.emplace(r, prep.free_bits++).first;
            prep.group[i] = it->second;
            prep.parity[i] = p;
        }
    }
    return prep;
}

inline Orientation decode(const Prep& prep, unsigned long long mask) {
    Orientation o;
    o.dir.resize(prep.group.size());
    for (size_t i = 0; i < prep.group.size(); i++) {
        uint8_t bit = prep.group[i] < 0 ? 0 : static_cast<uint8_t>((mask >> prep.group[i]) & 1);
        o.dir[i] = bit ^ prep.parity[i];
    }
    return o;
}

} // namespace detail

/// Enumerates every valid st-orientation of the instance (budget ignored) in
/// a fixed canonical order and hands each to fn together with its verdict.
inline void for_each_valid(const Instance& inst, int cap,
                           const std::function<void(const Orientation&, const Verdict&)>& fn) {
    detail::Prep prep = detail::prepare(inst);
    if (prep.infeasible) return;
    if (prep.free_bits > cap)
        throw CapExceeded("orientation space too large: " + std::to_string(prep.free_bits) +
                          " free direction bits exceed cap " + std::to_string(cap));
    Instance shape = inst;
    shape.k = LONG_MAX;
    const unsigned long long total = 1ULL << prep.free_bits;
    for (unsigned long long mask = 0; mask < total; mask++) {
        Orientation o = detail::decode(prep, mask);
        Verdict v = check_st_orientation(shape, o);
        if (v.pass) fn(o, v);
    }
}

/// Exact minimum transitive-edge count over all valid st-orientations, with a
/// witness and the full census. Exhaustive, capped, optionally threaded by
/// splitting the enumeration space on high-order bits.
inline OracleResult min_transitive(const Instance& inst, int cap = 24, int threads = 1) {
    detail::Prep prep = detail::prepare(inst);
    OracleResult res;
    if (prep.infeasible) return res;
    if (prep.free_bits > cap)
        throw CapExceeded("orientation space too large: " + std::to_string(prep.free_bits) +
                          " free direction bits exceed cap " + std::to_string(cap));
    Instance shape = inst;
    shape.k = LONG_MAX;
    const unsigned long long total = 1ULL << prep.free_bits;
    const int nthreads = std::max(1, std::min(threads, 64));

    struct Partial {
        std::map<long, long> census;
        long best = -1;
        unsigned long long best_mask = 0;
    };
    std::vector<Partial> parts(nthreads);
    auto run = [&](int ti) {
        Partial& p = parts[ti];
        for (unsigned long long mask = ti; mask < total; mask += nthreads) {
            Orientation o = detail::decode(prep, mask);
            Verdict v = check_st_orientation(shape, o);
            if (!v.pass) continue;
            p.census[v.transitive_count]++;
            if (p.best < 0 || v.transitive_count < p.best ||
                (v.transitive_count == p.best && mask < p.best_mask)) {
                p.best = v.transitive_count;
                p.best_mask = mask;
            }
        }
    };
    if (nthreads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int ti = 0; ti < nthreads; ti++) pool.emplace_back(run, ti);
        for (auto& th : pool) th.join();
    }
    long best = -1;
    unsigned long long best_mask = 0;
    for (const Partial& p : parts) {
        for (auto [c, cnt] : p.census) res.census[c] += cnt;
        if (p.best >= 0 && (best < 0 || p.best < best || (p.best == best && p.best_mask < best_mask))) {
            best = p.best;
            best_mask = p.best_mask;
        }
    }
    if (best < 0) return res;
    res.yes = true;
    res.min_count = best;
    res.witness = detail::decode(prep, best_mask);
    return res;
}

/// Decision wrapper: does g admit an st-orientation with source s, sink t and
/// zero transitive edges?
inline bool exists_nontransitive(const UndirectedGraph& g, int s, int t, int cap = 24) {
    Instance inst;
    inst.graph = g;
    inst.s = s;
    inst.t = t;
    inst.k = 0;
    OracleResult r = min_transitive(inst, cap);
    return r.yes && r.min_count == 0;
}

} // namespace stor::oracle

#endif
