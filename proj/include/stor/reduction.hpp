#ifndef STOR_REDUCTION_HPP
#define STOR_REDUCTION_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stor/connectivity.hpp"
#include "stor/gadget_library.hpp"
#include "stor/graph.hpp"
#include "stor/nae3sat.hpp"

namespace stor {

/// A generated hard instance plus the bookkeeping the validators and tests
/// need: the designated terminals, the clause vertices, and the f vertex of
/// every fork gadget that was instantiated.
struct Reduction {
    UndirectedGraph g;
    int s = -1;
    int t = -1;
    std::vector<int> clause_vertices;
    std::vector<int> fork_f;
    int hub_vertex = -1; // the global hub vertex of the bounded-diameter variant
};

namespace detail {

// Chains k-1 forks into a split with k output edges. targets are the k
// vertices that receive the output edges, in order
// [tipr of F_1, ..., tipr of F_{k-1}, tipl of F_{k-1}].
// stem is the existing vertex carrying the input edge; when hub0 >= 0 the
// first fork's hub is merged onto it and e1 is assumed to exist already.
inline void build_fork_chain(UndirectedGraph& g, const GadgetSpec& fork, const std::string& prefix, int stem,
                             int hub0, const std::vector<int>& targets, std::vector<int>& fork_f_out) {
    const int k = static_cast<int>(targets.size());
    if (k < 2) throw std::invalid_argument("fork chain needs at least two outputs");
    int cur_stem = stem;
    for (int i = 0; i + 1 < k; i++) {
        std::map<std::string, int> bound;
        bound["stem"] = cur_stem;
        if (i == 0 && hub0 >= 0) bound["hub"] = hub0;
        bound["tipr"] = targets[i];
        if (i + 2 == k) bound["tipl"] = targets[k - 1];
        std::set<std::string> skip;
        if (i == 0 && hub0 >= 0) skip.insert("e1");
        auto ids = instantiate_gadget(g, fork, prefix + ":f" + std::to_string(i + 1), bound, skip);
        fork_f_out.push_back(ids.at("mid"));
        cur_stem = ids.at("tipl");
    }
}

// Unused polarity: the port edge ends at a vertex tapped from s and to t,
// which leaves the port free in both directions without coupling anything.
inline int build_absorber(UndirectedGraph& g, const std::string& prefix, int s, int t) {
    int d = add_labeled_vertex(g, prefix + ":sink");
    int sd = add_labeled_vertex(g, prefix + ":from_s");
    int td = add_labeled_vertex(g, prefix + ":to_t");
    g.add_edge(s, sd);
    g.add_edge(sd, d);
    g.add_edge(d, td);
    g.add_edge(td, t);
    return d;
}

} // namespace detail

/// The base construction: one variable gadget per variable sharing the
/// global s and t, one split gadget per used literal polarity, and one
/// degree-3 clause vertex per clause attached to one output edge of each of
/// its three literals' splits.
inline Reduction build_g_phi(const Nae3SatFormula& f, const GadgetLibrary& lib) {
    const GadgetSpec& variable = lib.get("variable");
    const GadgetSpec& fork = lib.get("fork");
    Reduction r;
    r.s = add_labeled_vertex(r.g, "s");
    r.t = add_labeled_vertex(r.g, "t");
    for (size_t c = 0; c < f.clauses.size(); c++)
        r.clause_vertices.push_back(add_labeled_vertex(r.g, "clause:" + std::to_string(c + 1)));

    // occurrences per literal polarity, in clause-then-slot order
    std::vector<std::vector<int>> pos(f.num_vars), neg(f.num_vars);
    for (size_t c = 0; c < f.clauses.size(); c++)
        for (int lit : f.clauses[c])
            (lit > 0 ? pos[lit - 1] : neg[-lit - 1]).push_back(static_cast<int>(c));

    for (int v = 0; v < f.num_vars; v++) {
        const std::string vname = "x" + std::to_string(v + 1);
        // decide where each port edge ends before pasting the variable gadget
        auto port_target = [&](const std::vector<int>& occ, const std::string& pol) -> int {
            if (occ.empty()) return detail::build_absorber(r.g, "absorb:" + vname + pol, r.s, r.t);
            if (occ.size() == 1) return r.clause_vertices[occ[0]];
            return add_labeled_vertex(r.g, "split:" + vname + pol + ":hub");
        };
        int px = port_target(pos[v], "+");
        int pn = port_target(neg[v], "-");
        std::map<std::string, int> bound{{"s", r.s}, {"t", r.t}, {"portx", px}, {"portxbar", pn}};
        auto ids = instantiate_gadget(r.g, variable, "var:" + vname, bound);
        r.fork_f.push_back(ids.at("midA"));
        r.fork_f.push_back(ids.at("midB"));
        auto build_split = [&](const std::vector<int>& occ, int port_hub, int out_vertex, const std::string& pol) {
            if (occ.size() < 2) return;
            std::vector<int> targets;
            for (int c : occ) targets.push_back(r.clause_vertices[c]);
            detail::build_fork_chain(r.g, fork, "split:" + vname + pol, out_vertex, port_hub, targets, r.fork_f);
        };
        build_split(pos[v], px, ids.at("outlA"), "+");
        build_split(neg[v], pn, ids.at("outlB"), "-");
    }
    return r;
}

/// Bounded-diameter variant: a hub vertex adjacent to the f vertex of every
/// fork, plus once-subdivided edges to s and to t. Every vertex ends within
/// distance 3 of the hub.
inline Reduction build_h_phi(const Nae3SatFormula& f, const GadgetLibrary& lib) {
    Reduction r = build_g_phi(f, lib);
    int hub = add_labeled_vertex(r.g, "g");
    for (int fv : r.fork_f) r.g.add_edge(hub, fv);
    int sg = add_labeled_vertex(r.g, "g:from_s");
    int tg = add_labeled_vertex(r.g, "g:to_t");
    r.g.add_edge(r.s, sg);
    r.g.add_edge(sg, hub);
    r.g.add_edge(hub, tg);
    r.g.add_edge(tg, r.t);
    r.hub_vertex = hub;
    return r;
}

/// Bounded-degree variant: remove s and t, give each component its own local
/// terminals carrying the old attachment edges, chain consecutive terminals,
/// connect consecutive components by one fork-to-fork edge, and reroute any
/// terminal of degree five or more through a fresh split gadget.
inline Reduction build_j_phi(const Nae3SatFormula& f, const GadgetLibrary& lib) {
    Reduction base = build_g_phi(f, lib);
    const GadgetSpec& fork = lib.get("fork");
    const int n = base.g.vertex_count();

    // components of the base graph without s and t
    std::vector<int> comp(n, -1);
    int h = 0;
    for (int v = 0; v < n; v++) {
        if (v == base.s || v == base.t || comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = h;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : base.g.neighbors(x))
                if (w != base.s && w != base.t && comp[w] < 0) {
                    comp[w] = h;
                    stack.push_back(w);
                }
        }
        h++;
    }

    Reduction r;
    std::vector<int> remap(n, -1);
    for (int v = 0; v < n; v++) {
        if (v == base.s || v == base.t) continue;
        remap[v] = add_labeled_vertex(r.g, base.g.labels[v]);
    }
    std::vector<int> si(h), ti(h);
    for (int i = 0; i < h; i++) {
        si[i] = add_labeled_vertex(r.g, "s" + std::to_string(i + 1));
        ti[i] = add_labeled_vertex(r.g, "t" + std::to_string(i + 1));
    }
    for (const Edge& e : base.g.edges()) {
        if (e.u == base.s || e.u == base.t || e.v == base.s || e.v == base.t) {
            int v = (e.u == base.s || e.u == base.t) ? e.v : e.u;
            int terminal = (e.u == base.s || e.v == base.s) ? si[comp[v]] : ti[comp[v]];
            r.g.add_edge(terminal, remap[v]);
        } else {
            r.g.add_edge(remap[e.u], remap[e.v]);
        }
    }
    for (int i = 0; i + 1 < h; i++) {
        r.g.add_edge(si[i], si[i + 1]);
        r.g.add_edge(ti[i], ti[i + 1]);
    }
    // one fork-to-fork edge between consecutive components
    std::vector<std::vector<int>> comp_f(h);
    for (int fv : base.fork_f) {
        r.fork_f.push_back(remap[fv]);
        comp_f[comp[fv]].push_back(remap[fv]);
    }
    for (auto& fs : comp_f) std::sort(fs.begin(), fs.end());
    std::set<int> used;
    for (int i = 0; i + 1 < h; i++) {
        int a = -1, b = -1;
        for (int fv : comp_f[i])
            if (!used.count(fv)) {
                a = fv;
                break;
            }
        for (int fv : comp_f[i + 1])
            if (!used.count(fv)) {
                b = fv;
                break;
            }
        if (a < 0 || b < 0)
            throw std::runtime_error("bounded-degree construction needs a spare fork gadget in every component");
        used.insert(a);
        used.insert(b);
        r.g.add_edge(a, b);
    }
    for (size_t c = 0; c < base.clause_vertices.size(); c++)
        r.clause_vertices.push_back(remap[base.clause_vertices[c]]);

    // degree cap: reroute all but one edge of any terminal of degree >= 5
    // through a split gadget, keeping the lexicographically smallest
    // neighbors on the split side
    std::vector<int> terminals;
    for (int i = 0; i < h; i++) {
        terminals.push_back(si[i]);
        terminals.push_back(ti[i]);
    }
    std::vector<char> drop(r.g.edge_count(), 0);
    struct Plan {
        int terminal;
        std::vector<int> targets;
    };
    std::vector<Plan> plans;
    for (int term : terminals) {
        int p = r.g.degree(term);
        if (p <= 4) continue;
        std::vector<int> nbs = r.g.neighbors(term);
        std::sort(nbs.begin(), nbs.end());
        Plan plan{term, {}};
        for (int i = 0; i + 1 < p; i++) {
            plan.targets.push_back(nbs[i]);
            int e = r.g.edge_index(term, nbs[i]);
            if (e < 0) throw std::logic_error("terminal neighbor without an edge");
            drop[e] = 1;
        }
        plans.push_back(plan);
    }
    if (!plans.empty()) {
        UndirectedGraph pruned(r.g.vertex_count());
        pruned.labels = r.g.labels;
        for (int e = 0; e < r.g.edge_count(); e++)
            if (!drop[e]) pruned.add_edge(r.g.edges()[e].u, r.g.edges()[e].v);
        r.g = std::move(pruned);
        int reroutes = 0;
        for (const Plan& plan : plans)
            detail::build_fork_chain(r.g, fork, "cap:" + std::to_string(++reroutes), plan.terminal, -1,
                                     plan.targets, r.fork_f);
    }
    r.s = si[0];
    r.t = ti[h - 1];
    return r;
}

} // namespace stor

#endif
