#ifndef STOR_GRAPH_HPP
#define STOR_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stor {

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
    int u;
    int v;
};

inline bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }

/// Simple undirected graph over dense vertex ids 0..n-1.
/// No self-loops, no parallel edges. External file formats are 1-based.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : n_(n), adj_(n) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    int add_vertex() {
        adj_.emplace_back();
        return n_++;
    }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = index_.find({u, v});
        return it == index_.end() ? -1 : it->second;
    }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        if (index_.count({u, v})) throw std::invalid_argument("duplicate edge");
        index_[{u, v}] = static_cast<int>(edges_.size());
        edges_.push_back({u, v});
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    cnt++;
                    stack.push_back(w);
                }
        }
        return cnt == n_;
    }

    /// Optional vertex labels, empty or size n. Used by the reduction generator.
    std::vector<std::string> labels;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::map<std::pair<int, int>, int> index_;
};

/// Direction assignment, one bit per edge of the underlying graph.
/// dir[i] == 0 means edges[i].u -> edges[i].v, 1 means the reverse.
struct Orientation {
    std::vector<uint8_t> dir;

    int tail(const UndirectedGraph& g, int i) const { return dir[i] ? g.edges()[i].v : g.edges()[i].u; }
    int head(const UndirectedGraph& g, int i) const { return dir[i] ? g.edges()[i].u : g.edges()[i].v; }
};

/// Directed graph over dense vertex ids; simple (no loops, no duplicate arcs).
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
        Digraph d;
        d.n = n;
        d.out.assign(n, {});
        d.in.assign(n, {});
        std::map<std::pair<int, int>, bool> seen;
        for (auto [u, v] : arcs) {
            if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("arc endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop arc");
            if (seen.count({u, v})) throw std::invalid_argument("duplicate arc");
            seen[{u, v}] = true;
            d.arcs.push_back({u, v});
            d.out[u].push_back(v);
            d.in[v].push_back(u);
        }
        return d;
    }
};

/// The digraph induced by applying an orientation to every edge.
inline Digraph oriented(const UndirectedGraph& g, const Orientation& o) {
    if (static_cast<int>(o.dir.size()) != g.edge_count())
        throw std::invalid_argument("orientation does not cover all edges");
    Digraph d;
    d.n = g.vertex_count();
    d.out.assign(d.n, {});
    d.in.assign(d.n, {});
    d.arcs.reserve(g.edge_count());
    for (int i = 0; i < g.edge_count(); i++) {
        int t = o.tail(g, i), h = o.head(g, i);
        d.arcs.push_back({t, h});
        d.out[t].push_back(h);
        d.in[h].push_back(t);
    }
    return d;
}

inline Digraph reversed(const Digraph& d) {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(d.arcs.size());
    for (auto [u, v] : d.arcs) rev.push_back({v, u});
    return Digraph::from_arcs(d.n, rev);
}

/// Kahn's algorithm; true iff d has no directed cycle.
inline bool is_acyclic(const Digraph& d) {
    std::vector<int> indeg(d.n, 0);
    for (auto& [u, v] : d.arcs) indeg[v]++;
    std::vector<int> queue;
    for (int v = 0; v < d.n; v++)
        if (indeg[v] == 0) queue.push_back(v);
    int done = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        done++;
        for (int w : d.out[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return done == d.n;
}

/// (in-degree 0 vertices, out-degree 0 vertices), ascending. A degree-0
/// vertex appears in both.
inline std::pair<std::vector<int>, std::vector<int>> sources_and_sinks(const Digraph& d) {
    std::vector<int> sources, sinks;
    for (int v = 0; v < d.n; v++) {
        if (d.in[v].empty()) sources.push_back(v);
        if (d.out[v].empty()) sinks.push_back(v);
    }
    return {sources, sinks};
}

struct TransitiveReport {
    long count = 0;
    std::vector<std::pair<int, int>> witness;
};

namespace detail {

// DFS from src avoiding one arc; returns true if dst is reached.
inline bool reaches_avoiding(const Digraph& d, int src, int dst, int skip_tail, int skip_head,
                             std::vector<char>& seen, std::vector<int>& stack) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    stack.push_back(src);
    seen[src] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : d.out[v]) {
            if (v == skip_tail && w == skip_head) continue;
            if (seen[w]) continue;
            if (w == dst) return true;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    return false;
}

} // namespace detail

/// An arc uv is transitive when v is still reachable from u with the arc
/// removed. Per-arc deletion DFS over adjacency lists.
inline TransitiveReport transitive_edges(const Digraph& d) {
    TransitiveReport r;
    std::vector<char> seen(d.n);
    std::vector<int> stack;
    for (auto [u, v] : d.arcs) {
        if (detail::reaches_avoiding(d, u, v, u, v, seen, stack)) {
            r.count++;
            r.witness.push_back({u, v});
        }
    }
    return r;
}

/// Problem input: graph, optional prescribed source/sink, transitive budget.
struct Instance {
    UndirectedGraph graph;
    std::optional<int> s;
    std::optional<int> t;
    long k = 0;
};

struct Verdict {
    bool acyclic = false;
    std::vector<int> sources;
    std::vector<int> sinks;
    long transitive_count = 0;
    std::vector<std::pair<int, int>> transitive_witness;
    bool pass = false;
};

/// Full verdict for one orientation: acyclicity, source/sink census,
/// transitive count with witness, and the overall pass flag.
/// Throws std::invalid_argument when o is not total over the edges.
inline Verdict check_st_orientation(const Instance& inst, const Orientation& o) {
    const UndirectedGraph& g = inst.graph;
    if (static_cast<int>(o.dir.size()) != g.edge_count())
        throw std::invalid_argument("orientation does not cover all edges");
    Digraph d = oriented(g, o);
    Verdict v;
    v.acyclic = is_acyclic(d);
    std::tie(v.sources, v.sinks) = sources_and_sinks(d);
    bool shape_ok = v.acyclic && v.sources.size() == 1 && v.sinks.size() == 1;
    // A degree-0 vertex is both source and sink; the problem wants them distinct.
    if (shape_ok && v.sources[0] == v.sinks[0]) shape_ok = false;
    if (shape_ok && inst.s && v.sources[0] != *inst.s) shape_ok = false;
    if (shape_ok && inst.t && v.sinks[0] != *inst.t) shape_ok = false;
    // Transitive edges are counted regardless, the verdict line reports them.
    TransitiveReport tr = transitive_edges(d);
    v.transitive_count = tr.count;
    v.transitive_witness = std::move(tr.witness);
    v.pass = shape_ok && v.transitive_count <= inst.k;
    return v;
}

// ---------------------------------------------------------------------------
// File formats. Graphs: optional `c` comment lines, one `p st <n> <m>` header,
// then `e <u> <v>` lines with 1-based ids. Orientations: `a <tail> <head>`,
// one line per input edge, any order.
// ---------------------------------------------------------------------------

inline UndirectedGraph parse_graph(std::istream& is) {
    std::string line;
    bool have_header = false;
    int n = 0, m = 0, read_edges = 0;
    UndirectedGraph g;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate header");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "st" || n < 0 || m < 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": malformed header, expected 'p st <n> <m>'");
            g = UndirectedGraph(n);
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header) throw std::runtime_error("line " + std::to_string(lineno) + ": edge before header");
            long u, v;
            if (!(ls >> u >> v)) throw std::runtime_error("line " + std::to_string(lineno) + ": malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                throw std::runtime_error("line " + std::to_string(lineno) + ": vertex id out of range");
            if (u == v) throw std::runtime_error("line " + std::to_string(lineno) + ": self-loop");
            if (g.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
                throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate edge");
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            read_edges++;
            continue;
        }
        throw std::runtime_error("line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
    }
    if (!have_header) throw std::runtime_error("missing header 'p st <n> <m>'");
    if (read_edges != m) throw std::runtime_error("edge count mismatch: header says " + std::to_string(m) +
                                                  ", found " + std::to_string(read_edges));
    return g;
}

inline UndirectedGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

/// Canonical form: header then edges sorted ascending, 1-based.
inline std::string serialize_graph(const UndirectedGraph& g) {
    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    std::ostringstream os;
    os << "p st " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : es) os << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    return os.str();
}

inline Orientation parse_orientation(const UndirectedGraph& g, std::istream& is) {
    Orientation o;
    o.dir.assign(g.edge_count(), 0);
    std::vector<char> set(g.edge_count(), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag != "a") throw std::runtime_error("line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
        long u, v;
        if (!(ls >> u >> v)) throw std::runtime_error("line " + std::to_string(lineno) + ": malformed arc line");
        if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
            throw std::runtime_error("line " + std::to_string(lineno) + ": vertex id out of range");
        int ui = static_cast<int>(u - 1), vi = static_cast<int>(v - 1);
        int idx = g.edge_index(ui, vi);
        if (idx < 0) throw std::runtime_error("line " + std::to_string(lineno) + ": arc over a non-edge");
        if (set[idx]) throw std::runtime_error("line " + std::to_string(lineno) + ": edge oriented twice");
        set[idx] = 1;
        o.dir[idx] = (g.edges()[idx].u == ui) ? 0 : 1;
    }
    for (int i = 0; i < g.edge_count(); i++)
        if (!set[i])
            throw std::runtime_error("incomplete orientation: edge " + std::to_string(g.edges()[i].u + 1) + " " +
                                     std::to_string(g.edges()[i].v + 1) + " has no direction");
    return o;
}

inline Orientation parse_orientation(const UndirectedGraph& g, const std::string& text) {
    std::istringstream is(text);
    return parse_orientation(g, is);
}

inline std::string serialize_orientation(const UndirectedGraph& g, const Orientation& o) {
    std::ostringstream os;
    for (int i = 0; i < g.edge_count(); i++)
        os << "a " << o.tail(g, i) + 1 << " " << o.head(g, i) + 1 << "\n";
    return os.str();
}

/// Machine-readable verdict line:
/// `PASS|FAIL acyclic=<0|1> sources=<list> sinks=<list> transitive=<count>`
inline std::string format_verdict(const Verdict& v) {
    auto list = [](const std::vector<int>& xs) {
        std::string s;
        for (size_t i = 0; i < xs.size(); i++) {
            if (i) s += ",";
            s += std::to_string(xs[i] + 1);
        }
        return s;
    };
    std::ostringstream os;
    os << (v.pass ? "PASS" : "FAIL") << " acyclic=" << (v.acyclic ? 1 : 0) << " sources=" << list(v.sources)
       << " sinks=" << list(v.sinks) << " transitive=" << v.transitive_count;
    return os.str();
}

} // namespace stor

#endif
