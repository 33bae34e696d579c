#ifndef STOR_GADGET_LIBRARY_HPP
#define STOR_GADGET_LIBRARY_HPP

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stor/graph.hpp"

namespace stor {

/// One gadget: named vertices, named edges, boundary ports (edges whose
/// designated endpoint is merged into the host), and marked vertices.
struct GadgetSpec {
    struct GEdge {
        std::string name;
        int a, b;
    };
    struct Port {
        std::string role; // input, output, extra, x, xbar
        std::string edge;
        std::string boundary; // the boundary endpoint's vertex name
    };

    std::string name;
    std::vector<std::string> vnames;
    std::map<std::string, int> vindex;
    std::vector<GEdge> edges;
    std::vector<Port> ports;
    std::vector<std::pair<std::string, std::string>> marks; // key, vertex name

    int vertex(const std::string& vn) const {
        auto it = vindex.find(vn);
        if (it == vindex.end()) throw std::runtime_error("gadget " + name + ": unknown vertex " + vn);
        return it->second;
    }
    const GEdge& edge(const std::string& en) const {
        for (const GEdge& e : edges)
            if (e.name == en) return e;
        throw std::runtime_error("gadget " + name + ": unknown edge " + en);
    }
    std::vector<std::string> marked(const std::string& key) const {
        std::vector<std::string> out;
        for (const auto& [k, v] : marks)
            if (k == key) out.push_back(v);
        return out;
    }
    const Port& port(const std::string& role) const {
        for (const Port& p : ports)
            if (p.role == role) return p;
        throw std::runtime_error("gadget " + name + ": no port with role " + role);
    }
};

struct GadgetLibrary {
    std::map<std::string, GadgetSpec> gadgets;
    const GadgetSpec& get(const std::string& n) const {
        auto it = gadgets.find(n);
        if (it == gadgets.end()) throw std::runtime_error("gadget library has no gadget named " + n);
        return it->second;
    }
};

/// Library file format, one gadget per block:
///   gadget <name>
///   vertex <v1> <v2> ...
///   edge <ename> <va> <vb>
///   port <role> <ename> <boundary-vertex>
///   mark <key> <vertex>
///   end
/// Lines starting with '#' are comments.
inline GadgetLibrary parse_gadget_library(std::istream& is) {
    GadgetLibrary lib;
    GadgetSpec cur;
    bool open = false;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("gadget library line " + std::to_string(lineno) + ": " + msg);
        };
        if (tag == "gadget") {
            if (open) fail("nested gadget block");
            cur = GadgetSpec{};
            if (!(ls >> cur.name)) fail("missing gadget name");
            open = true;
        } else if (tag == "vertex") {
            if (!open) fail("vertex outside gadget block");
            std::string vn;
            while (ls >> vn) {
                if (cur.vindex.count(vn)) fail("duplicate vertex " + vn);
                cur.vindex[vn] = static_cast<int>(cur.vnames.size());
                cur.vnames.push_back(vn);
            }
        } else if (tag == "edge") {
            if (!open) fail("edge outside gadget block");
            std::string en, va, vb;
            if (!(ls >> en >> va >> vb)) fail("malformed edge line");
            cur.edges.push_back({en, cur.vertex(va), cur.vertex(vb)});
        } else if (tag == "port") {
            if (!open) fail("port outside gadget block");
            GadgetSpec::Port p;
            if (!(ls >> p.role >> p.edge >> p.boundary)) fail("malformed port line");
            cur.edge(p.edge);
            cur.vertex(p.boundary);
            cur.ports.push_back(p);
        } else if (tag == "mark") {
            if (!open) fail("mark outside gadget block");
            std::string key, vn;
            if (!(ls >> key >> vn)) fail("malformed mark line");
            cur.vertex(vn);
            cur.marks.push_back({key, vn});
        } else if (tag == "end") {
            if (!open) fail("end outside gadget block");
            lib.gadgets[cur.name] = cur;
            open = false;
        } else {
            fail("unknown tag " + tag);
        }
    }
    if (open) throw std::runtime_error("gadget library: unterminated gadget block");
    return lib;
}

inline GadgetLibrary load_gadget_library(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open gadget library file " + path);
    return parse_gadget_library(f);
}

inline std::string default_gadget_library_path() {
#ifdef STOR_GADGET_FILE
    return STOR_GADGET_FILE;
#else
    return "data/gadget_library.txt";
#endif
}

/// Adds a vertex carrying a label, keeping the label vector in sync.
inline int add_labeled_vertex(UndirectedGraph& g, const std::string& label) {
    g.labels.resize(g.vertex_count());
    int id = g.add_vertex();
    g.labels.push_back(label);
    return id;
}

/// Pastes a gadget into g. `bound` maps gadget vertex names onto existing
/// host vertices (merging); all other vertices become fresh, labeled
/// `<prefix>:<name>`. Edges named in `skip` are assumed to exist already.
/// Returns the full vertex-name-to-id map.
inline std::map<std::string, int> instantiate_gadget(UndirectedGraph& g, const GadgetSpec& spec,
                                                     const std::string& prefix,
                                                     const std::map<std::string, int>& bound,
                                                     const std::set<std::string>& skip = {}) {
    std::map<std::string, int> ids = bound;
    for (const std::string& vn : spec.vnames)
        if (!ids.count(vn)) ids[vn] = add_labeled_vertex(g, prefix + ":" + vn);
    for (const auto& e : spec.edges) {
        if (skip.count(e.name)) continue;
        g.add_edge(ids.at(spec.vnames[e.a]), ids.at(spec.vnames[e.b]));
    }
    return ids;
}

} // namespace stor

#endif
