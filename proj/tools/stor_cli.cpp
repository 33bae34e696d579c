// st-orientation toolbox: exact solver, verifier, exhaustive oracle,
// solver-vs-oracle comparison, hard-instance generator, tree decomposer.
//
// Exit codes: 0 = yes/pass/agree, 1 = no/fail/disagree, 2 = usage or input
// errors. Stdout carries machine-parseable lines only; diagnostics go to
// stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stor/connectivity.hpp"
#include "stor/decomposition.hpp"
#include "stor/dp.hpp"
#include "stor/gadget_library.hpp"
#include "stor/graph.hpp"
#include "stor/nae3sat.hpp"
#include "stor/nice_decomposition.hpp"
#include "stor/oracle.hpp"
#include "stor/random_gen.hpp"
#include "stor/reduction.hpp"

namespace {

stor::UndirectedGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open graph file " + path);
    return stor::parse_graph(f);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

struct SolveArgs {
    std::string graph_file, td_file, stats_file, out_file;
    long k = -1;
    bool min = false;
    int s = 0, t = 0;
    bool have_s = false, have_t = false;
    int threads = 1;
};

int run_solve(const SolveArgs& a) {
    stor::UndirectedGraph g = load_graph(a.graph_file);
    if (!g.is_connected()) {
        std::cerr << "error: input graph is disconnected\n";
        return 2;
    }
    stor::Instance inst;
    inst.graph = g;
    if (a.have_s) {
        if (a.s < 1 || a.s > g.vertex_count()) {
            std::cerr << "error: --s out of range\n";
            return 2;
        }
        inst.s = a.s - 1;
    }
    if (a.have_t) {
        if (a.t < 1 || a.t > g.vertex_count()) {
            std::cerr << "error: --t out of range\n";
            return 2;
        }
        inst.t = a.t - 1;
    }
    if (inst.s && inst.t && *inst.s == *inst.t) {
        std::cerr << "error: --s and --t must differ\n";
        return 2;
    }
    bool minimize = a.min || a.k < 0;
    inst.k = a.k < 0 ? 0 : a.k;

    stor::TreeDecomposition td;
    if (!a.td_file.empty()) {
        std::ifstream f(a.td_file);
        if (!f) {
            std::cerr << "error: cannot open decomposition file " << a.td_file << "\n";
            return 2;
        }
        td = stor::parse_td(f);
        auto viol = stor::validate(td, g);
        if (!viol.empty()) {
            std::cerr << "error: decomposition does not match the graph:\n";
            for (const auto& v : viol) std::cerr << "  " << v.message << "\n";
            return 2;
        }
    } else {
        td = stor::heuristic_decompose(g);
    }
    stor::NiceTreeDecomposition ntd = stor::make_nice(td);

    stor::dp::SolveResult r = minimize ? stor::dp::solve_min(inst, ntd) : stor::dp::solve(inst, ntd);
    if (!a.stats_file.empty()) write_file(a.stats_file, stor::dp::format_stats(r.stats));
    if (!r.yes) {
        if (!r.diagnostic.empty()) std::cerr << "note: " << r.diagnostic << "\n";
        std::cout << "NO\n";
        return 1;
    }
    std::string orient = stor::serialize_orientation(g, r.orientation);
    if (minimize) std::cout << "min_transitive " << r.transitive_count << "\n";
    if (!a.out_file.empty())
        write_file(a.out_file, orient);
    else if (!minimize)
        std::cout << orient;
    return 0;
}

int run_verify(const std::string& graph_file, const std::string& orient_file, long k, bool have_s, int s,
               bool have_t, int t) {
    stor::UndirectedGraph g = load_graph(graph_file);
    std::ifstream f(orient_file);
    if (!f) {
        std::cerr << "error: cannot open orientation file " << orient_file << "\n";
        return 2;
    }
    stor::Orientation o = stor::parse_orientation(g, f);
    stor::Instance inst;
    inst.graph = g;
    inst.k = k;
    if (have_s) inst.s = s - 1;
    if (have_t) inst.t = t - 1;
    stor::Verdict v = stor::check_st_orientation(inst, o);
    std::cout << stor::format_verdict(v) << "\n";
    return v.pass ? 0 : 1;
}

int run_oracle(const std::string& graph_file, bool census, bool have_s, int s, bool have_t, int t, int cap,
               int threads) {
    stor::UndirectedGraph g = load_graph(graph_file);
    stor::Instance inst;
    inst.graph = g;
    if (have_s) inst.s = s - 1;
    if (have_t) inst.t = t - 1;
    stor::oracle::OracleResult r = stor::oracle::min_transitive(inst, cap, threads);
    if (!r.yes) {
        std::cout << "NO\n";
        return 1;
    }
    std::cout << "min_transitive " << r.min_count << "\n";
    if (census)
        for (auto [count, orientations] : r.census) std::cout << count << " " << orientations << "\n";
    return 0;
}

int compare_one(const stor::UndirectedGraph& g, int cap, int threads, long& agreed) {
    stor::Instance inst;
    inst.graph = g;
    auto orc = stor::oracle::min_transitive(inst, cap, threads);
    auto td = stor::heuristic_decompose(g);
    auto ntd = stor::make_nice(td);
    auto sr = stor::dp::solve_min(inst, ntd);
    bool ok = sr.yes == orc.yes && (!sr.yes || sr.transitive_count == orc.min_count);
    if (!ok) {
        std::cerr << "disagreement: solver " << (sr.yes ? std::to_string(sr.transitive_count) : "NO")
                  << " vs oracle " << (orc.yes ? std::to_string(orc.min_count) : "NO") << " on:\n";
        std::cout << stor::serialize_graph(g);
        return 1;
    }
    agreed++;
    return 0;
}

int run_generate(const std::string& cnf_file, const std::string& variant, const std::string& out_prefix,
                 const std::string& gadget_file) {
    std::ifstream f(cnf_file);
    if (!f) {
        std::cerr << "error: cannot open formula file " << cnf_file << "\n";
        return 2;
    }
    stor::Nae3SatFormula formula = stor::parse_cnf(f);
    stor::GadgetLibrary lib = stor::load_gadget_library(gadget_file);
    stor::Reduction red;
    if (variant == "g")
        red = stor::build_g_phi(formula, lib);
    else if (variant == "h")
        red = stor::build_h_phi(formula, lib);
    else if (variant == "j")
        red = stor::build_j_phi(formula, lib);
    else {
        std::cerr << "error: --variant must be g, h or j\n";
        return 2;
    }
    std::ostringstream gr;
    gr << "c s " << red.s + 1 << "\n"
       << "c t " << red.t + 1 << "\n"
       << stor::serialize_graph(red.g);
    write_file(out_prefix + ".gr", gr.str());
    std::ostringstream lb;
    for (int v = 0; v < red.g.vertex_count(); v++) lb << v + 1 << " " << red.g.labels[v] << "\n";
    write_file(out_prefix + ".labels", lb.str());
    std::cout << "s " << red.s + 1 << "\n"
              << "t " << red.t + 1 << "\n"
              << "n " << red.g.vertex_count() << "\n"
              << "m " << red.g.edge_count() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact st-orientation solving with a transitive-edge budget"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "solve an instance by dynamic programming over a tree decomposition");
    solve->add_option("graph", sa.graph_file, "graph file (p st format)")->required();
    solve->add_option("--td", sa.td_file, "use this tree decomposition instead of the built-in heuristic");
    auto* kopt = solve->add_option("--k", sa.k, "transitive edge budget (decision mode)");
    auto* mopt = solve->add_flag("--min", sa.min, "report the minimum number of transitive edges (default)");
    kopt->excludes(mopt);
    solve->add_option("--s", sa.s, "prescribed source (1-based)");
    solve->add_option("--t", sa.t, "prescribed sink (1-based)");
    solve->add_option("--stats", sa.stats_file, "write per-node record statistics to this file");
    solve->add_option("--out", sa.out_file, "write the orientation to this file");
    solve->add_option("--threads", sa.threads, "thread cap (solver runs sequentially)");

    std::string vg, vo;
    long vk = 0;
    int vs = 0, vt = 0;
    auto* verify = app.add_subcommand("verify", "verify an orientation against the instance constraints");
    verify->add_option("graph", vg)->required();
    verify->add_option("orientation", vo)->required();
    verify->add_option("--k", vk, "transitive edge budget (default 0)");
    auto* vsopt = verify->add_option("--s", vs, "prescribed source (1-based)");
    auto* vtopt = verify->add_option("--t", vt, "prescribed sink (1-based)");

    std::string og;
    bool ocensus = false;
    int os = 0, ot = 0, ocap = 24, othreads = 1;
    auto* orc = app.add_subcommand("oracle", "exhaustive minimum by enumerating all orientations");
    orc->add_option("graph", og)->required();
    orc->add_flag("--census", ocensus, "print `<count> <orientations>` lines");
    auto* osopt = orc->add_option("--s", os, "prescribed source (1-based)");
    auto* otopt = orc->add_option("--t", ot, "prescribed sink (1-based)");
    orc->add_option("--cap", ocap, "maximum free direction bits (default 24)");
    orc->add_option("--threads", othreads, "parallel enumeration threads");

    std::string cg;
    std::vector<long> crandom;
    int cthreads = 1, ccap = 24;
    auto* cmp = app.add_subcommand("compare", "run solver and oracle on the same instances");
    auto* cgopt = cmp->add_option("graph", cg, "graph file");
    auto* cropt = cmp->add_option("--random", crandom, "n m seed count: seeded random connected instances")
                      ->expected(4);
    cgopt->excludes(cropt);
    cmp->add_option("--threads", cthreads, "oracle threads");
    cmp->add_option("--cap", ccap, "oracle cap");

    std::string gcnf, gvariant = "g", gout = "instance", ggadgets = stor::default_gadget_library_path();
    auto* gen = app.add_subcommand("generate", "build a hard instance from a NAE-3-SAT formula");
    gen->add_option("cnf", gcnf, "formula file (p cnf, 3 literals per clause)")->required();
    gen->add_option("--variant", gvariant, "g (base), h (bounded diameter), j (bounded degree)");
    gen->add_option("--out", gout, "output prefix (default 'instance')");
    gen->add_option("--gadgets", ggadgets, "gadget library file");

    std::string dg, dout;
    auto* dec = app.add_subcommand("decompose", "min-fill heuristic tree decomposition");
    dec->add_option("graph", dg)->required();
    dec->add_option("--out", dout, "write the decomposition to this file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*solve) {
            sa.have_s = solve->count("--s") > 0;
            sa.have_t = solve->count("--t") > 0;
            sa.min = sa.min || solve->count("--k") == 0;
            return run_solve(sa);
        }
        if (*verify) return run_verify(vg, vo, vk, vsopt->count() > 0, vs, vtopt->count() > 0, vt);
        if (*orc) return run_oracle(og, ocensus, osopt->count() > 0, os, otopt->count() > 0, ot, ocap, othreads);
        if (*cmp) {
            long agreed = 0;
            if (cgopt->count() > 0) {
                int rc = compare_one(load_graph(cg), ccap, cthreads, agreed);
                if (rc) return 1;
                std::cout << agreed << "/1 agree\n";
                return 0;
            }
            if (crandom.size() != 4) {
                std::cerr << "error: compare needs a graph file or --random n m seed count\n";
                return 2;
            }
            std::mt19937_64 rng(static_cast<unsigned long long>(crandom[2]));
            long count = crandom[3];
            for (long i = 0; i < count; i++) {
                stor::UndirectedGraph g = stor::random_connected_graph(static_cast<int>(crandom[0]),
                                                                       static_cast<int>(crandom[1]), rng);
                int rc = compare_one(g, ccap, cthreads, agreed);
                if (rc) return 1;
            }
            std::cout << agreed << "/" << count << " agree\n";
            return 0;
        }
        if (*gen) return run_generate(gcnf, gvariant, gout, ggadgets);
        if (*dec) {
            stor::UndirectedGraph g = load_graph(dg);
            if (!g.is_connected()) {
                std::cerr << "error: input graph is disconnected\n";
                return 2;
            }
            stor::TreeDecomposition td = stor::heuristic_decompose(g);
            write_file(dout, stor::serialize_td(td, g.vertex_count()));
            std::cout << "width " << stor::width(td) << "\n";
            return 0;
        }
    } catch (const stor::oracle::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const stor::FormulaCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
