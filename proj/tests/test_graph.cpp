#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stor/graph.hpp"
#include "stor/oracle.hpp"
#include "test_support.hpp"

using namespace stor;

TEST_CASE("acyclicity") {
    CHECK(is_acyclic(Digraph::from_arcs(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_acyclic(Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})));
    CHECK(is_acyclic(Digraph::from_arcs(0, {})));
}

TEST_CASE("acyclicity agrees with exhaustive cycle search on all digraphs with up to 4 vertices") {
    for (int n = 0; n <= 4; n++) {
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < n; u++)
            for (int v = 0; v < n; v++)
                if (u != v) all.push_back({u, v});
        for (long mask = 0; mask < (1L << all.size()); mask++) {
            std::vector<std::pair<int, int>> arcs;
            for (size_t i = 0; i < all.size(); i++)
                if (mask >> i & 1) arcs.push_back(all[i]);
            Digraph d = Digraph::from_arcs(n, arcs);
            REQUIRE(is_acyclic(d) == !support::has_cycle_exhaustive(d));
        }
    }
}

TEST_CASE("source and sink census") {
    {
        auto [src, snk] = sources_and_sinks(Digraph::from_arcs(3, {{0, 1}, {1, 2}}));
        CHECK(src == std::vector<int>{0});
        CHECK(snk == std::vector<int>{2});
    }
    {
        // oriented C4: s -> a, s -> b, a -> t, b -> t
        auto [src, snk] = sources_and_sinks(Digraph::from_arcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
        CHECK(src == std::vector<int>{0});
        CHECK(snk == std::vector<int>{3});
    }
    {
        auto [src, snk] = sources_and_sinks(Digraph::from_arcs(2, {}));
        CHECK(src == std::vector<int>{0, 1});
        CHECK(snk == std::vector<int>{0, 1});
    }
}

TEST_CASE("transitive edges by deletion reachability") {
    {
        auto r = transitive_edges(Digraph::from_arcs(3, {{0, 1}, {1, 2}, {0, 2}}));
        CHECK(r.count == 1);
        REQUIRE(r.witness.size() == 1);
        CHECK(r.witness[0] == std::pair<int, int>{0, 2});
    }
    CHECK(transitive_edges(Digraph::from_arcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})).count == 0);
    {
        // K4 oriented by vertex order 0 < 1 < 2 < 3
        auto r = transitive_edges(
            Digraph::from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
        CHECK(r.count == 3);
        std::set<std::pair<int, int>> w(r.witness.begin(), r.witness.end());
        CHECK(w == std::set<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
    }
}

TEST_CASE("deletion-DFS count equals closure-matrix count on random digraphs") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 1000; trial++) {
        int n = 2 + static_cast<int>(rng() % 9); // up to 10
        Digraph d = support::random_digraph(n, rng);
        REQUIRE(transitive_edges(d).count == support::transitive_count_closure(d));
    }
}

TEST_CASE("two-step closure shortcut matches on acyclic digraphs") {
    std::mt19937_64 rng(4711);
    int done = 0;
    while (done < 300) {
        int n = 2 + static_cast<int>(rng() % 9);
        Digraph d = support::random_digraph(n, rng);
        if (!is_acyclic(d)) continue;
        done++;
        REQUIRE(transitive_edges(d).count == support::transitive_count_twostep(d));
    }
}

TEST_CASE("transitive count is invariant under vertex relabeling") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; trial++) {
        int n = 2 + static_cast<int>(rng() % 8);
        Digraph d = support::random_digraph(n, rng);
        std::vector<int> perm(n);
        for (int i = 0; i < n; i++) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> arcs;
        for (auto [u, v] : d.arcs) arcs.push_back({perm[u], perm[v]});
        REQUIRE(transitive_edges(d).count == transitive_edges(Digraph::from_arcs(n, arcs)).count);
    }
}

TEST_CASE("verdicts") {
    UndirectedGraph p3 = support::path_graph(3);
    Instance inst;
    inst.graph = p3;
    inst.s = 0;
    inst.t = 2;
    inst.k = 0;
    Orientation o{{0, 0}};
    Verdict v = check_st_orientation(inst, o);
    CHECK(v.pass);
    CHECK(format_verdict(v) == "PASS acyclic=1 sources=1 sinks=3 transitive=0");

    UndirectedGraph k3 = support::complete_graph(3);
    // brute force over all 8 orientations: the best achievable is 1
    long best = -1;
    for (int mask = 0; mask < 8; mask++) {
        Orientation ko{{static_cast<uint8_t>(mask & 1), static_cast<uint8_t>(mask >> 1 & 1),
                        static_cast<uint8_t>(mask >> 2 & 1)}};
        Instance ki;
        ki.graph = k3;
        ki.k = 3;
        Verdict kv = check_st_orientation(ki, ko);
        if (kv.pass && (best < 0 || kv.transitive_count < best)) best = kv.transitive_count;
    }
    CHECK(best == 1);
    {
        Instance ki;
        ki.graph = k3;
        Orientation ko{{0, 0, 0}}; // 0->1, 1->2, 0->2
        ki.k = 0;
        CHECK_FALSE(check_st_orientation(ki, ko).pass);
        ki.k = 1;
        CHECK(check_st_orientation(ki, ko).pass);
    }
    {
        // C4 oriented as a directed cycle
        UndirectedGraph c4 = support::cycle_graph(4);
        Instance ci;
        ci.graph = c4;
        ci.k = 4;
        Orientation co{{0, 0, 0, 1}}; // 0->1,1->2,2->3,3->0
        Verdict cv = check_st_orientation(ci, co);
        CHECK_FALSE(cv.acyclic);
        CHECK_FALSE(cv.pass);
    }
    {
        // a degree-0 vertex is both source and sink
        UndirectedGraph g(3);
        g.add_edge(0, 1);
        Instance gi;
        gi.graph = g;
        gi.k = 0;
        Orientation go{{0}};
        CHECK_FALSE(check_st_orientation(gi, go).pass);
    }
    {
        // non-total orientation is a distinct error
        Instance pi;
        pi.graph = p3;
        Orientation bad{{0}};
        CHECK_THROWS_AS(check_st_orientation(pi, bad), std::invalid_argument);
    }
}

TEST_CASE("pass implies the reversed orientation with swapped terminals passes") {
    std::mt19937_64 rng(555);
    int found = 0;
    while (found < 100) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> all;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++) all.push_back({i, j});
        std::shuffle(all.begin(), all.end(), rng);
        int m = n - 1 + static_cast<int>(rng() % 3);
        if (m > static_cast<int>(all.size())) continue;
        UndirectedGraph g(n);
        for (int i = 0; i < m; i++) g.add_edge(all[i].first, all[i].second);
        if (!g.is_connected()) continue;
        Instance inst;
        inst.graph = g;
        inst.k = m;
        Orientation o;
        for (int i = 0; i < m; i++) o.dir.push_back(rng() % 2);
        Verdict v = check_st_orientation(inst, o);
        if (!v.pass) continue;
        found++;
        Instance rev = inst;
        rev.s = v.sinks[0];
        rev.t = v.sources[0];
        Orientation ro;
        for (uint8_t d : o.dir) ro.dir.push_back(d ^ 1);
        Verdict rv = check_st_orientation(rev, ro);
        REQUIRE(rv.pass);
        REQUIRE(rv.transitive_count == v.transitive_count);
    }
}

TEST_CASE("graph file format") {
    UndirectedGraph p3 = parse_graph(std::string("c comment\np st 3 2\ne 1 2\ne 2 3\n"));
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));
    CHECK_FALSE(p3.has_edge(0, 2));

    std::string canonical = "p st 3 2\ne 1 2\ne 2 3\n";
    CHECK(serialize_graph(p3) == canonical);
    CHECK(serialize_graph(parse_graph(std::string("p st 3 2\ne 2 3\ne 2 1\n"))) == canonical);

    CHECK_THROWS_WITH_AS(parse_graph(std::string("p st 2 1\ne 1 1\n")), doctest::Contains("self-loop"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph(std::string("p st 2 2\ne 1 2\ne 2 1\n")), doctest::Contains("duplicate"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph(std::string("p st 2 1\ne 1 3\n")), doctest::Contains("out of range"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph(std::string("p graph 2 1\ne 1 2\n")), doctest::Contains("malformed header"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_graph(std::string("p st 3 2\ne 1 2\n")), doctest::Contains("count mismatch"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_graph(std::string("e 1 2\n")), std::runtime_error);
}

TEST_CASE("orientation file format") {
    UndirectedGraph p3 = support::path_graph(3);
    Orientation o = parse_orientation(p3, std::string("a 2 1\na 2 3\n"));
    CHECK(o.tail(p3, 0) == 1);
    CHECK(o.head(p3, 0) == 0);
    CHECK(serialize_orientation(p3, o) == "a 2 1\na 2 3\n");
    CHECK_THROWS_WITH_AS(parse_orientation(p3, std::string("a 1 2\n")), doctest::Contains("incomplete"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_orientation(p3, std::string("a 1 2\na 2 1\na 2 3\n")),
                         doctest::Contains("twice"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_orientation(p3, std::string("a 1 3\na 1 2\na 2 3\n")),
                         doctest::Contains("non-edge"), std::runtime_error);
}

TEST_CASE("graph construction guards") {
    UndirectedGraph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
    CHECK_FALSE(g.is_connected());
    g.add_edge(1, 2);
    CHECK(g.is_connected());
}
