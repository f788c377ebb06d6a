#include "lpa/graph.hpp"

#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#include <catch2/catch.hpp>

#include <set>

using namespace lpa;

TEST_CASE("load_graph parses the line format and orders by id") {
    const Graph g = fixtures::e1_graph();
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 2);
    CHECK(g.vertex_id(0) == "v1");
    CHECK(g.vertex_id(1) == "v2");
    CHECK(g.vertex_id(2) == "v3");
    CHECK(g.edge_id(0) == "e1");
    CHECK(g.vertex_id(g.edge_source(g.edge("e1"))) == "v1");
    CHECK(g.vertex_id(g.edge_range(g.edge("e1"))) == "v2");
    CHECK(g.vertex_id(g.edge_source(g.edge("e2"))) == "v2");

    const Graph single = load_graph("vertex u");
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    // comments, blank lines, flexible spacing
    const Graph spaced = load_graph("# header\n\nvertex b\nvertex a\nedge  z :  b ->a # trailing\n");
    CHECK(spaced.vertex_id(0) == "a");
    CHECK(spaced.vertex_id(1) == "b");
    CHECK(spaced.edge_count() == 1);
}

TEST_CASE("load_graph rejects malformed input with line numbers") {
    CHECK_THROWS_AS(load_graph("edge e1: v1 -> v9"), ParseError);
    try {
        load_graph("vertex v1\nedge e1: v1 -> v9");
    } catch (const ParseError& e) {
        CHECK(e.location() == 2);
        CHECK(std::string(e.what()).find("v9") != std::string::npos);
    }
    CHECK_THROWS_AS(load_graph("vertex v1; vertex v1"), ParseError);
    CHECK_THROWS_AS(load_graph("vertex v1; edge v1: v1 -> v1"), ParseError); // shared namespace
    CHECK_THROWS_AS(load_graph("vertex 1v"), ParseError);
    CHECK_THROWS_AS(load_graph(""), ParseError);
    CHECK_THROWS_AS(load_graph("vertex v1; edge e1 v1 -> v1"), ParseError);
    CHECK_THROWS_AS(load_graph("frob v1"), ParseError);
}

TEST_CASE("serialization round-trip is stable") {
    for (const Graph& g : {fixtures::e1_graph(), fixtures::e2_graph(), fixtures::loop_exit_graph(),
                           fixtures::zigzag_graph()}) {
        const Graph back = load_graph(graph_to_string(g));
        CHECK(back.same(g));
    }
}

TEST_CASE("sinks") {
    auto names = [](const Graph& g) {
        std::set<std::string> out;
        for (VertexIdx v : g.sinks()) out.insert(g.vertex_id(v));
        return out;
    };
    CHECK(names(fixtures::e1_graph()) == std::set<std::string>{"v3"});
    CHECK(names(fixtures::e2_graph()) == std::set<std::string>{"w3"});
    CHECK(names(fixtures::loop_graph()).empty());
}

TEST_CASE("enumerate_paths") {
    const Graph e1 = fixtures::e1_graph();
    auto render = [](const Graph& g, const std::vector<Path>& ps) {
        std::vector<std::string> out;
        for (const Path& p : ps) out.push_back(path_to_string(g, p));
        return out;
    };
    CHECK(render(e1, enumerate_paths(e1, 2)) ==
          std::vector<std::string>{"v1", "v2", "v3", "e1", "e2", "e1 e2"});
    CHECK(render(e1, enumerate_paths(e1, 0)) == std::vector<std::string>{"v1", "v2", "v3"});

    const Graph loop = fixtures::loop_graph();
    CHECK(render(loop, enumerate_paths(loop, 3)) ==
          std::vector<std::string>{"u", "c", "c c", "c c c"});
}

TEST_CASE("path enumeration invariants on random graphs") {
    oracle::Rng rng(7001);
    for (int it = 0; it < 25; ++it) {
        const Graph g = oracle::random_graph(rng);
        const std::size_t max_len = 3;
        for (const Path& p : enumerate_paths(g, max_len)) {
            REQUIRE(is_valid_path(g, p));
            REQUIRE(p.length() <= max_len);
        }
        // sinks and emitters partition the vertex set
        const auto sinks = g.sinks();
        std::set<VertexIdx> sink_set(sinks.begin(), sinks.end());
        for (VertexIdx v = 0; v < g.vertex_count(); ++v)
            CHECK(sink_set.count(v) == (g.out_edges(v).empty() ? 1 : 0));
    }
}

TEST_CASE("condition (L)") {
    CHECK(condition_L(fixtures::e1_graph()));
    CHECK_FALSE(condition_L(fixtures::loop_graph()));
    CHECK(condition_L(fixtures::loop_exit_graph()));
}

TEST_CASE("condition (L) is invariant under relabeling") {
    oracle::Rng rng(7002);
    for (int it = 0; it < 20; ++it) {
        const Graph g = oracle::random_graph(rng);
        std::string relabeled;
        for (VertexIdx v = 0; v < g.vertex_count(); ++v)
            relabeled += "vertex zz" + g.vertex_id(v) + "\n";
        for (EdgeIdx e = 0; e < g.edge_count(); ++e)
            relabeled += "edge yy" + g.edge_id(e) + ": zz" + g.vertex_id(g.edge_source(e)) + " -> zz" +
                         g.vertex_id(g.edge_range(e)) + "\n";
        CHECK(condition_L(g) == condition_L(load_graph(relabeled)));
    }
}

TEST_CASE("condition (L) at desk scale") {
    // 12-vertex ring with chords: one simple cycle per chord pair plus the ring
    std::string text;
    for (int i = 1; i <= 12; ++i) text += "vertex n" + std::to_string(i) + "\n";
    for (int i = 1; i <= 12; ++i)
        text += "edge r" + std::to_string(i) + ": n" + std::to_string(i) + " -> n" +
                std::to_string(i % 12 + 1) + "\n";
    text += "edge chord1: n1 -> n7\nedge chord2: n4 -> n10\n";
    const Graph ring = load_graph(text);
    CHECK(condition_L(ring)); // every cycle passes a vertex with a second way out

    std::string bare;
    for (int i = 1; i <= 12; ++i) bare += "vertex n" + std::to_string(i) + "\n";
    for (int i = 1; i <= 12; ++i)
        bare += "edge r" + std::to_string(i) + ": n" + std::to_string(i) + " -> n" +
                std::to_string(i % 12 + 1) + "\n";
    CHECK_FALSE(condition_L(load_graph(bare)));
}

TEST_CASE("simple cycle enumeration sees parallel routes") {
    const Graph two_loops = load_graph("vertex u; edge c: u -> u; edge d: u -> u");
    CHECK(simple_cycles(two_loops).size() == 2);
    CHECK(condition_L(two_loops)); // each loop exits through the other
    const Graph fig8 = load_graph("vertex u; vertex w; edge a: u -> w; edge b: w -> u");
    CHECK(simple_cycles(fig8).size() == 1);
    CHECK_FALSE(condition_L(fig8));
}
