#include <doctest.h>

#include "hamlg/hypergraph.hpp"
#include "hamlg/io.hpp"
#include "oracles.hpp"

using namespace hamlg;

namespace {

Hypergraph fromSets(int nVertices, std::vector<std::vector<VertexId>> sets) {
    Hypergraph h;
    for (int i = 0; i < nVertices; ++i) h.vertexLabels.push_back("v" + std::to_string(i));
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        h.hyperedges.push_back({s});
    }
    return h;
}

}  // namespace

TEST_CASE("validate_hypergraph") {
    SUBCASE("well-formed rank-3") {
        auto h = fromSets(3, {{0, 1, 2}, {1, 2}});
        auto r = validate_hypergraph(h);
        CHECK(r.valid);
        CHECK(r.pipelineEligible);
    }
    SUBCASE("singleton hyperedge is valid but not eligible") {
        auto h = fromSets(1, {{0}});
        auto r = validate_hypergraph(h);
        CHECK(r.valid);
        CHECK_FALSE(r.pipelineEligible);
        REQUIRE_FALSE(r.issues.empty());
        CHECK(r.issues[0].find("singleton") != std::string::npos);
    }
    SUBCASE("empty hyperedge is invalid") {
        auto h = fromSets(2, {{}});
        auto r = validate_hypergraph(h);
        CHECK_FALSE(r.valid);
        CHECK_FALSE(r.pipelineEligible);
        CHECK(r.issues[0].find("empty") != std::string::npos);
    }
    SUBCASE("rank 4 is valid but not eligible") {
        auto h = fromSets(4, {{0, 1, 2, 3}});
        auto r = validate_hypergraph(h);
        CHECK(r.valid);
        CHECK_FALSE(r.pipelineEligible);
    }
}

TEST_CASE("rank") {
    CHECK(rank(fromSets(3, {{0, 1, 2}, {0, 1}})) == 3);
    CHECK(rank(fromSets(2, {{0, 1}})) == 2);
    CHECK(rank(fromSets(0, {})) == 0);
}

TEST_CASE("build_line_graph") {
    SUBCASE("triangle hypergraph gives a triangle") {
        auto h = fromSets(3, {{0, 1}, {1, 2}, {2, 0}});
        auto lg = build_line_graph(h);
        CHECK(lg.graph.vertexCount() == 3);
        CHECK(lg.graph.edgeCount() == 3);
        CHECK(lg.graph.adjacent(0, 1));
        CHECK(lg.graph.adjacent(1, 2));
        CHECK(lg.graph.adjacent(0, 2));
    }
    SUBCASE("disjoint hyperedges give isolated vertices") {
        auto h = fromSets(4, {{0, 1}, {2, 3}});
        auto lg = build_line_graph(h);
        CHECK(lg.graph.vertexCount() == 2);
        CHECK(lg.graph.edgeCount() == 0);
    }
    SUBCASE("pairwise intersecting triples give a triangle") {
        auto h = fromSets(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
        auto lg = build_line_graph(h);
        CHECK(lg.graph.edgeCount() == 3);
    }
    SUBCASE("duplicate hyperedges are distinct line-graph vertices") {
        auto h = fromSets(3, {{0, 1, 2}, {0, 1, 2}});
        auto lg = build_line_graph(h);
        CHECK(lg.graph.vertexCount() == 2);
        CHECK(lg.graph.edgeCount() == 1);  // simple: one edge per intersecting pair
    }
}

TEST_CASE("build_incidence_graph") {
    SUBCASE("single triple gives a star with white center of degree 3") {
        auto h = fromSets(3, {{0, 1, 2}});
        auto ig = build_incidence_graph(h);
        CHECK(ig.graph.vertexCount() == 4);
        CHECK(ig.graph.degree(ig.whiteVertex(0)) == 3);
        CHECK(ig.graph.edgeCount() == 3);
    }
    SUBCASE("triangle hypergraph gives a 6-cycle") {
        auto h = fromSets(3, {{0, 1}, {1, 2}, {2, 0}});
        auto ig = build_incidence_graph(h);
        CHECK(ig.graph.edgeCount() == 6);
        auto deg = ig.graph.degrees();
        for (VertexId v = 0; v < ig.graph.vertexCount(); ++v) CHECK(deg[v] == 2);
        CHECK(edges_connected(ig.graph));
    }
    SUBCASE("edge count equals sum of hyperedge sizes") {
        auto h = fromSets(5, {{0, 1, 2}, {2, 3}, {3, 4}});
        CHECK(build_incidence_graph(h).graph.edgeCount() == 7);
    }
}

TEST_CASE("has_induced_star") {
    SUBCASE("explicit star") {
        MultiGraph g(5);
        for (int i = 1; i < 5; ++i) g.addEdge(0, i);
        CHECK(has_induced_star(g, 4));
        auto w = induced_star_witness(g, 4);
        REQUIRE(w.has_value());
        CHECK((*w)[0] == 0);
    }
    SUBCASE("5-cycle has no K_{1,3}") {
        MultiGraph g(5);
        for (int i = 0; i < 5; ++i) g.addEdge(i, (i + 1) % 5);
        CHECK_FALSE(has_induced_star(g, 3));
    }
}

TEST_CASE("structural invariants on random rank-3 hypergraphs") {
    int eligibleSeen = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RandomSpec spec{5 + static_cast<int>(seed % 4), 4 + static_cast<int>(seed % 5), 0.5,
                        seed};
        auto h = generate_random(spec);
        auto report = validate_hypergraph(h);
        REQUIRE(report.valid);

        auto lg = build_line_graph(h);
        CHECK(lg.graph.vertexCount() == h.hyperedgeCount());

        // Rank <= 3 implies K_{1,4}-freeness of the line graph.
        CHECK(rank(h) <= 3);
        CHECK_FALSE(has_induced_star(lg.graph, 4));

        auto ig = build_incidence_graph(h);
        // 2-colorability with the black/white classes.
        for (const Edge& e : ig.graph.edges())
            CHECK(ig.isBlack(e.u) != ig.isBlack(e.v));
        if (report.pipelineEligible) {
            ++eligibleSeen;
            auto deg = ig.graph.degrees();
            for (VertexId w = ig.blackCount; w < ig.graph.vertexCount(); ++w)
                CHECK((deg[w] == 2 || deg[w] == 3));
        }
    }
    CHECK(eligibleSeen > 20);
}
