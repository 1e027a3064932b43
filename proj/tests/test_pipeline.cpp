#include <doctest.h>

#include <map>
#include <set>

#include "hamlg/io.hpp"
#include "hamlg/pipeline.hpp"
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

PipelineConfig relaxed() {
    PipelineConfig cfg;
    cfg.minDegree = 0;
    cfg.connectivity = 1;
    cfg.heavy = 1;
    return cfg;
}

std::multiset<EdgeId> edgeMultiset(const ClosedWalk& w) {
    return {w.edges.begin(), w.edges.end()};
}

}  // namespace

TEST_CASE("heavy_set") {
    SUBCASE("all blacks of IG(K28) are heavy at the default threshold") {
        auto ig = build_incidence_graph(generate_complete(28));
        auto t = heavy_set(ig);
        REQUIRE(static_cast<int>(t.size()) == 28);
        for (int i = 0; i < 28; ++i) CHECK(t[i] == i);
    }
    SUBCASE("threshold filters by black degree") {
        // degrees: v0 in 2 hyperedges, v1 in 2, v2 in 1, v3 in 1.
        auto h = fromSets(4, {{0, 1, 2}, {0, 1, 3}});
        auto ig = build_incidence_graph(h);
        CHECK(heavy_set(ig, 2) == std::vector<VertexId>{0, 1});
        CHECK(heavy_set(ig, 1) == std::vector<VertexId>{0, 1, 2, 3});
        CHECK(heavy_set(ig, 3).empty());
    }
}

TEST_CASE("check_hypotheses") {
    SUBCASE("K28 meets the theorem thresholds") {
        auto r = check_hypotheses(generate_complete(28));
        CHECK_FALSE(r.degenerate);
        CHECK(r.lineMinDegree == 52);
        CHECK(r.minDegreeOk);
        CHECK(r.connectivityLowerBound == 18);
        CHECK(r.connectivityOk);
        CHECK(r.heavyCoverOk);
        CHECK(r.pass());
    }
    SUBCASE("triangle fails the degree hypothesis") {
        auto h = fromSets(3, {{0, 1}, {1, 2}, {2, 0}});
        auto r = check_hypotheses(h);
        CHECK(r.lineMinDegree == 2);
        CHECK_FALSE(r.minDegreeOk);
        CHECK_FALSE(r.pass());
    }
    SUBCASE("ineligible input throws") {
        CHECK_THROWS_AS(check_hypotheses(fromSets(1, {{0}})), std::invalid_argument);
    }
}

TEST_CASE("combine_connectors") {
    SUBCASE("two internally disjoint T-paths combine to a cycle") {
        MultiGraph g(4);
        EdgeId e0 = g.addEdge(0, 1), e1 = g.addEdge(1, 2);
        EdgeId e2 = g.addEdge(0, 3), e3 = g.addEdge(3, 2);
        TConnector a1{{Path{{0, 1, 2}, {e0, e1}}}};
        TConnector a2{{Path{{0, 3, 2}, {e2, e3}}}};
        auto c = combine_connectors(g, a1, a2, {0, 2});
        CHECK(c.edgeCount() == 4);
        for (EdgeId e : {e0, e1, e2, e3}) CHECK(c.hasEdge(e));
        for (int d : c.degrees()) CHECK(d % 2 == 0);
        CHECK(edges_connected(c));
    }
    SUBCASE("contract holds on searched connectors") {
        int combined = 0;
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            auto g = oracles::randomMultigraph(seed, 6, 14);
            auto t = oracles::randomSubset(seed, 6, 3);
            auto r = find_edge_disjoint_T_connectors(g, t, 2);
            if (r.status != ConnectorSearchStatus::Found) continue;
            ++combined;
            auto c = combine_connectors(g, r.connectors[0], r.connectors[1], t);
            auto deg = c.degrees();
            std::set<EdgeId> allowed;
            for (const auto& conn : r.connectors)
                for (EdgeId e : conn.edgeSet()) allowed.insert(e);
            std::vector<VertexId> carriers;
            for (const Edge& e : c.edges()) {
                CHECK(allowed.count(e.id));  // subset of A1 u A2
            }
            for (VertexId v = 0; v < c.vertexCount(); ++v) {
                CHECK(deg[v] % 2 == 0);  // even everywhere
                if (deg[v] > 0) carriers.push_back(v);
            }
            CHECK(edges_connected(c));
            for (VertexId x : t) CHECK(deg[x] > 0);  // covers T
        }
        CHECK(combined > 20);
    }
    SUBCASE("rejects edge-sharing inputs") {
        MultiGraph g(3);
        EdgeId a = g.addEdge(0, 1), b = g.addEdge(1, 2);
        TConnector one{{Path{{0, 1, 2}, {a, b}}}};
        CHECK_THROWS_AS(combine_connectors(g, one, one, {0, 2}), std::invalid_argument);
    }
}

TEST_CASE("closed_trail_of") {
    SUBCASE("6-cycle") {
        MultiGraph g(6);
        for (int i = 0; i < 6; ++i) g.addEdge(i, (i + 1) % 6);
        auto w = closed_trail_of(g);
        CHECK(w.length() == 6);
        CHECK(is_closed_walk_in_graph(g, w));
        CHECK(w.vertices[0] == 0);
    }
    SUBCASE("two triangles sharing a vertex") {
        MultiGraph g(5);
        g.addEdge(0, 1);
        g.addEdge(1, 2);
        g.addEdge(2, 0);
        g.addEdge(0, 3);
        g.addEdge(3, 4);
        g.addEdge(4, 0);
        auto w = closed_trail_of(g);
        CHECK(w.length() == 6);
        CHECK(is_closed_walk_in_graph(g, w));
        std::set<EdgeId> seen(w.edges.begin(), w.edges.end());
        CHECK(seen.size() == 6);  // each edge exactly once
    }
    SUBCASE("edge multiset property on doubled random graphs") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto base = oracles::randomMultigraph(seed, 5, 7);
            MultiGraph g(base.vertexCount());
            for (const Edge& e : base.edges()) {
                g.addEdge(e.u, e.v);
                g.addEdge(e.u, e.v);
            }
            if (!edges_connected(g)) continue;
            auto w = closed_trail_of(g);
            CHECK(is_closed_walk_in_graph(g, w));
            std::multiset<EdgeId> expect;
            for (const Edge& e : g.edges()) expect.insert(e.id);
            CHECK(edgeMultiset(w) == expect);
        }
    }
    SUBCASE("rejects odd or disconnected input") {
        MultiGraph path(3);
        path.addEdge(0, 1);
        path.addEdge(1, 2);
        CHECK_THROWS_AS(closed_trail_of(path), std::invalid_argument);
        CHECK_THROWS_AS(closed_trail_of(MultiGraph(2)), std::invalid_argument);
    }
}

TEST_CASE("insert_detours on a missed white") {
    // Three parallel hyperedges {a,b}: IG is K_{2,3} with blacks 0,1 and
    // whites 2,3,4. A 4-cycle through whites 2,3 misses white 4.
    auto h = fromSets(2, {{0, 1}, {0, 1}, {0, 1}});
    auto ig = build_incidence_graph(h);
    std::set<EdgeId> cycleEdges;
    for (const Edge& e : ig.graph.edges())
        if (e.u == 4 || e.v == 4) continue;
        else cycleEdges.insert(e.id);
    auto c = ig.graph.edgeSubgraph(cycleEdges);
    auto trail = closed_trail_of(c);
    REQUIRE(trail.length() == 4);

    auto det = insert_detours(trail, ig, {0, 1});
    REQUIRE(det.ok);
    CHECK(det.walk.length() == 6);
    CHECK(is_closed_walk_in_graph(ig.graph, det.walk));
    // The detour doubles one black-4 edge right after the anchor's first visit.
    std::map<VertexId, int> visits;
    for (VertexId v : det.walk.vertices) ++visits[v];
    CHECK(visits[4] == 1);
    auto report = validate_W_quasitrail(det.walk, ig.graph, {2, 3, 4});
    CHECK(report.isQuasitrail);
    CHECK(report.isDominating);
}

TEST_CASE("validate_W_quasitrail") {
    auto h = fromSets(3, {{0, 1}, {1, 2}, {2, 0}});
    auto ig = build_incidence_graph(h);
    std::vector<VertexId> whites{3, 4, 5};
    SUBCASE("the 6-cycle itself is a dominating quasitrail") {
        auto w = closed_trail_of(ig.graph);
        auto r = validate_W_quasitrail(w, ig.graph, whites);
        CHECK(r.isClosedWalk);
        CHECK(r.isQuasitrail);
        CHECK(r.isDominating);
        CHECK(r.violations.empty());
        for (const auto& [e, c] : r.edgeUseCounts) CHECK(c == 1);
    }
    SUBCASE("non-walks are reported, not thrown") {
        ClosedWalk bogus{{0, 2}, {0, 1}};
        auto r = validate_W_quasitrail(bogus, ig.graph, whites);
        CHECK_FALSE(r.isClosedWalk);
        CHECK_FALSE(r.isQuasitrail);
        CHECK_FALSE(r.violations.empty());
    }
    SUBCASE("W degree outside {2,3} violates the precondition") {
        MultiGraph g(2);
        g.addEdge(0, 1);
        ClosedWalk w{{0, 1}, {0, 0}};
        CHECK_THROWS_AS(validate_W_quasitrail(w, g, {1}), std::invalid_argument);
    }
}

TEST_CASE("quasitrail_to_hamilton") {
    SUBCASE("triangle hypergraph: 6-cycle quasitrail reads off the cycle") {
        auto h = fromSets(3, {{0, 1}, {1, 2}, {2, 0}});
        auto ig = build_incidence_graph(h);
        auto w = closed_trail_of(ig.graph);
        auto conv = quasitrail_to_hamilton(w, h);
        REQUIRE(conv.ok);
        CHECK(conv.cycle.size() == 3);
        CHECK(verify_hamilton_cycle(build_line_graph(h), conv.cycle));
    }
    SUBCASE("invalid quasitrail throws") {
        auto h = fromSets(3, {{0, 1}, {1, 2}, {2, 0}});
        CHECK_THROWS_AS(quasitrail_to_hamilton(ClosedWalk{{0, 1}, {0, 0}}, h),
                        std::invalid_argument);
    }
}

TEST_CASE("verify_hamilton_cycle") {
    auto h = fromSets(3, {{0, 1}, {1, 2}, {2, 0}});
    auto lg = build_line_graph(h);
    CHECK(verify_hamilton_cycle(lg, {0, 1, 2}));
    CHECK(verify_hamilton_cycle(lg, {2, 0, 1}));
    CHECK_FALSE(verify_hamilton_cycle(lg, {0, 1}));        // misses a vertex
    CHECK_FALSE(verify_hamilton_cycle(lg, {0, 1, 1}));     // repeats
    auto disjoint = build_line_graph(fromSets(6, {{0, 1}, {2, 3}, {4, 5}}));
    CHECK_FALSE(verify_hamilton_cycle(disjoint, {0, 1, 2}));  // non-adjacent steps
}

TEST_CASE("hamiltonian_oracle") {
    SUBCASE("5-cycle") {
        MultiGraph g(5);
        for (int i = 0; i < 5; ++i) g.addEdge(i, (i + 1) % 5);
        auto r = hamiltonian_oracle(g);
        REQUIRE(r.status == OracleStatus::Hamiltonian);
        CHECK(r.cycle.size() == 5);
    }
    SUBCASE("path is not Hamiltonian") {
        MultiGraph g(3);
        g.addEdge(0, 1);
        g.addEdge(1, 2);
        CHECK(hamiltonian_oracle(g).status == OracleStatus::NonHamiltonian);
    }
    SUBCASE("Petersen graph is not Hamiltonian") {
        MultiGraph g(10);
        for (int i = 0; i < 5; ++i) {
            g.addEdge(i, (i + 1) % 5);        // outer 5-cycle
            g.addEdge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
            g.addEdge(i, 5 + i);              // spokes
        }
        CHECK(hamiltonian_oracle(g).status == OracleStatus::NonHamiltonian);
    }
    SUBCASE("tiny budget reports exhaustion") {
        MultiGraph g(6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) g.addEdge(i, j);
        CHECK(hamiltonian_oracle(g, 2).status == OracleStatus::BudgetExhausted);
    }
}

TEST_CASE("certify") {
    SUBCASE("triangle at theorem thresholds refuses at the hypotheses") {
        auto h = fromSets(3, {{0, 1}, {1, 2}, {2, 0}});
        auto cert = certify(h);
        CHECK_FALSE(cert.verified);
        CHECK(cert.theoremMode);
        CHECK(cert.refusalStage == "hypotheses");
        CHECK_FALSE(cert.refusalReason.empty());
    }
    SUBCASE("triangle relaxed refuses at the connector search with proof") {
        // L(triangle) is Hamiltonian, but IG is a 6-cycle: two edge-disjoint
        // spanning connectors would need 8 of its 6 edges. The refusal is
        // about the method, not the answer.
        auto h = fromSets(3, {{0, 1}, {1, 2}, {2, 0}});
        auto cert = certify(h, relaxed());
        CHECK_FALSE(cert.verified);
        CHECK_FALSE(cert.theoremMode);
        CHECK(cert.refusalStage == "connectors");
        CHECK(cert.refusalReason.find("nonexistence") != std::string::npos);
    }
    SUBCASE("K6 relaxed verifies and the oracle agrees") {
        auto h = generate_complete(6);
        auto cert = certify(h, relaxed());
        REQUIRE(cert.verified);
        CHECK(cert.refusalStage.empty());
        CHECK(cert.hamiltonCycle.size() == 15);
        auto lg = build_line_graph(h);
        CHECK(verify_hamilton_cycle(lg, cert.hamiltonCycle));
        CHECK(hamiltonian_oracle(lg.graph).status == OracleStatus::Hamiltonian);
    }
    SUBCASE("ineligible input refuses at eligibility") {
        auto cert = certify(fromSets(1, {{0}}), relaxed());
        CHECK_FALSE(cert.verified);
        CHECK(cert.refusalStage == "eligibility");
    }
    SUBCASE("k < 2 is rejected up front") {
        PipelineConfig cfg = relaxed();
        cfg.k = 1;
        CHECK_THROWS_AS(certify(generate_complete(4), cfg), std::invalid_argument);
    }
    SUBCASE("soundness on random inputs under relaxed thresholds") {
        int verifiedSeen = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            RandomSpec spec{4 + static_cast<int>(seed % 3), 5 + static_cast<int>(seed % 4),
                            0.4, seed};
            auto h = generate_random(spec);
            if (!validate_hypergraph(h).pipelineEligible) continue;
            auto cert = certify(h, relaxed());
            if (cert.verified) {
                ++verifiedSeen;
                auto lg = build_line_graph(h);
                CHECK(verify_hamilton_cycle(lg, cert.hamiltonCycle));
                auto oracle = hamiltonian_oracle(lg.graph);
                CHECK(oracle.status == OracleStatus::Hamiltonian);
            } else {
                CHECK_FALSE(cert.refusalStage.empty());
                CHECK_FALSE(cert.refusalReason.empty());
                CHECK(cert.refusalStage != "internal");
            }
        }
        CHECK(verifiedSeen > 5);
    }
    SUBCASE("every verified run records the full stage ladder") {
        auto cert = certify(generate_complete(6), relaxed());
        REQUIRE(cert.verified);
        REQUIRE(cert.stages.size() == 11);
        for (const auto& [name, status] : cert.stages) CHECK(status == "ok");
        CHECK(cert.stages.front().first == "eligibility");
        CHECK(cert.stages.back().first == "verification");
    }
}
