#include "hamlg/pipeline.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace hamlg {
namespace {

bool inSet(const std::vector<VertexId>& sorted, VertexId v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

std::vector<VertexId> heavy_set(const IncidenceGraph& ig, int threshold) {
    auto deg = ig.graph.degrees();
    std::vector<VertexId> heavy;
    for (VertexId v = 0; v < ig.blackCount; ++v)
        if (deg[v] >= threshold) heavy.push_back(v);
    return heavy;
}

HypothesisReport check_hypotheses(const Hypergraph& h, const PipelineConfig& cfg) {
    auto validation = validate_hypergraph(h);
    if (!validation.pipelineEligible)
        throw std::invalid_argument("hypergraph is not pipeline-eligible");

    HypothesisReport rep;
    LineGraph lg = build_line_graph(h);
    int m = lg.graph.vertexCount();

    if (m < 3) {
        rep.degenerate = true;
        rep.degenerateReasons.push_back("line graph has fewer than 3 vertices");
        return rep;
    }
    if (static_cast<int>(reachable_from(lg.graph, 0).size()) != m) {
        rep.degenerate = true;
        rep.degenerateReasons.push_back("line graph is disconnected");
        return rep;
    }

    auto deg = lg.graph.degrees();
    rep.lineMinDegree = *std::min_element(deg.begin(), deg.end());
    rep.minDegreeOk = rep.lineMinDegree >= cfg.minDegree;

    rep.connectivityLowerBound = vertex_connectivity_capped(lg.graph, cfg.connectivity);
    rep.connectivityOk = rep.connectivityLowerBound >= cfg.connectivity;

    IncidenceGraph ig = build_incidence_graph(h);
    auto igDeg = ig.graph.degrees();
    rep.heavyCoverOk = true;
    for (HyperedgeId j = 0; j < h.hyperedgeCount(); ++j) {
        bool covered = false;
        for (VertexId v : h.hyperedges[j].members)
            if (igDeg[v] >= cfg.heavy) {
                covered = true;
                break;
            }
        if (!covered) {
            rep.heavyCoverOk = false;
            rep.uncoveredHyperedges.push_back(j);
        }
    }
    return rep;
}

namespace {

// Shortest path between a and b inside `g`, neighbors explored in edge-id
// order.
std::optional<Path> shortestPath(const MultiGraph& g, VertexId a, VertexId b) {
    auto adj = g.adjacencyList();
    std::vector<int> parentVertex(g.vertexCount(), -1), parentEdge(g.vertexCount(), -1);
    std::vector<char> seen(g.vertexCount(), 0);
    std::queue<VertexId> q;
    seen[a] = 1;
    q.push(a);
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        if (x == b) break;
        for (const Edge& e : adj[x]) {
            VertexId y = e.other(x);
            if (seen[y]) continue;
            seen[y] = 1;
            parentVertex[y] = x;
            parentEdge[y] = e.id;
            q.push(y);
        }
    }
    if (!seen[b]) return std::nullopt;
    Path p;
    for (VertexId cur = b;; cur = parentVertex[cur]) {
        p.vertices.push_back(cur);
        if (cur == a) break;
        p.edges.push_back(parentEdge[cur]);
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

}  // namespace

MultiGraph combine_connectors(const MultiGraph& host, const TConnector& a1,
                              const TConnector& a2, const std::vector<VertexId>& terminals) {
    std::vector<VertexId> t(terminals);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());

    if (!verify_T_connector(host, t, a1.paths).ok || !verify_T_connector(host, t, a2.paths).ok)
        throw std::invalid_argument("inputs are not verified T-connectors");
    std::set<EdgeId> u1 = a1.edgeSet();
    std::set<EdgeId> u2 = a2.edgeSet();
    for (EdgeId e : u1)
        if (u2.count(e)) throw std::invalid_argument("connectors are not edge-disjoint");

    MultiGraph g1 = host.edgeSubgraph(u1);
    auto deg1 = g1.degrees();
    std::vector<VertexId> odd;
    for (VertexId v = 0; v < g1.vertexCount(); ++v)
        if (deg1[v] % 2 == 1) odd.push_back(v);
    for (VertexId v : odd)
        if (!inSet(t, v)) throw std::logic_error("odd-degree vertex outside T in connector");
    if (odd.size() % 2 != 0) throw std::logic_error("odd number of odd-degree vertices");

    // Pair ascending and join inside A2; the XOR of the pairing paths has
    // odd degree exactly at the paired vertices.
    MultiGraph g2 = host.edgeSubgraph(u2);
    std::set<EdgeId> diff;
    for (size_t i = 0; i + 1 < odd.size(); i += 2) {
        auto p = shortestPath(g2, odd[i], odd[i + 1]);
        if (!p)
            throw std::logic_error("pairing path missing inside second connector");
        for (EdgeId e : p->edges) {
            if (diff.count(e))
                diff.erase(e);
            else
                diff.insert(e);
        }
    }

    std::set<EdgeId> combined = u1;
    combined.insert(diff.begin(), diff.end());
    MultiGraph c = host.edgeSubgraph(combined);

    // The XOR can leave even closed components inside A2 that touch neither
    // T nor A1; only the component carrying T feeds the Euler trail.
    if (!edges_connected(c)) {
        DisjointSet uf(c.vertexCount());
        for (const Edge& e : c.edges()) uf.unite(e.u, e.v);
        int keepRoot = uf.find(t[0]);
        std::set<EdgeId> kept;
        for (const Edge& e : c.edges())
            if (uf.find(e.u) == keepRoot) kept.insert(e.id);
        c = host.edgeSubgraph(kept);
    }

    // Contract checks: connected, all-even, covers T, within A1 u A2.
    if (!edges_connected(c)) throw std::logic_error("combined subgraph disconnected");
    auto deg = c.degrees();
    for (VertexId v = 0; v < c.vertexCount(); ++v)
        if (deg[v] % 2 != 0) throw std::logic_error("combined subgraph has odd degree");
    for (VertexId v : t)
        if (deg[v] == 0) throw std::logic_error("combined subgraph misses a terminal");
    for (const Edge& e : c.edges())
        if (!u1.count(e.id) && !u2.count(e.id))
            throw std::logic_error("combined subgraph uses a foreign edge");
    return c;
}

ClosedWalk closed_trail_of(const MultiGraph& c, std::optional<VertexId> anchor) {
    if (c.edgeCount() == 0) throw std::invalid_argument("graph has no edges");
    auto deg = c.degrees();
    for (VertexId v = 0; v < c.vertexCount(); ++v)
        if (deg[v] % 2 != 0) throw std::invalid_argument("graph has an odd-degree vertex");
    if (!edges_connected(c)) throw std::invalid_argument("edges are not connected");

    VertexId start;
    if (anchor) {
        start = *anchor;
        if (start < 0 || start >= c.vertexCount() || deg[start] == 0)
            throw std::invalid_argument("anchor carries no edge");
    } else {
        start = 0;
        while (deg[start] == 0) ++start;
    }

    auto adj = c.adjacencyList();  // per vertex, ascending edge id
    std::vector<size_t> ptr(c.vertexCount(), 0);
    std::set<EdgeId> used;

    std::vector<VertexId> st{start};
    std::vector<EdgeId> edgeSt;
    std::vector<VertexId> circuitV;
    std::vector<EdgeId> circuitE;
    while (!st.empty()) {
        VertexId v = st.back();
        while (ptr[v] < adj[v].size() && used.count(adj[v][ptr[v]].id)) ++ptr[v];
        if (ptr[v] == adj[v].size()) {
            circuitV.push_back(v);
            st.pop_back();
            if (!edgeSt.empty() && st.size() == edgeSt.size()) {
                circuitE.push_back(edgeSt.back());
                edgeSt.pop_back();
            }
        } else {
            const Edge& f = adj[v][ptr[v]];
            used.insert(f.id);
            st.push_back(f.other(v));
            edgeSt.push_back(f.id);
        }
    }
    std::reverse(circuitV.begin(), circuitV.end());
    std::reverse(circuitE.begin(), circuitE.end());

    if (circuitE.size() != static_cast<size_t>(c.edgeCount()))
        throw std::logic_error("euler construction missed edges");
    circuitV.pop_back();  // drop the closing repeat of the anchor
    ClosedWalk walk{std::move(circuitV), std::move(circuitE)};
    if (!is_closed_walk_in_graph(c, walk)) throw std::logic_error("euler walk invalid");
    return walk;
}

namespace {

// Splice v,vw,w,wv,v at the first visit of v.
void spliceDetour(ClosedWalk& q, const IncidenceGraph& ig, VertexId w, VertexId v) {
    EdgeId eid = -1;
    for (const Edge& e : ig.graph.incidentEdges(w))
        if (e.other(w) == v) {
            eid = e.id;
            break;
        }
    if (eid < 0) throw std::logic_error("detour anchor not adjacent to white vertex");
    auto it = std::find(q.vertices.begin(), q.vertices.end(), v);
    if (it == q.vertices.end()) throw std::logic_error("detour anchor not on the walk");
    size_t i = static_cast<size_t>(it - q.vertices.begin());
    q.edges.insert(q.edges.begin() + i, {eid, eid});
    q.vertices.insert(q.vertices.begin() + i + 1, {w, v});
}

}  // namespace

DetourResult insert_detours(const ClosedWalk& trail, const IncidenceGraph& ig,
                            const std::vector<VertexId>& terminals) {
    if (!is_closed_walk_in_graph(ig.graph, trail))
        throw std::invalid_argument("not a closed walk in the incidence graph");
    std::vector<VertexId> t(terminals);
    std::sort(t.begin(), t.end());
    std::set<VertexId> visited(trail.vertices.begin(), trail.vertices.end());
    for (VertexId v : t)
        if (!visited.count(v))
            throw std::invalid_argument("trail misses a terminal vertex");

    DetourResult result;
    result.walk = trail;
    for (VertexId w = ig.blackCount; w < ig.graph.vertexCount(); ++w) {
        if (visited.count(w)) continue;
        VertexId anchor = -1;
        for (const Edge& e : ig.graph.incidentEdges(w)) {
            VertexId v = e.other(w);
            if (inSet(t, v)) {
                anchor = v;
                break;
            }
        }
        if (anchor < 0) {
            result.ok = false;
            result.failedWhite = w;
            return result;
        }
        spliceDetour(result.walk, ig, w, anchor);
        visited.insert(w);
    }
    return result;
}

QuasitrailReport validate_W_quasitrail(const ClosedWalk& q, const MultiGraph& g,
                                       const std::vector<VertexId>& w) {
    std::vector<VertexId> ws(w);
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    auto deg = g.degrees();
    for (VertexId v : ws) {
        if (v < 0 || v >= g.vertexCount()) throw std::invalid_argument("W vertex not in graph");
        if (deg[v] != 2 && deg[v] != 3)
            throw std::invalid_argument("W vertex of degree outside {2,3}");
    }

    QuasitrailReport rep;
    rep.isClosedWalk = is_closed_walk_in_graph(g, q);
    if (!rep.isClosedWalk) {
        rep.violations.push_back("not a closed walk");
        return rep;
    }
    size_t k = q.edges.size();

    std::map<VertexId, int> visitCount;
    std::map<VertexId, size_t> singleVisitPos;
    for (size_t i = 0; i < k; ++i) {
        ++visitCount[q.vertices[i]];
        singleVisitPos[q.vertices[i]] = i;
    }
    for (EdgeId e : q.edges) ++rep.edgeUseCounts[e];

    rep.isQuasitrail = true;
    for (const auto& [e, count] : rep.edgeUseCounts) {
        if (count > 2) {
            rep.isQuasitrail = false;
            rep.violations.push_back("edge " + std::to_string(e) + " traversed " +
                                     std::to_string(count) + " times");
            continue;
        }
        if (count != 2) continue;
        // Doubled edge: some W-endpoint visited once, with e as both its
        // predecessor and successor edge.
        const Edge& edge = g.edge(e);
        bool anchored = false;
        for (VertexId x : {edge.u, edge.v}) {
            if (!inSet(ws, x)) continue;
            if (visitCount[x] != 1) continue;
            size_t i = singleVisitPos[x];
            EdgeId pred = q.edges[(i + k - 1) % k];
            EdgeId succ = q.edges[i];
            if (pred == e && succ == e) {
                anchored = true;
                break;
            }
        }
        if (!anchored) {
            rep.isQuasitrail = false;
            rep.violations.push_back("doubled edge " + std::to_string(e) +
                                     " has no once-visited W anchor");
        }
    }

    rep.isDominating = true;
    for (const Edge& e : g.edges())
        if (!visitCount.count(e.u) && !visitCount.count(e.v)) {
            rep.isDominating = false;
            rep.violations.push_back("edge " + std::to_string(e.id) + " is not dominated");
        }
    return rep;
}

ConversionResult quasitrail_to_hamilton(const ClosedWalk& q, const Hypergraph& h,
                                        long long budget) {
    IncidenceGraph ig = build_incidence_graph(h);
    std::vector<VertexId> whites;
    for (VertexId v = ig.blackCount; v < ig.graph.vertexCount(); ++v) whites.push_back(v);
    QuasitrailReport pre = validate_W_quasitrail(q, ig.graph, whites);
    if (!pre.isClosedWalk || !pre.isQuasitrail || !pre.isDominating)
        throw std::invalid_argument("input is not a dominating closed W-quasitrail");

    ConversionResult result;
    int m = h.hyperedgeCount();
    if (m < 3) {
        result.error = "line graph has fewer than 3 vertices";
        return result;
    }

    // Detour to any dominated-but-unvisited white, anchored at its smallest
    // visited black neighbor.
    ClosedWalk walk = q;
    std::set<VertexId> visited(walk.vertices.begin(), walk.vertices.end());
    for (VertexId w : whites) {
        if (visited.count(w)) continue;
        VertexId anchor = -1;
        for (const Edge& e : ig.graph.incidentEdges(w)) {
            VertexId v = e.other(w);
            if (visited.count(v)) {
                anchor = v;
                break;
            }
        }
        if (anchor < 0) throw std::logic_error("dominated white vertex has no visited neighbor");
        spliceDetour(walk, ig, w, anchor);
        visited.insert(w);
    }

    // Bipartite alternation puts exactly one black between consecutive white
    // visits, so the cyclic white sequence has intersecting neighbors.
    std::vector<HyperedgeId> occ;
    for (VertexId v : walk.vertices)
        if (ig.isWhite(v)) occ.push_back(ig.whiteOrigin(v));

    LineGraph lg = build_line_graph(h);
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (const Edge& e : lg.graph.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

    if (static_cast<int>(occ.size()) == m) {
        result.cycle = occ;
    } else {
        // Keep exactly one occurrence per white so that consecutive kept
        // hyperedges still intersect.
        size_t total = occ.size();
        std::vector<int> remaining(m, 0);
        for (HyperedgeId e : occ) ++remaining[e];
        std::vector<char> kept(m, 0);
        std::vector<HyperedgeId> cycle;
        long long steps = 0;
        bool exhausted = false;

        auto dfs = [&](auto&& self, size_t pos) -> bool {
            if (++steps > budget) {
                exhausted = true;
                return false;
            }
            if (pos == total) {
                return static_cast<int>(cycle.size()) == m &&
                       adj[cycle.back()][cycle.front()];
            }
            HyperedgeId x = occ[pos];
            --remaining[x];
            // Keep first: the pipeline's own walks visit each white once.
            if (!kept[x] && (cycle.empty() || adj[cycle.back()][x])) {
                kept[x] = 1;
                cycle.push_back(x);
                if (self(self, pos + 1)) return true;
                if (exhausted) return false;
                cycle.pop_back();
                kept[x] = 0;
            }
            if (kept[x] || remaining[x] > 0) {
                if (self(self, pos + 1)) return true;
            }
            ++remaining[x];
            return false;
        };
        if (!dfs(dfs, 0)) {
            result.error = exhausted ? "conversion budget exhausted"
                                     : "no valid occurrence selection exists";
            return result;
        }
        result.cycle = cycle;
    }

    if (!verify_hamilton_cycle(lg, result.cycle)) {
        result.error = "constructed sequence failed verification";
        result.cycle.clear();
        return result;
    }
    result.ok = true;
    return result;
}

bool verify_hamilton_cycle(const LineGraph& l, const std::vector<HyperedgeId>& cycle) {
    int m = l.graph.vertexCount();
    if (m < 3 || static_cast<int>(cycle.size()) != m) return false;
    std::vector<char> seen(m, 0);
    for (HyperedgeId e : cycle) {
        if (e < 0 || e >= m || seen[e]) return false;
        seen[e] = 1;
    }
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (const Edge& e : l.graph.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    for (int i = 0; i < m; ++i)
        if (!adj[cycle[i]][cycle[(i + 1) % m]]) return false;
    return true;
}

OracleResult hamiltonian_oracle(const MultiGraph& g, long long budget) {
    if (!g.isSimple()) throw std::invalid_argument("oracle requires a simple graph");
    OracleResult result;
    int n = g.vertexCount();
    if (n < 3) {
        result.status = OracleStatus::NonHamiltonian;
        return result;
    }
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<std::vector<VertexId>> nbrs(n);
    for (const Edge& e : g.edges()) {
        if (!adj[e.u][e.v]) {
            nbrs[e.u].push_back(e.v);
            nbrs[e.v].push_back(e.u);
        }
        adj[e.u][e.v] = adj[e.v][e.u] = 1;
    }
    for (auto& v : nbrs) std::sort(v.begin(), v.end());

    std::vector<char> onPath(n, 0);
    std::vector<VertexId> path{0};
    onPath[0] = 1;
    long long steps = 0;
    bool exhausted = false;

    auto dfs = [&](auto&& self) -> bool {
        if (++steps > budget) {
            exhausted = true;
            return false;
        }
        if (static_cast<int>(path.size()) == n) return adj[path.back()][0];
        for (VertexId y : nbrs[path.back()]) {
            if (onPath[y]) continue;
            onPath[y] = 1;
            path.push_back(y);
            if (self(self)) return true;
            if (exhausted) return false;
            path.pop_back();
            onPath[y] = 0;
        }
        return false;
    };
    bool found = dfs(dfs);
    result.steps = steps;
    if (found) {
        result.status = OracleStatus::Hamiltonian;
        result.cycle = path;
    } else {
        result.status = exhausted ? OracleStatus::BudgetExhausted : OracleStatus::NonHamiltonian;
    }
    return result;
}

namespace {

struct StageFailure {
    std::string stage;
    std::string reason;
};

}  // namespace

Certificate certify(const Hypergraph& h, const PipelineConfig& cfg) {
    if (cfg.k < 2) throw std::invalid_argument("pipeline needs k >= 2 connectors");

    Certificate cert;
    cert.config = cfg;
    cert.theoremMode = cfg.theoremMode();

    auto ok = [&](const std::string& name) { cert.stages.emplace_back(name, "ok"); };
    auto fail = [&](const std::string& name, const std::string& reason) -> StageFailure {
        cert.stages.emplace_back(name, "failed");
        return StageFailure{name, reason};
    };

    try {
        auto validation = validate_hypergraph(h);
        if (!validation.pipelineEligible) {
            std::string reason = "hypergraph not pipeline-eligible";
            for (const auto& i : validation.issues) reason += "; " + i;
            throw fail("eligibility", reason);
        }
        ok("eligibility");

        cert.hypothesis = check_hypotheses(h, cfg);
        if (!cert.hypothesis->pass()) {
            std::string reason;
            if (cert.hypothesis->degenerate) {
                reason = "degenerate input";
                for (const auto& r : cert.hypothesis->degenerateReasons) reason += ": " + r;
            } else {
                if (!cert.hypothesis->minDegreeOk)
                    reason += "minimum degree " + std::to_string(cert.hypothesis->lineMinDegree) +
                              " < " + std::to_string(cfg.minDegree) + "; ";
                if (!cert.hypothesis->connectivityOk)
                    reason += "connectivity below " + std::to_string(cfg.connectivity) + "; ";
                if (!cert.hypothesis->heavyCoverOk)
                    reason += "some hyperedge contains no heavy vertex; ";
            }
            throw fail("hypotheses", reason);
        }
        ok("hypotheses");

        IncidenceGraph ig = build_incidence_graph(h);
        cert.heavy = heavy_set(ig, cfg.heavy);
        if (cert.heavy.size() < 2)
            throw fail("heavy-set", "fewer than 2 heavy vertices");
        ok("heavy-set");

        cert.lemmaConnectivity =
            is_terminal_set_k_edge_connected(ig.graph, cert.heavy, cfg.connectivity);
        if (!cert.lemmaConnectivity->holds)
            throw fail("terminal-connectivity",
                       "heavy set is not " + std::to_string(cfg.connectivity) +
                           "-edge-connected in IG");
        ok("terminal-connectivity");

        ConnectorSearchOptions opts;
        opts.budget = cfg.connectorBudget;
        opts.exactEdgeCap = cfg.exactEdgeCap;
        auto search = find_edge_disjoint_T_connectors(ig.graph, cert.heavy, cfg.k, opts);
        if (search.status != ConnectorSearchStatus::Found)
            throw fail("connectors",
                       search.status == ConnectorSearchStatus::ProvenNonexistent
                           ? "proven nonexistence of edge-disjoint connectors"
                           : "connector search budget exhausted");
        cert.connectors = std::move(search.connectors);
        ok("connectors");

        MultiGraph combined =
            combine_connectors(ig.graph, cert.connectors[0], cert.connectors[1], cert.heavy);
        for (const Edge& e : combined.edges()) cert.combinedEdges.push_back(e.id);
        ok("combine");

        // Whites have degree <= 3 in IG, so their even degree in the
        // combined graph is 0 or 2 -- each participating white is visited
        // exactly once by the trail.
        auto cdeg = combined.degrees();
        for (VertexId v = ig.blackCount; v < combined.vertexCount(); ++v)
            if (cdeg[v] != 0 && cdeg[v] != 2)
                throw std::logic_error("white vertex with combined degree other than 0 or 2");

        ClosedWalk trail = closed_trail_of(combined);
        for (size_t i = 0; i < trail.edges.size(); ++i) {
            VertexId a = trail.vertices[i];
            VertexId b = trail.vertices[(i + 1) % trail.vertices.size()];
            if (ig.isBlack(a) == ig.isBlack(b))
                throw std::logic_error("trail step does not alternate colors");
        }
        cert.trail = trail;
        ok("euler-trail");

        DetourResult det = insert_detours(trail, ig, cert.heavy);
        if (!det.ok)
            throw fail("detours", "white vertex " + std::to_string(det.failedWhite) +
                                      " has no heavy neighbor");
        std::map<VertexId, int> whiteVisits;
        for (VertexId v : det.walk.vertices)
            if (ig.isWhite(v)) ++whiteVisits[v];
        for (VertexId w = ig.blackCount; w < ig.graph.vertexCount(); ++w)
            if (whiteVisits[w] != 1)
                throw std::logic_error("white vertex not visited exactly once after detours");
        cert.detoured = det.walk;
        ok("detours");

        std::vector<VertexId> whites;
        for (VertexId v = ig.blackCount; v < ig.graph.vertexCount(); ++v) whites.push_back(v);
        cert.quasitrail = validate_W_quasitrail(det.walk, ig.graph, whites);
        if (!cert.quasitrail->isQuasitrail || !cert.quasitrail->isDominating)
            throw fail("quasitrail", "detoured walk failed quasitrail validation");
        ok("quasitrail");

        ConversionResult conv = quasitrail_to_hamilton(det.walk, h, cfg.conversionBudget);
        if (!conv.ok) throw fail("conversion", conv.error);
        cert.hamiltonCycle = conv.cycle;
        ok("conversion");

        if (!verify_hamilton_cycle(build_line_graph(h), cert.hamiltonCycle))
            throw fail("verification", "cycle failed independent verification");
        ok("verification");
        cert.verified = true;
    } catch (const StageFailure& f) {
        cert.refusalStage = f.stage;
        cert.refusalReason = f.reason;
    } catch (const std::logic_error& e) {
        cert.stages.emplace_back("internal", "failed");
        cert.refusalStage = "internal";
        cert.refusalReason = e.what();
    }
    return cert;
}

}  // namespace hamlg
