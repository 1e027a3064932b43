#include "hamlg/connectors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>

namespace hamlg {
namespace {

std::vector<VertexId> sortedTerminals(const MultiGraph& g, const std::vector<VertexId>& t) {
    std::vector<VertexId> out(t);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (VertexId v : out)
        if (v < 0 || v >= g.vertexCount())
            throw std::invalid_argument("terminal not in graph");
    return out;
}

bool inSet(const std::vector<VertexId>& sorted, VertexId v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

MultiGraph short_cut(const MultiGraph& g, const Path& p) {
    if (!is_path_in_graph(g, p)) throw std::invalid_argument("not a path in the graph");
    MultiGraph out = g;
    for (EdgeId e : p.edges) out.removeEdge(e);
    out.addEdge(p.front(), p.back());
    return out;
}

bool is_T_path(const MultiGraph& g, const std::vector<VertexId>& terminals, const Path& p) {
    if (!is_path_in_graph(g, p)) throw std::invalid_argument("not a path in the graph");
    auto t = sortedTerminals(g, terminals);
    if (p.length() < 1) return false;
    if (!inSet(t, p.front()) || !inSet(t, p.back())) return false;
    for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
        if (inSet(t, p.vertices[i])) return false;
    return true;
}

std::set<EdgeId> TConnector::edgeSet() const {
    std::set<EdgeId> ids;
    for (const Path& p : paths) ids.insert(p.edges.begin(), p.edges.end());
    return ids;
}

MultiGraph TConnector::unionGraph(const MultiGraph& host) const {
    return host.edgeSubgraph(edgeSet());
}

ConnectorCheck verify_T_connector(const MultiGraph& g, const std::vector<VertexId>& terminals,
                                  const std::vector<Path>& paths) {
    ConnectorCheck check;
    auto t = sortedTerminals(g, terminals);

    std::set<EdgeId> used;
    for (size_t i = 0; i < paths.size(); ++i) {
        const Path& p = paths[i];
        if (!is_path_in_graph(g, p)) {
            check.ok = false;
            check.reasons.push_back("entry " + std::to_string(i) + " is not a path in G");
            continue;
        }
        if (!is_T_path(g, t, p)) {
            check.ok = false;
            check.reasons.push_back("entry " + std::to_string(i) + " is not a T-path");
        }
        for (EdgeId e : p.edges)
            if (!used.insert(e).second) {
                check.ok = false;
                check.reasons.push_back("edge " + std::to_string(e) + " appears in two paths");
            }
    }
    if (!check.ok) return check;

    // Endpoint auxiliary graph on T must be connected and span T.
    std::map<VertexId, int> tIndex;
    for (size_t i = 0; i < t.size(); ++i) tIndex[t[i]] = static_cast<int>(i);
    DisjointSet uf(static_cast<int>(t.size()));
    for (const Path& p : paths) uf.unite(tIndex[p.front()], tIndex[p.back()]);
    for (size_t i = 1; i < t.size(); ++i)
        if (uf.find(static_cast<int>(i)) != uf.find(0)) {
            check.ok = false;
            check.reasons.push_back("endpoint graph does not span T (vertex " +
                                    std::to_string(t[i]) + " disconnected)");
            return check;
        }

    // Sanity: odd union degrees only at T (implied by the definition).
    MultiGraph u = g.edgeSubgraph(used);
    auto deg = u.degrees();
    for (VertexId v = 0; v < u.vertexCount(); ++v)
        if (deg[v] % 2 == 1 && !inSet(t, v)) {
            check.ok = false;
            check.reasons.push_back("odd union degree at non-terminal " + std::to_string(v));
        }
    return check;
}

namespace {

// One merge step: grow a BFS forest from every terminal at once (components
// as labels) over available edges; the first edge joining two trees with
// different component labels yields a T-path between two components.
// Terminals are seeded least-used first, which spreads edge consumption so
// that later connectors still find material.
std::optional<Path> bfsConnect(const std::vector<std::vector<Edge>>& adj,
                               const std::set<EdgeId>& avail,
                               const std::vector<VertexId>& seeds,
                               const std::map<VertexId, int>& tIndex, DisjointSet& uf) {
    int n = static_cast<int>(adj.size());
    std::vector<int> parentVertex(n, -1), parentEdge(n, -1), label(n, -1);
    std::queue<VertexId> q;
    for (VertexId v : seeds) {
        label[v] = uf.find(tIndex.at(v));
        q.push(v);
    }

    auto pathUp = [&](VertexId from) {
        Path p;
        for (VertexId cur = from;; cur = parentVertex[cur]) {
            p.vertices.push_back(cur);
            if (parentVertex[cur] == -1) break;
            p.edges.push_back(parentEdge[cur]);
        }
        return p;  // from -> tree root
    };

    while (!q.empty()) {
        VertexId x = q.front();
        q.pop();
        for (const Edge& e : adj[x]) {
            if (!avail.count(e.id)) continue;
            VertexId y = e.other(x);
            if (label[y] == -1) {
                label[y] = label[x];
                parentVertex[y] = x;
                parentEdge[y] = e.id;
                q.push(y);  // y is never a terminal: all terminals are seeds
            } else if (label[y] != label[x]) {
                Path left = pathUp(x);   // x -> root(x)
                Path right = pathUp(y);  // y -> root(y)
                Path p;
                p.vertices.assign(left.vertices.rbegin(), left.vertices.rend());
                p.edges.assign(left.edges.rbegin(), left.edges.rend());
                p.vertices.push_back(y);
                p.edges.push_back(e.id);
                p.vertices.insert(p.vertices.end(), right.vertices.begin() + 1,
                                  right.vertices.end());
                p.edges.insert(p.edges.end(), right.edges.begin(), right.edges.end());
                return p;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<TConnector>> greedySearch(const MultiGraph& g,
                                                    const std::vector<VertexId>& t, int k) {
    auto adj = g.adjacencyList();
    std::map<VertexId, int> tIndex;
    for (size_t i = 0; i < t.size(); ++i) tIndex[t[i]] = static_cast<int>(i);
    std::set<EdgeId> avail;
    for (const Edge& e : g.edges()) avail.insert(e.id);
    std::map<VertexId, int> usedAt;

    std::vector<TConnector> connectors;
    for (int c = 0; c < k; ++c) {
        DisjointSet uf(static_cast<int>(t.size()));
        int merges = 0;
        TConnector conn;
        while (merges + 1 < static_cast<int>(t.size())) {
            std::vector<VertexId> seeds(t);
            std::stable_sort(seeds.begin(), seeds.end(),
                             [&](VertexId a, VertexId b) { return usedAt[a] < usedAt[b]; });
            auto p = bfsConnect(adj, avail, seeds, tIndex, uf);
            if (!p) return std::nullopt;
            for (EdgeId e : p->edges) {
                avail.erase(e);
                const Edge& edge = g.edge(e);
                if (tIndex.count(edge.u)) ++usedAt[edge.u];
                if (tIndex.count(edge.v)) ++usedAt[edge.v];
            }
            uf.unite(tIndex[p->front()], tIndex[p->back()]);
            ++merges;
            conn.paths.push_back(std::move(*p));
        }
        connectors.push_back(std::move(conn));
    }
    return connectors;
}

struct BudgetExceeded {};

struct ExactSearch {
    const std::vector<VertexId>& t;
    std::map<VertexId, int> tIndex;
    int k;
    long long budget;
    long long steps = 0;

    struct Candidate {
        Path path;
        uint64_t mask;
        int a, b;  // terminal indices of the endpoints
    };
    std::vector<Candidate> candidates;
    std::vector<std::vector<int>> chosen;  // per connector: candidate indices
    std::vector<TConnector> solution;

    void tick() {
        if (++steps > budget) throw BudgetExceeded{};
    }

    // All vertex-simple T-paths, endpoints s < y, deterministic order.
    void enumerate(const MultiGraph& g) {
        auto adj = g.adjacencyList();
        std::map<EdgeId, int> edgeBit;
        for (const Edge& e : g.edges()) {
            int bit = static_cast<int>(edgeBit.size());
            edgeBit[e.id] = bit;
        }
        Path cur;
        std::vector<char> onPath(g.vertexCount(), 0);
        uint64_t mask = 0;

        auto dfs = [&](auto&& self, VertexId x, VertexId s) -> void {
            tick();
            for (const Edge& e : adj[x]) {
                if (mask & (1ull << edgeBit[e.id])) continue;
                VertexId y = e.other(x);
                if (onPath[y]) continue;
                auto it = tIndex.find(y);
                if (it != tIndex.end()) {
                    if (y > s) {
                        Path p = cur;
                        p.vertices.push_back(y);
                        p.edges.push_back(e.id);
                        candidates.push_back(
                            {std::move(p), mask | (1ull << edgeBit[e.id]),
                             tIndex.at(s), it->second});
                    }
                    continue;
                }
                cur.vertices.push_back(y);
                cur.edges.push_back(e.id);
                onPath[y] = 1;
                mask |= 1ull << edgeBit[e.id];
                self(self, y, s);
                mask &= ~(1ull << edgeBit[e.id]);
                onPath[y] = 0;
                cur.vertices.pop_back();
                cur.edges.pop_back();
            }
        };

        for (VertexId s : t) {
            cur = Path{{s}, {}};
            std::fill(onPath.begin(), onPath.end(), 0);
            onPath[s] = 1;
            mask = 0;
            dfs(dfs, s, s);
        }
    }

    bool solveConnector(int c, int firstIdx, uint64_t used, DisjointSet uf, int merges,
                        int nextIdx) {
        tick();
        int need = static_cast<int>(t.size()) - 1;
        if (merges == need) return solveFamily(c + 1, used, firstIdx + 1);
        for (int i = nextIdx; i < static_cast<int>(candidates.size()); ++i) {
            const Candidate& cand = candidates[i];
            if (cand.mask & used) continue;
            if (uf.find(cand.a) == uf.find(cand.b)) continue;
            DisjointSet uf2 = uf;
            uf2.unite(cand.a, cand.b);
            chosen[c].push_back(i);
            if (solveConnector(c, firstIdx, used | cand.mask, std::move(uf2), merges + 1,
                               i + 1))
                return true;
            chosen[c].pop_back();
        }
        return false;
    }

    bool solveFamily(int c, uint64_t used, int minStart) {
        tick();
        if (c == k) {
            solution.clear();
            for (int ci = 0; ci < k; ++ci) {
                TConnector conn;
                for (int idx : chosen[ci]) conn.paths.push_back(candidates[idx].path);
                solution.push_back(std::move(conn));
            }
            return true;
        }
        for (int i = minStart; i < static_cast<int>(candidates.size()); ++i) {
            const Candidate& cand = candidates[i];
            if (cand.mask & used) continue;
            DisjointSet uf(static_cast<int>(t.size()));
            uf.unite(cand.a, cand.b);
            chosen[c] = {i};
            if (solveConnector(c, i, used | cand.mask, std::move(uf),
                               static_cast<int>(t.size()) == 1 ? 0 : 1, i + 1))
                return true;
            chosen[c].clear();
        }
        return false;
    }
};

}  // namespace

ConnectorSearchResult find_edge_disjoint_T_connectors(const MultiGraph& g,
                                                      const std::vector<VertexId>& terminals,
                                                      int k, ConnectorSearchOptions opts) {
    auto t = sortedTerminals(g, terminals);
    if (t.size() < 2) throw std::invalid_argument("need at least two terminals");
    if (k < 1) throw std::invalid_argument("k must be positive");

    ConnectorSearchResult result;

    if (auto greedy = greedySearch(g, t, k)) {
        for (const TConnector& c : *greedy)
            if (!verify_T_connector(g, t, c.paths).ok)
                throw std::logic_error("greedy connector failed verification");
        result.status = ConnectorSearchStatus::Found;
        result.connectors = std::move(*greedy);
        return result;
    }

    if (g.edgeCount() > opts.exactEdgeCap) {
        result.status = ConnectorSearchStatus::BudgetExhausted;
        return result;
    }

    ExactSearch search{t, {}, k, opts.budget};
    for (size_t i = 0; i < t.size(); ++i) search.tIndex[t[i]] = static_cast<int>(i);
    search.chosen.resize(k);
    try {
        search.enumerate(g);
        if (search.solveFamily(0, 0, 0)) {
            for (const TConnector& c : search.solution)
                if (!verify_T_connector(g, t, c.paths).ok)
                    throw std::logic_error("exact connector failed verification");
            result.status = ConnectorSearchStatus::Found;
            result.connectors = std::move(search.solution);
        } else {
            result.status = ConnectorSearchStatus::ProvenNonexistent;
        }
    } catch (const BudgetExceeded&) {
        result.status = ConnectorSearchStatus::BudgetExhausted;
    }
    result.stepsUsed = search.steps;
    return result;
}

}  // namespace hamlg
