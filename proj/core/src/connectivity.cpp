#include "hamlg/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace hamlg {
namespace {

struct Dinic {
    struct Arc {
        int to;
        int cap;
        int rev;      // index of the paired arc in g[to]
        EdgeId orig;  // underlying undirected edge, -1 for auxiliary arcs
        bool forward;
    };

    explicit Dinic(int n) : g(n), level(n), iter(n) {}

    void addUndirectedUnit(int u, int v, EdgeId id) {
        g[u].push_back({v, 1, static_cast<int>(g[v].size()), id, true});
        g[v].push_back({u, 1, static_cast<int>(g[u].size()) - 1, id, false});
    }

    void addDirected(int u, int v, int cap) {
        g[u].push_back({v, cap, static_cast<int>(g[v].size()), -1, true});
        g[v].push_back({u, 0, static_cast<int>(g[u].size()) - 1, -1, false});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : g[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(g[v].size()); ++i) {
            Arc& a = g[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    g[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int maxflow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            int f;
            while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
        }
        return flow;
    }

    std::vector<char> residualReach(int s) const {
        std::vector<char> seen(g.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Arc& a : g[v])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
        return seen;
    }

    std::vector<std::vector<Arc>> g;
    std::vector<int> level;
    std::vector<int> iter;
};

// Trace edge-disjoint s-t paths out of a unit-capacity flow. Loops that the
// decomposition walks into are excised (their arcs are discarded; net flow
// across the cut is unchanged).
std::vector<Path> extractPaths(const MultiGraph& graph, Dinic& net, VertexId s, VertexId t,
                               int count) {
    int n = graph.vertexCount();
    // Outgoing used arcs per vertex, keyed and ordered by edge id.
    std::vector<std::map<EdgeId, VertexId>> out(n);
    for (int v = 0; v < n; ++v)
        for (const Dinic::Arc& a : net.g[v])
            if (a.cap == 0 && net.g[a.to][a.rev].cap == 2)
                out[v].emplace(a.orig, a.to);

    std::vector<Path> paths;
    for (int p = 0; p < count; ++p) {
        Path path;
        path.vertices.push_back(s);
        std::vector<int> posOf(n, -1);
        posOf[s] = 0;
        VertexId cur = s;
        while (cur != t) {
            if (out[cur].empty()) throw std::logic_error("flow decomposition stuck");
            auto it = out[cur].begin();
            EdgeId eid = it->first;
            VertexId nxt = it->second;
            out[cur].erase(it);
            if (posOf[nxt] >= 0) {
                // Loop: discard the cycle portion.
                int keep = posOf[nxt];
                for (size_t i = keep + 1; i < path.vertices.size(); ++i)
                    posOf[path.vertices[i]] = -1;
                path.vertices.resize(keep + 1);
                path.edges.resize(keep);
            } else {
                path.vertices.push_back(nxt);
                path.edges.push_back(eid);
                posOf[nxt] = static_cast<int>(path.vertices.size()) - 1;
            }
            cur = path.vertices.back();
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace

LocalConnectivity local_edge_connectivity(const MultiGraph& g, VertexId s, VertexId t, int k) {
    if (s < 0 || s >= g.vertexCount() || t < 0 || t >= g.vertexCount())
        throw std::invalid_argument("terminal not in graph");
    if (s == t) throw std::invalid_argument("terminals must be distinct");
    if (k < 1) throw std::invalid_argument("k must be positive");

    Dinic net(g.vertexCount());
    for (const Edge& e : g.edges()) net.addUndirectedUnit(e.u, e.v, e.id);
    int f = net.maxflow(s, t, k);

    LocalConnectivity result;
    result.value = f;
    if (f >= k) {
        result.witness.isCut = false;
        result.witness.paths = extractPaths(g, net, s, t, k);
    } else {
        result.witness.isCut = true;
        auto reach = net.residualReach(s);
        assert(!reach[t]);
        for (const Edge& e : g.edges())
            if (reach[e.u] != reach[e.v]) result.witness.cutEdges.push_back(e.id);
        for (VertexId v = 0; v < g.vertexCount(); ++v)
            (reach[v] ? result.witness.sourceSide : result.witness.sinkSide).push_back(v);
        assert(static_cast<int>(result.witness.cutEdges.size()) == f);
    }
    return result;
}

TerminalConnectivity is_terminal_set_k_edge_connected(const MultiGraph& g,
                                                      const std::vector<VertexId>& terminals,
                                                      int k) {
    std::vector<VertexId> t(terminals);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (VertexId v : t)
        if (v < 0 || v >= g.vertexCount())
            throw std::invalid_argument("terminal not in graph");
    TerminalConnectivity result;
    if (t.size() <= 1 || k <= 0) return result;

    // Any cut separating two terminals separates t[0] from at least one of
    // them, so |T|-1 flows from a fixed source suffice.
    for (size_t i = 1; i < t.size(); ++i) {
        LocalConnectivity lc = local_edge_connectivity(g, t[0], t[i], k);
        if (lc.value < k) {
            result.holds = false;
            result.witness = lc.witness;
            result.separatedPair = {t[0], t[i]};
            return result;
        }
    }
    return result;
}

namespace {

// kappa(s,t) for nonadjacent s,t via vertex splitting, capped.
int vertexPairConnectivity(const MultiGraph& g, VertexId s, VertexId t, int cap) {
    if (cap <= 0) return 0;
    int n = g.vertexCount();
    Dinic net(2 * n);
    int inf = n;
    for (VertexId v = 0; v < n; ++v) net.addDirected(2 * v, 2 * v + 1, 1);
    for (const Edge& e : g.edges()) {
        net.addDirected(2 * e.u + 1, 2 * e.v, inf);
        net.addDirected(2 * e.v + 1, 2 * e.u, inf);
    }
    return net.maxflow(2 * s + 1, 2 * t, cap);
}

int vertexConnectivityImpl(const MultiGraph& g, int cap) {
    int n = g.vertexCount();
    if (n < 2) throw std::invalid_argument("vertex connectivity needs >= 2 vertices");
    if (!g.isSimple()) throw std::invalid_argument("vertex connectivity needs a simple graph");
    if (cap <= 0) return 0;

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

    bool complete = true;
    for (int u = 0; u < n && complete; ++u)
        for (int v = u + 1; v < n && complete; ++v)
            if (!adj[u][v]) complete = false;
    if (complete) return std::min(cap, n - 1);

    // Pick a minimum-degree pivot v. Every minimum cut either avoids v
    // (probed by v against its non-neighbors) or contains it (probed by
    // nonadjacent pairs of its neighbors, which lie in distinct components
    // of the separation).
    auto deg = g.degrees();
    VertexId pivot = 0;
    for (VertexId v = 1; v < n; ++v)
        if (deg[v] < deg[pivot]) pivot = v;

    int best = std::min(cap, n - 2);
    for (VertexId u = 0; u < n && best > 0; ++u)
        if (u != pivot && !adj[pivot][u])
            best = std::min(best, vertexPairConnectivity(g, pivot, u, best));
    std::vector<VertexId> nbrs;
    for (VertexId u = 0; u < n; ++u)
        if (adj[pivot][u]) nbrs.push_back(u);
    for (size_t i = 0; i < nbrs.size() && best > 0; ++i)
        for (size_t j = i + 1; j < nbrs.size() && best > 0; ++j)
            if (!adj[nbrs[i]][nbrs[j]])
                best = std::min(best, vertexPairConnectivity(g, nbrs[i], nbrs[j], best));
    return best;
}

}  // namespace

int vertex_connectivity(const MultiGraph& g) {
    return vertexConnectivityImpl(g, g.vertexCount());
}

int vertex_connectivity_capped(const MultiGraph& g, int cap) {
    return vertexConnectivityImpl(g, cap);
}

}  // namespace hamlg
