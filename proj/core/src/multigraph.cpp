#include "hamlg/multigraph.hpp"

#include <set>

namespace hamlg {

bool is_path_in_graph(const MultiGraph& g, const Path& p) {
    if (p.vertices.size() != p.edges.size() + 1) return false;
    if (p.vertices.empty()) return false;
    std::set<VertexId> seen;
    for (VertexId v : p.vertices) {
        if (v < 0 || v >= g.vertexCount()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i < p.edges.size(); ++i) {
        if (!g.hasEdge(p.edges[i])) return false;
        const Edge& e = g.edge(p.edges[i]);
        if (!(e.incident(p.vertices[i]) && e.other(p.vertices[i]) == p.vertices[i + 1]))
            return false;
    }
    return true;
}

bool is_closed_walk_in_graph(const MultiGraph& g, const ClosedWalk& w) {
    if (w.vertices.empty() || w.vertices.size() != w.edges.size()) return false;
    size_t k = w.edges.size();
    for (size_t i = 0; i < k; ++i) {
        VertexId a = w.vertices[i];
        VertexId b = w.vertices[(i + 1) % k];
        if (a < 0 || a >= g.vertexCount()) return false;
        if (!g.hasEdge(w.edges[i])) return false;
        const Edge& e = g.edge(w.edges[i]);
        if (!(e.incident(a) && e.other(a) == b)) return false;
    }
    return true;
}

std::vector<VertexId> reachable_from(const MultiGraph& g, VertexId start) {
    auto adj = g.adjacencyList();
    std::vector<char> seen(g.vertexCount(), 0);
    std::vector<VertexId> stack{start}, out;
    seen[start] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (const Edge& e : adj[v]) {
            VertexId w = e.other(v);
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool edges_connected(const MultiGraph& g) {
    if (g.edgeCount() == 0) return true;
    VertexId start = std::min(g.edges().front().u, g.edges().front().v);
    auto comp = reachable_from(g, start);
    std::set<VertexId> inComp(comp.begin(), comp.end());
    for (const Edge& e : g.edges())
        if (!inComp.count(e.u) || !inComp.count(e.v)) return false;
    return true;
}

}  // namespace hamlg
