#ifndef HAMLG_MULTIGRAPH_HPP
#define HAMLG_MULTIGRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hamlg {

using VertexId = int;
using EdgeId = int;
using HyperedgeId = int;

struct Edge {
    EdgeId id;
    VertexId u, v;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool incident(VertexId x) const { return x == u || x == v; }
};

/// Undirected multigraph on vertices 0..n-1. Parallel edges allowed,
/// loops forbidden. Edge ids are unique and stable under removal.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int vertex_count) : n_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertexCount() const { return n_; }
    int edgeCount() const { return static_cast<int>(edges_.size()); }

    EdgeId addEdge(VertexId u, VertexId v) {
        EdgeId id = next_id_;
        addEdgeWithId(id, u, v);
        return id;
    }

    void addEdgeWithId(EdgeId id, VertexId u, VertexId v) {
        checkVertex(u);
        checkVertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (edges_.count(id)) throw std::invalid_argument("duplicate edge id");
        edges_.emplace(id, Edge{id, u, v});
        if (id >= next_id_) next_id_ = id + 1;
    }

    void removeEdge(EdgeId id) {
        if (!edges_.erase(id)) throw std::invalid_argument("no such edge");
    }

    bool hasEdge(EdgeId id) const { return edges_.count(id) != 0; }

    const Edge& edge(EdgeId id) const {
        auto it = edges_.find(id);
        if (it == edges_.end()) throw std::invalid_argument("no such edge");
        return it->second;
    }

    /// Edges in ascending id order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edges_.size());
        for (const auto& [id, e] : edges_) out.push_back(e);
        return out;
    }

    /// Incident edges of v in ascending id order.
    std::vector<Edge> incidentEdges(VertexId v) const {
        checkVertex(v);
        std::vector<Edge> out;
        for (const auto& [id, e] : edges_)
            if (e.incident(v)) out.push_back(e);
        return out;
    }

    int degree(VertexId v) const {
        checkVertex(v);
        int d = 0;
        for (const auto& [id, e] : edges_)
            if (e.incident(v)) ++d;
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (const auto& [id, e] : edges_) {
            ++d[e.u];
            ++d[e.v];
        }
        return d;
    }

    bool adjacent(VertexId u, VertexId v) const {
        for (const auto& [id, e] : edges_)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
        return false;
    }

    bool isSimple() const {
        std::map<std::pair<VertexId, VertexId>, int> seen;
        for (const auto& [id, e] : edges_) {
            auto key = std::minmax(e.u, e.v);
            if (++seen[{key.first, key.second}] > 1) return false;
        }
        return true;
    }

    /// Same vertex set, only the listed edges (ids must exist).
    template <typename EdgeIdRange>
    MultiGraph edgeSubgraph(const EdgeIdRange& ids) const {
        MultiGraph g(n_);
        for (EdgeId id : ids) {
            const Edge& e = edge(id);
            g.addEdgeWithId(id, e.u, e.v);
        }
        return g;
    }

    /// Adjacency with edge ids, sorted by edge id per vertex.
    std::vector<std::vector<Edge>> adjacencyList() const {
        std::vector<std::vector<Edge>> adj(n_);
        for (const auto& [id, e] : edges_) {
            adj[e.u].push_back(e);
            adj[e.v].push_back(e);
        }
        return adj;
    }

private:
    void checkVertex(VertexId v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }

    int n_ = 0;
    EdgeId next_id_ = 0;
    std::map<EdgeId, Edge> edges_;
};

/// Open walk: vertices.size() == edges.size() + 1.
struct Path {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
};

/// Closed walk v0,e0,v1,...,e(k-1),back to v0. vertices.size() == edges.size().
struct ClosedWalk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

/// True iff P is a path in G: every step incident, no repeated vertices.
bool is_path_in_graph(const MultiGraph& g, const Path& p);

/// True iff W is a structurally valid nonempty closed walk in G.
bool is_closed_walk_in_graph(const MultiGraph& g, const ClosedWalk& w);

/// Vertex ids of the connected component of `start`, edges restricted to G.
std::vector<VertexId> reachable_from(const MultiGraph& g, VertexId start);

/// True iff all edges of G lie in a single connected component.
bool edges_connected(const MultiGraph& g);

struct DisjointSet {
    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace hamlg

#endif
