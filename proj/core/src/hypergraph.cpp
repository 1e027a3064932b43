#include "hamlg/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace hamlg {

bool Hyperedge::contains(VertexId v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

bool Hyperedge::intersects(const Hyperedge& other) const {
    // Both member lists are sorted.
    size_t i = 0, j = 0;
    while (i < members.size() && j < other.members.size()) {
        if (members[i] == other.members[j]) return true;
        if (members[i] < other.members[j])
            ++i;
        else
            ++j;
    }
    return false;
}

ValidationReport validate_hypergraph(const Hypergraph& h) {
    ValidationReport r;
    for (int j = 0; j < h.hyperedgeCount(); ++j) {
        const Hyperedge& e = h.hyperedges[j];
        if (e.members.empty()) {
            r.valid = false;
            r.issues.push_back("empty hyperedge e" + std::to_string(j));
            continue;
        }
        if (!std::is_sorted(e.members.begin(), e.members.end()) ||
            std::adjacent_find(e.members.begin(), e.members.end()) != e.members.end()) {
            r.valid = false;
            r.issues.push_back("hyperedge e" + std::to_string(j) +
                               " members not a sorted set");
        }
        for (VertexId v : e.members) {
            if (v < 0 || v >= h.vertexCount()) {
                r.valid = false;
                r.issues.push_back("hyperedge e" + std::to_string(j) +
                                   " references unknown vertex");
            }
        }
        if (e.size() == 1) {
            r.pipelineEligible = false;
            r.issues.push_back("singleton hyperedge e" + std::to_string(j));
        } else if (e.size() > 3) {
            r.pipelineEligible = false;
            r.issues.push_back("hyperedge e" + std::to_string(j) +
                               " has more than 3 members (rank > 3)");
        }
    }
    if (!r.valid) r.pipelineEligible = false;
    return r;
}

int rank(const Hypergraph& h) {
    int r = 0;
    for (const Hyperedge& e : h.hyperedges) r = std::max(r, e.size());
    return r;
}

LineGraph build_line_graph(const Hypergraph& h) {
    int m = h.hyperedgeCount();
    LineGraph lg{MultiGraph(m)};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (h.hyperedges[i].intersects(h.hyperedges[j])) lg.graph.addEdge(i, j);
    return lg;
}

IncidenceGraph build_incidence_graph(const Hypergraph& h) {
    int n = h.vertexCount();
    int m = h.hyperedgeCount();
    IncidenceGraph ig{MultiGraph(n + m), n};
    for (int j = 0; j < m; ++j)
        for (VertexId v : h.hyperedges[j].members) ig.graph.addEdge(v, n + j);
    return ig;
}

std::optional<std::vector<VertexId>> induced_star_witness(const MultiGraph& g, int s) {
    if (s < 2) throw std::invalid_argument("star size must be >= 2");
    int n = g.vertexCount();
    // Adjacency matrix over the simple collapse of g.
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;

    std::vector<VertexId> leaves;
    for (VertexId c = 0; c < n; ++c) {
        std::vector<VertexId> nbrs;
        for (VertexId v = 0; v < n; ++v)
            if (adj[c][v]) nbrs.push_back(v);
        if (static_cast<int>(nbrs.size()) < s) continue;
        leaves.clear();
        // Pick s pairwise nonadjacent neighbors, smallest ids first.
        auto extend = [&](auto&& self, size_t from) -> bool {
            if (static_cast<int>(leaves.size()) == s) return true;
            for (size_t i = from; i < nbrs.size(); ++i) {
                VertexId cand = nbrs[i];
                bool ok = true;
                for (VertexId l : leaves)
                    if (adj[l][cand]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                leaves.push_back(cand);
                if (self(self, i + 1)) return true;
                leaves.pop_back();
            }
            return false;
        };
        if (extend(extend, 0)) {
            std::vector<VertexId> witness{c};
            witness.insert(witness.end(), leaves.begin(), leaves.end());
            return witness;
        }
    }
    return std::nullopt;
}

bool has_induced_star(const MultiGraph& g, int s) {
    return induced_star_witness(g, s).has_value();
}

}  // namespace hamlg
