#ifndef HAMLG_HYPERGRAPH_HPP
#define HAMLG_HYPERGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamlg/multigraph.hpp"

namespace hamlg {

/// Hyperedge members are sorted, distinct vertex ids. The hyperedge id is
/// its index in Hypergraph::hyperedges; equal member sets stay distinct
/// entries (multiset semantics).
struct Hyperedge {
    std::vector<VertexId> members;

    int size() const { return static_cast<int>(members.size()); }
    bool contains(VertexId v) const;
    bool intersects(const Hyperedge& other) const;
};

struct Hypergraph {
    std::vector<std::string> vertexLabels;  // index = VertexId
    std::vector<Hyperedge> hyperedges;      // index = HyperedgeId

    int vertexCount() const { return static_cast<int>(vertexLabels.size()); }
    int hyperedgeCount() const { return static_cast<int>(hyperedges.size()); }
};

struct ValidationReport {
    bool valid = true;
    bool pipelineEligible = true;
    std::vector<std::string> issues;
};

/// Structural validation. `valid` covers the hypergraph invariants;
/// `pipelineEligible` additionally requires every hyperedge size in {2,3}
/// (singletons are valid data but the certification pipeline rejects them).
ValidationReport validate_hypergraph(const Hypergraph& h);

/// Maximum hyperedge cardinality; 0 when there are no hyperedges.
int rank(const Hypergraph& h);

/// Simple graph on the hyperedges; vertex i corresponds to hyperedge i,
/// adjacency = member sets intersect.
struct LineGraph {
    MultiGraph graph;
};

LineGraph build_line_graph(const Hypergraph& h);

/// Bipartite incidence graph. Black vertices 0..blackCount-1 are the
/// hypergraph vertices; white vertex blackCount+j corresponds to hyperedge j.
struct IncidenceGraph {
    MultiGraph graph;
    int blackCount = 0;

    bool isWhite(VertexId v) const { return v >= blackCount; }
    bool isBlack(VertexId v) const { return v < blackCount; }
    HyperedgeId whiteOrigin(VertexId v) const { return v - blackCount; }
    VertexId whiteVertex(HyperedgeId e) const { return blackCount + e; }
    int whiteCount() const { return graph.vertexCount() - blackCount; }
};

IncidenceGraph build_incidence_graph(const Hypergraph& h);

/// Induced K_{1,s} search on a simple graph: a center with s pairwise
/// nonadjacent neighbors. Returns {center, leaf_1, ..., leaf_s} when found.
std::optional<std::vector<VertexId>> induced_star_witness(const MultiGraph& g, int s);

bool has_induced_star(const MultiGraph& g, int s);

}  // namespace hamlg

#endif
