#ifndef HAMLG_CONNECTIVITY_HPP
#define HAMLG_CONNECTIVITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hamlg/multigraph.hpp"

namespace hamlg {

/// Exactly one of the two shapes: a family of edge-disjoint s-t paths, or an
/// edge cut smaller than the queried k together with the separation sides.
struct MengerWitness {
    bool isCut = false;
    std::vector<Path> paths;        // path case
    std::vector<EdgeId> cutEdges;   // cut case
    std::vector<VertexId> sourceSide, sinkSide;
};

struct LocalConnectivity {
    int value = 0;  // min(k, lambda(s,t))
    MengerWitness witness;
};

/// Menger query capped at k. Returns k edge-disjoint s-t paths when
/// lambda(s,t) >= k, otherwise a minimum cut of size lambda(s,t) < k.
LocalConnectivity local_edge_connectivity(const MultiGraph& g, VertexId s, VertexId t, int k);

struct TerminalConnectivity {
    bool holds = true;
    std::optional<MengerWitness> witness;  // small cut, when !holds
    std::optional<std::pair<VertexId, VertexId>> separatedPair;
};

/// T is k-edge-connected iff every pair of T has local edge connectivity
/// >= k; checked with |T|-1 flows from the smallest terminal.
TerminalConnectivity is_terminal_set_k_edge_connected(const MultiGraph& g,
                                                      const std::vector<VertexId>& terminals,
                                                      int k);

/// Exact vertex connectivity of a simple graph with >= 2 vertices.
/// Complete graphs yield |V|-1.
int vertex_connectivity(const MultiGraph& g);

/// min(kappa(G), cap); cheaper when only a threshold matters.
int vertex_connectivity_capped(const MultiGraph& g, int cap);

}  // namespace hamlg

#endif
