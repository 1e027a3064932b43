#ifndef HAMLG_CONNECTORS_HPP
#define HAMLG_CONNECTORS_HPP

#include <set>
#include <string>
#include <vector>

#include "hamlg/multigraph.hpp"

namespace hamlg {

/// Delete P's edges and add one fresh edge joining P's end vertices.
MultiGraph short_cut(const MultiGraph& g, const Path& p);

/// Both endpoints in T, no interior vertex in T, length >= 1.
bool is_T_path(const MultiGraph& g, const std::vector<VertexId>& terminals, const Path& p);

/// Family of edge-disjoint T-paths whose endpoint graph on T is connected
/// and spans T.
struct TConnector {
    std::vector<Path> paths;

    std::set<EdgeId> edgeSet() const;
    MultiGraph unionGraph(const MultiGraph& host) const;
};

struct ConnectorCheck {
    bool ok = true;
    std::vector<std::string> reasons;
};

ConnectorCheck verify_T_connector(const MultiGraph& g, const std::vector<VertexId>& terminals,
                                  const std::vector<Path>& paths);

enum class ConnectorSearchStatus { Found, ProvenNonexistent, BudgetExhausted };

struct ConnectorSearchOptions {
    long long budget = 5'000'000;
    int exactEdgeCap = 24;  // exhaustive fallback only below this edge count
};

struct ConnectorSearchResult {
    ConnectorSearchStatus status = ConnectorSearchStatus::BudgetExhausted;
    std::vector<TConnector> connectors;
    long long stepsUsed = 0;
};

/// k pairwise edge-disjoint T-connectors. Greedy tree-growing first; on
/// graphs with at most exactEdgeCap edges an exhaustive search settles
/// existence, otherwise failure reports budget exhaustion.
ConnectorSearchResult find_edge_disjoint_T_connectors(const MultiGraph& g,
                                                      const std::vector<VertexId>& terminals,
                                                      int k,
                                                      ConnectorSearchOptions opts = {});

}  // namespace hamlg

#endif
