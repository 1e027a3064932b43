#ifndef HAMLG_PIPELINE_HPP
#define HAMLG_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamlg/connectivity.hpp"
#include "hamlg/connectors.hpp"
#include "hamlg/hypergraph.hpp"

namespace hamlg {

struct PipelineConfig {
    int minDegree = 52;
    int connectivity = 18;
    int heavy = 18;
    int k = 2;
    long long connectorBudget = 5'000'000;
    int exactEdgeCap = 24;
    long long conversionBudget = 2'000'000;

    bool theoremMode() const {
        return minDegree >= 52 && connectivity >= 18 && heavy == 18 && k >= 2;
    }
};

/// Black vertices of IG with degree >= threshold.
std::vector<VertexId> heavy_set(const IncidenceGraph& ig, int threshold = 18);

struct HypothesisReport {
    bool degenerate = false;
    std::vector<std::string> degenerateReasons;
    int lineMinDegree = 0;
    bool minDegreeOk = false;
    int connectivityLowerBound = 0;  // min(kappa(L), cfg.connectivity)
    bool connectivityOk = false;
    bool heavyCoverOk = false;
    std::vector<HyperedgeId> uncoveredHyperedges;

    bool pass() const { return !degenerate && minDegreeOk && connectivityOk && heavyCoverOk; }
};

/// Min degree and (threshold-capped) vertex connectivity of L(H), plus the
/// every-hyperedge-contains-a-heavy-vertex check.
HypothesisReport check_hypotheses(const Hypergraph& h, const PipelineConfig& cfg = {});

/// Parity combination of two edge-disjoint T-connectors: a connected
/// all-even subgraph of A1 u A2 covering T. Odd-degree vertices of A1 are
/// paired in ascending order and joined by shortest paths inside A2; the
/// symmetric difference of those paths is XORed onto A1.
MultiGraph combine_connectors(const MultiGraph& host, const TConnector& a1,
                              const TConnector& a2, const std::vector<VertexId>& terminals);

/// Euler circuit of a connected even graph, Hierholzer with id-ordered edge
/// choice. Anchor defaults to the smallest vertex carrying an edge.
ClosedWalk closed_trail_of(const MultiGraph& c, std::optional<VertexId> anchor = {});

struct DetourResult {
    bool ok = true;
    ClosedWalk walk;
    VertexId failedWhite = -1;  // unvisited white with no anchor in T
};

/// Splice a v,vw,w,wv,v detour for each white vertex missed by the trail,
/// anchored at its smallest heavy neighbor's first visit.
DetourResult insert_detours(const ClosedWalk& trail, const IncidenceGraph& ig,
                            const std::vector<VertexId>& terminals);

struct QuasitrailReport {
    bool isClosedWalk = false;
    std::map<EdgeId, int> edgeUseCounts;
    bool isQuasitrail = false;
    bool isDominating = false;
    std::vector<std::string> violations;
};

/// Full closed-W-quasitrail report: every edge traversed at most twice, each
/// doubled edge anchored at a once-visited W-endpoint via its predecessor
/// and successor edges; domination = a visited vertex in every edge of G.
QuasitrailReport validate_W_quasitrail(const ClosedWalk& q, const MultiGraph& g,
                                       const std::vector<VertexId>& w);

struct ConversionResult {
    bool ok = false;
    std::vector<HyperedgeId> cycle;
    std::string error;
};

/// Dominating closed W-quasitrail of IG(H) -> Hamilton cycle of L(H).
/// Detours cover dominated-but-unvisited whites; the white visit sequence is
/// read off; multiply-visited whites are resolved by occurrence-selection
/// backtracking. The cycle is verified before it is returned.
ConversionResult quasitrail_to_hamilton(const ClosedWalk& q, const Hypergraph& h,
                                        long long budget = 2'000'000);

bool verify_hamilton_cycle(const LineGraph& l, const std::vector<HyperedgeId>& cycle);

enum class OracleStatus { Hamiltonian, NonHamiltonian, BudgetExhausted };

struct OracleResult {
    OracleStatus status = OracleStatus::BudgetExhausted;
    std::vector<VertexId> cycle;
    long long steps = 0;
};

/// Exact Hamiltonicity by backtracking; intended for small simple graphs.
OracleResult hamiltonian_oracle(const MultiGraph& g, long long budget = 10'000'000);

struct Certificate {
    PipelineConfig config;
    bool theoremMode = false;
    bool verified = false;
    std::string refusalStage;   // empty iff verified
    std::string refusalReason;

    std::vector<std::pair<std::string, std::string>> stages;  // (name, status)

    std::optional<HypothesisReport> hypothesis;
    std::vector<VertexId> heavy;
    std::optional<TerminalConnectivity> lemmaConnectivity;
    std::vector<TConnector> connectors;
    std::vector<EdgeId> combinedEdges;
    std::optional<ClosedWalk> trail;
    std::optional<ClosedWalk> detoured;
    std::optional<QuasitrailReport> quasitrail;
    std::vector<HyperedgeId> hamiltonCycle;
};

/// The full constructive pipeline. Never reports verified=true unless the
/// final cycle passes verify_hamilton_cycle, regardless of thresholds.
Certificate certify(const Hypergraph& h, const PipelineConfig& cfg = {});

}  // namespace hamlg

#endif
