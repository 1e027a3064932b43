#include "hamlg/io.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace hamlg {

Hypergraph parse_hypergraph(const std::string& text) {
    Hypergraph h;
    std::map<std::string, VertexId> ids;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) throw ParseError(lineNo, "line with no vertex tokens");
        if (tokens.size() > 3)
            throw ParseError(lineNo, "hyperedge with more than 3 vertex tokens");
        Hyperedge e;
        for (const std::string& t : tokens) {
            auto [it, inserted] = ids.emplace(t, static_cast<VertexId>(h.vertexLabels.size()));
            if (inserted) h.vertexLabels.push_back(t);
            e.members.push_back(it->second);
        }
        std::sort(e.members.begin(), e.members.end());
        e.members.erase(std::unique(e.members.begin(), e.members.end()), e.members.end());
        h.hyperedges.push_back(std::move(e));
    }
    return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    for (const Hyperedge& e : h.hyperedges) {
        for (size_t i = 0; i < e.members.size(); ++i) {
            if (i) out << ' ';
            out << h.vertexLabels[e.members[i]];
        }
        out << '\n';
    }
    return out.str();
}

Hypergraph generate_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    Hypergraph h;
    for (int i = 1; i <= n; ++i) h.vertexLabels.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) h.hyperedges.push_back({{i, j}});
    return h;
}

Hypergraph generate_random(const RandomSpec& spec) {
    if (spec.vertices < 2) throw std::invalid_argument("need at least 2 vertices");
    if (spec.hyperedges < 0) throw std::invalid_argument("negative hyperedge count");
    if (spec.p3 < 0.0 || spec.p3 > 1.0) throw std::invalid_argument("p3 outside [0,1]");
    if (spec.vertices < 3 && spec.p3 > 0.0)
        throw std::invalid_argument("size-3 hyperedges need at least 3 vertices");

    // mt19937_64 raw draws only, for cross-platform reproducibility.
    std::mt19937_64 rng(spec.seed);
    auto below = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

    Hypergraph h;
    for (int i = 1; i <= spec.vertices; ++i) h.vertexLabels.push_back("v" + std::to_string(i));
    for (int j = 0; j < spec.hyperedges; ++j) {
        double u = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
        int size = u < spec.p3 ? 3 : 2;
        std::vector<VertexId> pool(spec.vertices);
        for (int i = 0; i < spec.vertices; ++i) pool[i] = i;
        Hyperedge e;
        for (int s = 0; s < size; ++s) {
            int idx = below(static_cast<int>(pool.size()));
            e.members.push_back(pool[idx]);
            pool.erase(pool.begin() + idx);
        }
        std::sort(e.members.begin(), e.members.end());
        h.hyperedges.push_back(std::move(e));
    }
    return h;
}

namespace {

json pathToJson(const Path& p) {
    return json{{"vertices", p.vertices}, {"edges", p.edges}};
}

json walkToJson(const ClosedWalk& w) {
    return json{{"vertices", w.vertices}, {"edges", w.edges}};
}

}  // namespace

json validation_to_json(const ValidationReport& r) {
    return json{{"valid", r.valid},
                {"pipelineEligible", r.pipelineEligible},
                {"issues", r.issues}};
}

json menger_witness_to_json(const MengerWitness& w) {
    json j;
    j["kind"] = w.isCut ? "cut" : "paths";
    if (w.isCut) {
        j["cutEdges"] = w.cutEdges;
        j["sourceSide"] = w.sourceSide;
        j["sinkSide"] = w.sinkSide;
    } else {
        json paths = json::array();
        for (const Path& p : w.paths) paths.push_back(pathToJson(p));
        j["paths"] = paths;
    }
    return j;
}

json quasitrail_report_to_json(const QuasitrailReport& r) {
    json counts = json::object();
    for (const auto& [e, c] : r.edgeUseCounts) counts[std::to_string(e)] = c;
    return json{{"isClosedWalk", r.isClosedWalk},
                {"isQuasitrail", r.isQuasitrail},
                {"isDominating", r.isDominating},
                {"edgeUseCounts", counts},
                {"violations", r.violations}};
}

json certificate_to_json(const Certificate& cert, const Hypergraph& h) {
    json j;
    j["tool"] = "hamlg";
    j["version"] = kToolVersion;
    j["configuration"] = {{"minDegree", cert.config.minDegree},
                          {"connectivity", cert.config.connectivity},
                          {"heavy", cert.config.heavy},
                          {"k", cert.config.k},
                          {"connectorBudget", cert.config.connectorBudget},
                          {"exactEdgeCap", cert.config.exactEdgeCap},
                          {"conversionBudget", cert.config.conversionBudget}};
    j["mode"] = cert.theoremMode ? "theorem" : "heuristic";
    j["verified"] = cert.verified;
    if (!cert.verified) {
        j["refusal"] = {{"stage", cert.refusalStage}, {"reason", cert.refusalReason}};
    }

    json stages = json::array();
    for (const auto& [name, status] : cert.stages)
        stages.push_back(json{{"name", name}, {"status", status}});
    j["stages"] = stages;

    if (cert.hypothesis) {
        const auto& hr = *cert.hypothesis;
        j["hypotheses"] = {{"degenerate", hr.degenerate},
                           {"degenerateReasons", hr.degenerateReasons},
                           {"lineMinDegree", hr.lineMinDegree},
                           {"minDegreeOk", hr.minDegreeOk},
                           {"connectivityLowerBound", hr.connectivityLowerBound},
                           {"connectivityOk", hr.connectivityOk},
                           {"heavyCoverOk", hr.heavyCoverOk},
                           {"uncoveredHyperedges", hr.uncoveredHyperedges}};
    }
    if (!cert.heavy.empty()) {
        json heavy = json::array();
        for (VertexId v : cert.heavy) heavy.push_back(h.vertexLabels[v]);
        j["heavySet"] = heavy;
    }
    if (cert.lemmaConnectivity) {
        json lc;
        lc["holds"] = cert.lemmaConnectivity->holds;
        if (cert.lemmaConnectivity->witness)
            lc["witness"] = menger_witness_to_json(*cert.lemmaConnectivity->witness);
        j["terminalConnectivity"] = lc;
    }
    if (!cert.connectors.empty()) {
        json conns = json::array();
        for (const TConnector& c : cert.connectors) {
            json paths = json::array();
            for (const Path& p : c.paths) paths.push_back(pathToJson(p));
            conns.push_back(json{{"paths", paths}});
        }
        j["connectors"] = conns;
    }
    if (!cert.combinedEdges.empty()) j["combinedEdges"] = cert.combinedEdges;
    if (cert.trail) j["closedTrail"] = walkToJson(*cert.trail);
    if (cert.detoured) j["detouredWalk"] = walkToJson(*cert.detoured);
    if (cert.quasitrail) j["quasitrailReport"] = quasitrail_report_to_json(*cert.quasitrail);
    if (!cert.hamiltonCycle.empty()) {
        j["hamiltonCycle"] = cert.hamiltonCycle;
        json labels = json::array();
        for (HyperedgeId e : cert.hamiltonCycle) {
            json members = json::array();
            for (VertexId v : h.hyperedges[e].members) members.push_back(h.vertexLabels[v]);
            labels.push_back(members);
        }
        j["hamiltonCycleMembers"] = labels;
    }
    return j;
}

LoadedCertificate certificate_from_json(const json& doc) {
    LoadedCertificate lc;
    lc.verified = doc.value("verified", false);
    if (doc.contains("hamiltonCycle"))
        lc.cycle = doc["hamiltonCycle"].get<std::vector<HyperedgeId>>();
    return lc;
}

}  // namespace hamlg
