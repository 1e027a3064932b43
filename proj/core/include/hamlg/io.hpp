#ifndef HAMLG_IO_HPP
#define HAMLG_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "hamlg/pipeline.hpp"

namespace hamlg {

inline constexpr const char* kToolVersion = "0.1.0";

struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
    int line;
};

/// One hyperedge per non-comment line: 1-3 whitespace-separated vertex
/// tokens. Lines starting with '#' are comments. Duplicate lines are
/// duplicate hyperedges.
Hypergraph parse_hypergraph(const std::string& text);

std::string serialize_hypergraph(const Hypergraph& h);

/// The n-choose-2 pairs of {v1..vn} as 2-element hyperedges.
Hypergraph generate_complete(int n);

struct RandomSpec {
    int vertices = 0;
    int hyperedges = 0;
    double p3 = 0.5;  // probability of a size-3 hyperedge
    std::uint64_t seed = 0;
};

/// Seed-deterministic random hypergraph with hyperedge sizes in {2,3}.
Hypergraph generate_random(const RandomSpec& spec);

using json = nlohmann::ordered_json;

json validation_to_json(const ValidationReport& r);
json menger_witness_to_json(const MengerWitness& w);
json quasitrail_report_to_json(const QuasitrailReport& r);
json certificate_to_json(const Certificate& cert, const Hypergraph& h);

struct LoadedCertificate {
    bool verified = false;
    std::vector<HyperedgeId> cycle;
};

LoadedCertificate certificate_from_json(const json& doc);

}  // namespace hamlg

#endif
