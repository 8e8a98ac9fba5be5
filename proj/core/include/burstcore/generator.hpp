#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "burstcore/temporal_graph.hpp"

namespace burstcore {

// Planted burst: a clique over `size` dedicated nodes whose full edge set
// appears at each snapshot of [t_begin, t_end] independently with
// `presence_prob`.
struct PlantedClique {
    std::int32_t size = 0;
    Timestamp t_begin = 1;
    Timestamp t_end = 1;
    double presence_prob = 1.0;
};

// Synthetic instance description: per snapshot, each node pair carries a
// background edge with probability `background_prob`; an optional clique
// burst is planted on the lowest-numbered nodes. Node labels are "0".."n-1".
struct GenConfig {
    std::int32_t n = 0;
    Timestamp horizon = 0;
    double background_prob = 0.0;
    std::optional<PlantedClique> clique;
    std::uint64_t seed = 0;
};

struct GenResult {
    std::vector<TemporalEdge> edges;   // deduplicated, sorted by (t, u, v)
    NodeSet clique_members;            // empty when nothing was planted
};

// Deterministic for a fixed config (same seed → identical edge list). The
// per-snapshot background edge count is drawn binomially and the pairs are
// sampled without replacement, which is distribution-identical to flipping an
// independent coin per pair. Throws ArgumentError on invalid probabilities,
// non-positive dimensions, or a planted window outside the horizon.
GenResult generate(const GenConfig& config);

// Writes the instance in the edge-list input format; labels are the node
// indices. write_members emits one member label per line (the sidecar file
// tests assert against).
void write_generated(const GenResult& result, std::ostream& out);
void write_members(const GenResult& result, std::ostream& out);

}  // namespace burstcore
