#pragma once

#include <cstdint>

#include "burstcore/temporal_graph.hpp"

namespace burstcore {

// Community goodness report. AD is the average number of intra-community
// temporal edges incident to a member (2·internal/|C|); AS is the ratio of
// internal to cross temporal edge counts — +∞ when the community has internal
// edges but no cross edges, 0 when it has no internal edges at all.
struct MetricReport {
    double ad = 0.0;
    double as_ = 0.0;
    bool as_infinite = false;
    std::int64_t internal_edges = 0;
    std::int64_t cross_edges = 0;
    std::int64_t community_size = 0;
};

// Both throw ArgumentError on an empty community.
double average_density(const TemporalGraph& g, const NodeSet& community);
MetricReport score_community(const TemporalGraph& g, const NodeSet& community);

// Convenience returning +inf as a double when cross_edges == 0 and internal
// edges exist.
double average_separability(const TemporalGraph& g, const NodeSet& community);

}  // namespace burstcore
