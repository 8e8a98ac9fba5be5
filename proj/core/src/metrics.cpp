#include "burstcore/metrics.hpp"

#include <limits>

namespace burstcore {

namespace {

// Counts temporal edges with both endpoints inside the community and with
// exactly one endpoint inside, in a single pass over the stored pairs.
std::pair<std::int64_t, std::int64_t> edge_split(const TemporalGraph& g,
                                                 const NodeSet& community) {
    if (community.empty()) throw ArgumentError("empty community");
    NodeMask mask = mask_of(community, g.n);

    std::int64_t internal = 0;
    std::int64_t cross = 0;
    for (NodeId u : community) {
        for (const auto& [v, t] : g.adj[static_cast<std::size_t>(u)]) {
            if (mask[static_cast<std::size_t>(v)]) {
                ++internal;  // counted from both endpoints; halved below
            } else {
                ++cross;
            }
        }
    }
    return {internal / 2, cross};
}

}  // namespace

double average_density(const TemporalGraph& g, const NodeSet& community) {
    auto [internal, cross] = edge_split(g, community);
    (void)cross;
    return 2.0 * static_cast<double>(internal) / static_cast<double>(community.size());
}

double average_separability(const TemporalGraph& g, const NodeSet& community) {
    auto [internal, cross] = edge_split(g, community);
    if (internal == 0) return 0.0;
    if (cross == 0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(internal) / static_cast<double>(cross);
}

MetricReport score_community(const TemporalGraph& g, const NodeSet& community) {
    auto [internal, cross] = edge_split(g, community);

    MetricReport report;
    report.internal_edges = internal;
    report.cross_edges = cross;
    report.community_size = static_cast<std::int64_t>(community.size());
    report.ad = 2.0 * static_cast<double>(internal) / static_cast<double>(community.size());
    if (internal == 0) {
        report.as_ = 0.0;
    } else if (cross == 0) {
        report.as_infinite = true;
        report.as_ = std::numeric_limits<double>::infinity();
    } else {
        report.as_ = static_cast<double>(internal) / static_cast<double>(cross);
    }
    return report;
}

}  // namespace burstcore
