// Tests for the AD / AS community goodness metrics.

#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "burstcore/metrics.hpp"
#include "burstcore/temporal_graph.hpp"
#include "test_support.hpp"

namespace {

using burstcore::ArgumentError;
using burstcore::NodeId;
using burstcore::NodeSet;
using burstcore::TemporalEdge;
using burstcore::TemporalGraph;
using burstcore::Timestamp;

// 4-clique on nodes 0..3 alive at t ∈ {1,2,3}, pendant node 4 attached to
// node 0 at t=1. Community {0,1,2,3} has 18 internal temporal edges
// (6 pairs × 3 snapshots) and exactly 1 cross edge.
TemporalGraph clique_with_pendant() {
    std::vector<TemporalEdge> triples;
    for (NodeId u = 0; u < 4; ++u) {
        for (NodeId v = u + 1; v < 4; ++v) {
            for (Timestamp t = 1; t <= 3; ++t) triples.push_back({u, v, t});
        }
    }
    triples.push_back({0, 4, 1});
    return testsupport::make_graph(5, 3, std::move(triples));
}

TEST(Metrics, IsolatedNodeHasZeroDensity) {
    const auto g = testsupport::make_graph(3, 2, {{1, 2, 1}});
    EXPECT_DOUBLE_EQ(burstcore::average_density(g, {0}), 0.0);
    EXPECT_DOUBLE_EQ(burstcore::average_separability(g, {0}), 0.0);
    const auto report = burstcore::score_community(g, {0});
    EXPECT_EQ(report.internal_edges, 0);
    EXPECT_EQ(report.cross_edges, 0);
    EXPECT_EQ(report.community_size, 1);
    EXPECT_DOUBLE_EQ(report.ad, 0.0);
    EXPECT_DOUBLE_EQ(report.as_, 0.0);
    EXPECT_FALSE(report.as_infinite);
}

TEST(Metrics, CliqueGoldenAverageDensity) {
    const auto g = clique_with_pendant();
    const NodeSet clique{0, 1, 2, 3};
    // Each member touches 3 neighbors over 3 snapshots: degree 9 in the
    // induced subgraph, so the average is 9 as well.
    EXPECT_DOUBLE_EQ(burstcore::average_density(g, clique), 9.0);
    const auto report = burstcore::score_community(g, clique);
    EXPECT_EQ(report.internal_edges, 18);
    EXPECT_EQ(report.cross_edges, 1);
    EXPECT_EQ(report.community_size, 4);
    EXPECT_DOUBLE_EQ(report.ad, 9.0);
    EXPECT_DOUBLE_EQ(report.as_, 18.0);
    EXPECT_FALSE(report.as_infinite);
}

TEST(Metrics, IsolatedCliqueSeparabilityIsInfinite) {
    // Clique plus a disjoint edge: the clique community has no cross edges.
    std::vector<TemporalEdge> triples;
    for (NodeId u = 0; u < 3; ++u) {
        for (NodeId v = u + 1; v < 3; ++v) triples.push_back({u, v, 1});
    }
    triples.push_back({3, 4, 1});
    const auto g = testsupport::make_graph(5, 1, std::move(triples));

    const NodeSet clique{0, 1, 2};
    EXPECT_TRUE(std::isinf(burstcore::average_separability(g, clique)));
    const auto report = burstcore::score_community(g, clique);
    EXPECT_TRUE(report.as_infinite);
    EXPECT_TRUE(std::isinf(report.as_));
    EXPECT_EQ(report.internal_edges, 3);
    EXPECT_EQ(report.cross_edges, 0);
}

TEST(Metrics, NoInternalEdgesGivesZeroSeparability) {
    // Community of two nodes on opposite sides of a star: all incident edges
    // are cross edges, none internal.
    const auto g = testsupport::make_graph(
        4, 2, {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}});
    const NodeSet community{1, 2};
    EXPECT_DOUBLE_EQ(burstcore::average_separability(g, community), 0.0);
    const auto report = burstcore::score_community(g, community);
    EXPECT_DOUBLE_EQ(report.as_, 0.0);
    EXPECT_FALSE(report.as_infinite);
    EXPECT_EQ(report.internal_edges, 0);
    EXPECT_EQ(report.cross_edges, 2);
}

TEST(Metrics, EmptyCommunityThrows) {
    const auto g = testsupport::make_graph(2, 1, {{0, 1, 1}});
    EXPECT_THROW(burstcore::average_density(g, {}), ArgumentError);
    EXPECT_THROW(burstcore::average_separability(g, {}), ArgumentError);
    EXPECT_THROW(burstcore::score_community(g, {}), ArgumentError);
}

TEST(Metrics, WholeGraphCommunityHasNoCrossEdges) {
    std::mt19937_64 rng(901);
    const auto g = testsupport::random_graph(rng, 12, 4, 0.2);
    NodeSet all(static_cast<std::size_t>(g.n));
    std::iota(all.begin(), all.end(), 0);
    const auto report = burstcore::score_community(g, all);
    EXPECT_EQ(report.cross_edges, 0);
    EXPECT_GT(report.internal_edges, 0);
    EXPECT_TRUE(report.as_infinite);
}

TEST(Metrics, RandomCommunitiesMatchEdgeScanOracle) {
    std::mt19937_64 rng(902);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = testsupport::random_graph(rng, 14, 5, 0.15);
        std::uniform_int_distribution<int> size_dist(1, g.n);
        const int k = size_dist(rng);
        auto perm = testsupport::random_permutation(rng, g.n);
        NodeSet community(perm.begin(), perm.begin() + k);
        std::sort(community.begin(), community.end());

        const auto [internal, cross] = testsupport::naive_internal_cross(g, community);
        const auto report = burstcore::score_community(g, community);
        ASSERT_EQ(report.internal_edges, internal) << "trial " << trial;
        ASSERT_EQ(report.cross_edges, cross) << "trial " << trial;
        EXPECT_DOUBLE_EQ(report.ad,
                         2.0 * static_cast<double>(internal) /
                             static_cast<double>(community.size()));
        EXPECT_DOUBLE_EQ(burstcore::average_density(g, community), report.ad);
        if (internal == 0) {
            EXPECT_DOUBLE_EQ(report.as_, 0.0);
            EXPECT_FALSE(report.as_infinite);
        } else if (cross == 0) {
            EXPECT_TRUE(report.as_infinite);
        } else {
            EXPECT_DOUBLE_EQ(report.as_, static_cast<double>(internal) /
                                             static_cast<double>(cross));
            EXPECT_DOUBLE_EQ(burstcore::average_separability(g, community),
                             report.as_);
        }
    }
}

// AD only counts edges; node names and snapshot identities are immaterial.
TEST(Metrics, InvariantUnderRelabelingAndTimestampPermutation) {
    std::mt19937_64 rng(903);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = testsupport::random_graph(rng, 10, 5, 0.2);
        std::uniform_int_distribution<int> size_dist(1, g.n);
        const int k = size_dist(rng);
        auto node_perm = testsupport::random_permutation(rng, g.n);
        NodeSet community(node_perm.begin(), node_perm.begin() + k);
        std::sort(community.begin(), community.end());
        const auto base = burstcore::score_community(g, community);

        // Relabeled copy: map the community through the permutation.
        auto perm = testsupport::random_permutation(rng, g.n);
        const auto h = testsupport::relabel(g, perm);
        NodeSet mapped;
        for (NodeId u : community) {
            mapped.push_back(perm[static_cast<std::size_t>(u)]);
        }
        std::sort(mapped.begin(), mapped.end());
        const auto relabeled = burstcore::score_community(h, mapped);
        EXPECT_EQ(relabeled.internal_edges, base.internal_edges);
        EXPECT_EQ(relabeled.cross_edges, base.cross_edges);
        EXPECT_DOUBLE_EQ(relabeled.ad, base.ad);

        // Timestamp-permuted copy: shuffle which snapshot each edge lives in.
        std::vector<Timestamp> tperm(static_cast<std::size_t>(g.horizon));
        std::iota(tperm.begin(), tperm.end(), Timestamp{1});
        std::shuffle(tperm.begin(), tperm.end(), rng);
        std::vector<TemporalEdge> triples;
        for (NodeId u = 0; u < g.n; ++u) {
            for (const auto& [v, t] : g.adj[static_cast<std::size_t>(u)]) {
                if (u < v) {
                    triples.push_back({u, v, tperm[static_cast<std::size_t>(t) - 1]});
                }
            }
        }
        const auto shuffled =
            testsupport::make_graph(g.n, g.horizon, std::move(triples));
        const auto permuted = burstcore::score_community(shuffled, community);
        EXPECT_EQ(permuted.internal_edges, base.internal_edges);
        EXPECT_EQ(permuted.cross_edges, base.cross_edges);
        EXPECT_DOUBLE_EQ(permuted.ad, base.ad);
    }
}

TEST(Metrics, InternalEdgeRaisesDensityCrossEdgeLowersSeparability) {
    std::mt19937_64 rng(904);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = testsupport::random_graph(rng, 8, 4, 0.25);
        const NodeSet community{0, 1, 2};
        const auto before = burstcore::score_community(g, community);

        // Collect (pair, t) slots that are currently absent.
        std::vector<TemporalEdge> triples;
        for (NodeId u = 0; u < g.n; ++u) {
            for (const auto& [v, t] : g.adj[static_cast<std::size_t>(u)]) {
                if (u < v) triples.push_back({u, v, t});
            }
        }
        const auto present = [&](NodeId u, NodeId v, Timestamp t) {
            return std::find_if(triples.begin(), triples.end(),
                                [&](const TemporalEdge& e) {
                                    return e.u == u && e.v == v && e.t == t;
                                }) != triples.end();
        };

        // Add one internal edge slot if any is free: AD must strictly rise.
        bool added = false;
        auto with_internal = triples;
        for (Timestamp t = 1; t <= g.horizon && !added; ++t) {
            for (NodeId u = 0; u < 3 && !added; ++u) {
                for (NodeId v = u + 1; v < 3 && !added; ++v) {
                    if (!present(u, v, t)) {
                        with_internal.push_back({u, v, t});
                        added = true;
                    }
                }
            }
        }
        if (added) {
            const auto g2 =
                testsupport::make_graph(g.n, g.horizon, std::move(with_internal));
            EXPECT_GT(burstcore::average_density(g2, community), before.ad);
        }

        // Add one cross edge slot: finite AS must strictly fall.
        if (before.internal_edges > 0 && before.cross_edges > 0) {
            bool cross_added = false;
            auto with_cross = triples;
            for (Timestamp t = 1; t <= g.horizon && !cross_added; ++t) {
                for (NodeId u = 0; u < 3 && !cross_added; ++u) {
                    for (NodeId v = 3; v < g.n && !cross_added; ++v) {
                        if (!present(u, v, t)) {
                            with_cross.push_back({u, v, t});
                            cross_added = true;
                        }
                    }
                }
            }
            if (cross_added) {
                const auto g3 =
                    testsupport::make_graph(g.n, g.horizon, std::move(with_cross));
                EXPECT_LT(burstcore::average_separability(g3, community), before.as_);
            }
        }
    }
}

}  // namespace
