#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "burstcore/errors.hpp"
#include "burstcore/temporal_graph.hpp"
#include "test_support.hpp"

namespace {

using burstcore::ArgumentError;
using burstcore::BucketSpec;
using burstcore::FormatError;
using burstcore::NodeId;
using burstcore::TemporalEdge;
using burstcore::Timestamp;
using testsupport::make_graph;
using testsupport::parse_text;

TEST(ParseEdgeList, DuplicateTriplesCollapse) {
    std::istringstream in("a b 10\na b 10\n");
    const auto parsed = burstcore::parse_edge_list(in, BucketSpec::with_width(1));
    ASSERT_EQ(parsed.triples.size(), 1u);
    EXPECT_EQ(parsed.triples[0], (TemporalEdge{0, 1, 1}));
    EXPECT_EQ(parsed.stats.duplicates_dropped, 1u);
}

TEST(ParseEdgeList, ReversedEndpointsAreTheSameEdge) {
    std::istringstream in("a b 1\nb a 1\n");
    const auto parsed = burstcore::parse_edge_list(in, BucketSpec::raw_mode());
    ASSERT_EQ(parsed.triples.size(), 1u);
    EXPECT_EQ(parsed.stats.duplicates_dropped, 1u);
}

TEST(ParseEdgeList, SelfLoopsDropped) {
    std::istringstream in("a a 5\n");
    const auto parsed = burstcore::parse_edge_list(in, BucketSpec::raw_mode());
    EXPECT_TRUE(parsed.triples.empty());
    EXPECT_EQ(parsed.stats.self_loops_dropped, 1u);
}

TEST(ParseEdgeList, CommentsAndBlanksIgnored) {
    std::istringstream in("# header\n\na b 1  # trailing note\n   \nb c 2\n");
    const auto parsed = burstcore::parse_edge_list(in, BucketSpec::raw_mode());
    EXPECT_EQ(parsed.triples.size(), 2u);
    EXPECT_EQ(parsed.stats.comment_or_blank, 3u);
}

TEST(ParseEdgeList, MalformedLineReportsLineNumber) {
    std::istringstream in("a b 1\nbroken line here now\n");
    try {
        burstcore::parse_edge_list(in, BucketSpec::raw_mode());
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(ParseEdgeList, TwoTokensIsMalformed) {
    std::istringstream in("a b\n");
    EXPECT_THROW(burstcore::parse_edge_list(in, BucketSpec::raw_mode()), FormatError);
}

TEST(ParseEdgeList, NonIntegerTimestampIsMalformed) {
    std::istringstream in("a b xyz\n");
    EXPECT_THROW(burstcore::parse_edge_list(in, BucketSpec::raw_mode()), FormatError);
}

TEST(ParseEdgeList, EmptyInputIsNoEdges) {
    std::istringstream in("# nothing but comments\n\n");
    try {
        burstcore::parse_edge_list(in, BucketSpec::raw_mode());
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_STREQ(e.what(), "no edges");
    }
}

TEST(ParseEdgeList, LabelsInternedInFirstAppearanceOrder) {
    std::istringstream in("carol bob 1\nalice carol 2\n");
    const auto parsed = burstcore::parse_edge_list(in, BucketSpec::raw_mode());
    ASSERT_EQ(parsed.labels.size(), 3u);
    EXPECT_EQ(parsed.labels[0], "carol");
    EXPECT_EQ(parsed.labels[1], "bob");
    EXPECT_EQ(parsed.labels[2], "alice");
}

// Raw mode maps timestamps onto their own arithmetic grid: gaps survive as
// empty snapshots rather than being compressed away.
TEST(ParseEdgeList, RawModePreservesGaps) {
    std::istringstream in("a b 10\nb c 20\nc d 40\n");
    const auto parsed = burstcore::parse_edge_list(in, BucketSpec::raw_mode());
    ASSERT_EQ(parsed.triples.size(), 3u);
    EXPECT_EQ(parsed.triples[0].t, 1);
    EXPECT_EQ(parsed.triples[1].t, 2);
    EXPECT_EQ(parsed.triples[2].t, 4);
    EXPECT_EQ(parsed.horizon, 4);
}

TEST(ParseEdgeList, RawModeSingleTimestampIsHorizonOne) {
    std::istringstream in("a b 1000000\nb c 1000000\n");
    const auto parsed = burstcore::parse_edge_list(in, BucketSpec::raw_mode());
    EXPECT_EQ(parsed.horizon, 1);
}

TEST(ParseEdgeList, BucketWidthMatchesReferenceFormula) {
    std::mt19937_64 rng(20260814);
    std::uniform_int_distribution<std::int64_t> t_dist(0, 987654321);
    std::vector<std::int64_t> raw_ts;
    std::ostringstream text;
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t t = t_dist(rng);
        raw_ts.push_back(t);
        text << "u" << i << " v" << i << " " << t << "\n";
    }
    constexpr std::int64_t kWidth = 86400;
    std::istringstream in(text.str());
    const auto parsed = burstcore::parse_edge_list(in, BucketSpec::with_width(kWidth));
    const std::int64_t t_min = *std::min_element(raw_ts.begin(), raw_ts.end());
    ASSERT_EQ(parsed.triples.size(), raw_ts.size());
    // Lines carry distinct endpoint pairs, so triples stay line-aligned after
    // the stable normalization.
    for (std::size_t i = 0; i < raw_ts.size(); ++i) {
        const auto expect = (raw_ts[i] - t_min) / kWidth + 1;
        EXPECT_EQ(parsed.triples[i].t, expect) << "line " << i;
    }
}

TEST(BucketSpecParse, AcceptsRawAndIntegers) {
    EXPECT_TRUE(BucketSpec::parse("raw").raw);
    const auto spec = BucketSpec::parse("86400");
    EXPECT_FALSE(spec.raw);
    EXPECT_EQ(spec.width, 86400);
    EXPECT_THROW(BucketSpec::parse("0"), ArgumentError);
    EXPECT_THROW(BucketSpec::parse("-2"), ArgumentError);
    EXPECT_THROW(BucketSpec::parse("daily"), ArgumentError);
}

TEST(BuildGraph, EmptyTripleListIsNoEdges) {
    burstcore::ParsedEdges parsed;
    parsed.labels = {"a"};
    parsed.label_ids = {{"a", 0}};
    parsed.horizon = 3;
    try {
        burstcore::build_graph(std::move(parsed));
        FAIL() << "expected FormatError";
    } catch (const FormatError& e) {
        EXPECT_STREQ(e.what(), "no edges");
    }
}

TEST(BuildGraph, TriangleCounts) {
    const auto g = parse_text("a b 1\nb c 1\na c 1\n");
    EXPECT_EQ(g.n, 3);
    EXPECT_EQ(g.m, 3);
    EXPECT_EQ(g.horizon, 1);
    for (NodeId u = 0; u < g.n; ++u) {
        EXPECT_EQ(g.adj[static_cast<std::size_t>(u)].size(), 2u);
    }
}

TEST(BuildGraph, StoredPairsTwiceEdgesAndTimesInRange) {
    std::mt19937_64 rng(7);
    const auto g = testsupport::random_graph(rng, 40, 8, 0.02);
    std::int64_t pairs = 0;
    for (NodeId u = 0; u < g.n; ++u) {
        const auto& list = g.adj[static_cast<std::size_t>(u)];
        pairs += static_cast<std::int64_t>(list.size());
        EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
        for (const auto& [v, t] : list) {
            EXPECT_GE(t, 1);
            EXPECT_LE(t, g.horizon);
            EXPECT_NE(v, u);
        }
    }
    EXPECT_EQ(pairs, 2 * g.m);
}

TEST(TemporalGraph, IdOfUnknownLabelThrows) {
    const auto g = parse_text("a b 1\n");
    EXPECT_EQ(g.id_of("a"), 0);
    EXPECT_THROW(g.id_of("zed"), ArgumentError);
}

TEST(DegreeSequence, IsolatedNodeIsAllZero) {
    const auto g = make_graph(3, 4, {{0, 1, 2}});
    const auto ds = burstcore::degree_sequence(g, 2, burstcore::mask_of({0, 1, 2}, 3));
    ASSERT_EQ(ds.values.size(), 4u);
    for (const auto v : ds.values) EXPECT_EQ(v, 0);
}

TEST(DegreeSequence, PairJoinedEveryTimestamp) {
    std::vector<TemporalEdge> triples;
    for (Timestamp t = 1; t <= 5; ++t) triples.push_back({0, 1, t});
    const auto g = make_graph(2, 5, triples);
    const auto ds = burstcore::degree_sequence(g, 0, burstcore::mask_of({0, 1}, 2));
    EXPECT_EQ(ds.values, (std::vector<std::int32_t>{1, 1, 1, 1, 1}));
}

TEST(DegreeSequence, OwnerOutsideSubsetThrows) {
    const auto g = make_graph(3, 2, {{0, 1, 1}});
    EXPECT_THROW(burstcore::degree_sequence(g, 2, burstcore::mask_of({0, 1}, 3)),
                 ArgumentError);
}

TEST(DegreeSequence, MatchesNaiveScanOnRandomGraphs) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = testsupport::random_graph(rng, 20, 6, 0.05);
        // random subset, then random member as the owner
        burstcore::NodeSet subset;
        for (NodeId u = 0; u < g.n; ++u) {
            if (rng() % 2 == 0) subset.push_back(u);
        }
        if (subset.empty()) subset.push_back(0);
        const NodeId owner = subset[rng() % subset.size()];
        const auto mask = burstcore::mask_of(subset, g.n);
        const auto ds = burstcore::degree_sequence(g, owner, mask);
        EXPECT_EQ(ds.values, testsupport::naive_ds(g, owner, mask));
        EXPECT_EQ(ds.owner, owner);
    }
}

TEST(DegreeSequence, SumOverFullSetCountsIncidentTemporalEdges) {
    std::mt19937_64 rng(123);
    const auto g = testsupport::random_graph(rng, 25, 7, 0.04);
    const auto everyone = burstcore::mask_of(burstcore::all_nodes(g.n), g.n);
    for (NodeId u = 0; u < g.n; ++u) {
        const auto ds = burstcore::degree_sequence(g, u, everyone);
        std::int64_t total = 0;
        for (const auto v : ds.values) total += v;
        EXPECT_EQ(total,
                  static_cast<std::int64_t>(g.adj[static_cast<std::size_t>(u)].size()));
    }
}

TEST(Detemporal, RepeatedTriangleProjectsToSimpleTriangle) {
    const auto g = parse_text("a b 1\nb c 1\na c 1\na b 2\nb c 2\na c 2\n");
    const auto det = burstcore::detemporal(g);
    EXPECT_EQ(det.edge_count(), 3);
    EXPECT_EQ(det.max_degree(), 2);
}

TEST(Detemporal, SingleEdge) {
    const auto g = parse_text("u v 3\n");
    const auto det = burstcore::detemporal(g);
    EXPECT_EQ(det.edge_count(), 1);
    ASSERT_EQ(det.adj[0].size(), 1u);
    EXPECT_EQ(det.adj[0][0], 1);
}

TEST(Detemporal, MatchesDistinctPairSetOnRandomGraphs) {
    std::mt19937_64 rng(5150);
    const auto g = testsupport::random_graph(rng, 30, 6, 0.03);
    std::set<std::pair<NodeId, NodeId>> pairs;
    for (NodeId u = 0; u < g.n; ++u) {
        for (const auto& [v, t] : g.adj[static_cast<std::size_t>(u)]) {
            if (u < v) pairs.emplace(u, v);
        }
    }
    const auto det = burstcore::detemporal(g);
    EXPECT_EQ(det.edge_count(), static_cast<std::int64_t>(pairs.size()));
    for (NodeId u = 0; u < det.n; ++u) {
        const auto& list = det.adj[static_cast<std::size_t>(u)];
        EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
        EXPECT_EQ(std::adjacent_find(list.begin(), list.end()), list.end());
        for (NodeId v : list) {
            const bool present = pairs.count({std::min(u, v), std::max(u, v)}) > 0;
            EXPECT_TRUE(present);
        }
    }
    // de-temporal degree dominates every snapshot degree
    const auto everyone = burstcore::mask_of(burstcore::all_nodes(g.n), g.n);
    for (NodeId u = 0; u < g.n; ++u) {
        const auto ds = burstcore::degree_sequence(g, u, everyone);
        const auto peak = *std::max_element(ds.values.begin(), ds.values.end());
        EXPECT_GE(static_cast<std::int32_t>(det.adj[static_cast<std::size_t>(u)].size()),
                  peak);
    }
}

TEST(RoundTrip, WriteThenReparseIsIsomorphic) {
    std::mt19937_64 rng(31337);
    const auto g = testsupport::random_graph(rng, 15, 5, 0.08);
    std::ostringstream out;
    burstcore::write_edge_list(g, out);
    const auto back = parse_text(out.str(), BucketSpec::with_width(1));
    ASSERT_EQ(back.n, g.n);
    ASSERT_EQ(back.m, g.m);
    ASSERT_EQ(back.horizon, g.horizon);
    // same temporal edges, matched through the labels
    std::set<std::tuple<std::string, std::string, Timestamp>> want;
    std::set<std::tuple<std::string, std::string, Timestamp>> got;
    const auto collect = [](const burstcore::TemporalGraph& graph, auto& sink) {
        for (NodeId u = 0; u < graph.n; ++u) {
            for (const auto& [v, t] : graph.adj[static_cast<std::size_t>(u)]) {
                if (u < v) {
                    auto a = graph.labels[static_cast<std::size_t>(u)];
                    auto b = graph.labels[static_cast<std::size_t>(v)];
                    if (a > b) std::swap(a, b);
                    sink.emplace(std::move(a), std::move(b), t);
                }
            }
        }
    };
    collect(g, want);
    collect(back, got);
    EXPECT_EQ(want, got);
}

TEST(TemporalGraph, MemoryFootprintIsPlausible) {
    std::mt19937_64 rng(2);
    const auto g = testsupport::random_graph(rng, 50, 8, 0.05);
    const auto bytes = g.memory_footprint_bytes();
    // at least the raw adjacency payload, at most a very loose upper bound
    EXPECT_GE(bytes, static_cast<std::size_t>(2 * g.m) * sizeof(std::pair<NodeId, Timestamp>));
    EXPECT_LT(bytes, 10u * 1024u * 1024u);
}

}  // namespace
