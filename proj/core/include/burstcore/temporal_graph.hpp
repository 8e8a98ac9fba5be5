#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "burstcore/errors.hpp"

namespace burstcore {

// Dense node identifier, assigned 0..n-1 in order of first appearance at
// load time and stable for the lifetime of the graph. Original labels live
// in the graph's label table.
using NodeId = std::int32_t;

// Snapshot index, 1..horizon after normalization.
using Timestamp = std::int32_t;

// One undirected temporal edge (u, v, t) with u ≠ v; stored symmetrically in
// both endpoints' adjacency once a graph is built.
struct TemporalEdge {
    NodeId u = 0;
    NodeId v = 0;
    Timestamp t = 0;

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Membership mask over NodeIds; mask[u] != 0 means u is in the subset.
using NodeMask = std::vector<char>;

// Sorted list of NodeIds — the canonical node-set representation in results.
using NodeSet = std::vector<NodeId>;

struct IngestStats {
    std::uint64_t lines_total = 0;       // every line seen, including comments/blank
    std::uint64_t comment_or_blank = 0;  // skipped without parsing
    std::uint64_t edges_kept = 0;        // triples surviving normalization
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicates_dropped = 0;  // same (u,v,bucket) after normalization
};

// Output of parse_edge_list: normalized triples plus the label interning
// tables, ready for build_graph.
struct ParsedEdges {
    std::vector<TemporalEdge> triples;   // t already mapped to bucket indices ≥ 1
    std::vector<std::string> labels;     // NodeId -> original label
    std::unordered_map<std::string, NodeId> label_ids;  // original label -> NodeId
    Timestamp horizon = 0;               // max bucket index
    IngestStats stats;
};

// Snapshot-indexed undirected temporal multigraph over contiguous timestamps
// 1..horizon (empty snapshots included). Immutable once built; safe to share
// across threads.
struct TemporalGraph {
    NodeId n = 0;
    Timestamp horizon = 0;
    std::int64_t m = 0;  // temporal edge count; total stored pairs = 2m

    // adj[u] holds (neighbor, t) pairs sorted by (neighbor, t), so the edges
    // towards one neighbor form a contiguous, time-sorted run.
    std::vector<std::vector<std::pair<NodeId, Timestamp>>> adj;

    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> label_ids;

    NodeId id_of(const std::string& label) const;  // ArgumentError if unknown

    // Rough heap footprint of the loaded structure in bytes (adjacency,
    // label table, interning map). Used for memory-discipline checks.
    std::size_t memory_footprint_bytes() const;
};

// Simple projection of a temporal graph: edge (u,v) present iff some (u,v,t)
// exists. No duplicates, no self-loops.
struct DetemporalGraph {
    NodeId n = 0;
    std::vector<std::vector<NodeId>> adj;  // sorted distinct neighbor lists

    std::int64_t edge_count() const;
    std::int32_t max_degree() const;
};

// Per-snapshot degree of `owner` restricted to a node subset: at(t) counts
// distinct neighbors inside the subset at snapshot t. Storage is 0-based,
// access is 1-based to match the maths.
struct DegreeSequence {
    std::vector<std::int32_t> values;  // length == horizon; values[i] is snapshot i+1
    NodeId owner = 0;
    NodeSet restriction;  // the subset S this was computed against

    Timestamp horizon() const { return static_cast<Timestamp>(values.size()); }
    std::int32_t at(Timestamp t) const { return values[static_cast<std::size_t>(t) - 1]; }
};

// Bucketing policy for raw timestamps. Width w > 0 maps a raw timestamp to
// floor((t - t_min)/w) + 1. Raw mode assumes the input timestamps already
// form an arithmetic sequence and maps them onto its grid, preserving gaps
// as empty snapshots: t -> (t - t_min)/step + 1 with step = gcd of all
// (t - t_min).
struct BucketSpec {
    bool raw = true;
    std::int64_t width = 1;

    static BucketSpec raw_mode() { return BucketSpec{true, 1}; }
    static BucketSpec with_width(std::int64_t w);  // ArgumentError if w <= 0
    // Accepts "raw" or a positive integer string.
    static BucketSpec parse(const std::string& text);
};

// Reads "u v t_raw" lines (whitespace separated; anything from '#' to the end
// of a line is a comment), interns labels, normalizes timestamps to bucket
// indices, drops self-loops, and collapses duplicate (u,v,bucket) triples.
// Throws FormatError with the line number on a malformed line and
// FormatError("no edges") when the stream holds no data lines at all.
ParsedEdges parse_edge_list(std::istream& in, const BucketSpec& buckets);

// Assembles the final adjacency structure. Throws FormatError("no edges")
// when the triple list is empty.
TemporalGraph build_graph(ParsedEdges parsed);

// Convenience: parse + build from a file path.
TemporalGraph load_graph(const std::string& path, const BucketSpec& buckets);

// DS(u, S): distinct in-subset neighbors of u per snapshot. Throws
// ArgumentError when u is not in S.
DegreeSequence degree_sequence(const TemporalGraph& g, NodeId u, const NodeMask& subset);

DetemporalGraph detemporal(const TemporalGraph& g);

// Writes the graph back out in the edge-list input format, one "u v t" line
// per temporal edge (u < v), using original labels and normalized timestamps.
// Re-parsing with bucket width 1 reproduces an isomorphic graph.
void write_edge_list(const TemporalGraph& g, std::ostream& out);

NodeMask mask_of(const NodeSet& nodes, NodeId n);
NodeSet all_nodes(NodeId n);

}  // namespace burstcore
