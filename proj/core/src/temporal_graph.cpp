#include "burstcore/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

namespace burstcore {

namespace {

constexpr Timestamp kMaxHorizon = 10'000'000;

// Splits a line into at most 4 whitespace-separated tokens (3 expected; a
// fourth means the line is malformed).
int tokenize(std::string_view line, std::string_view out[4]) {
    int count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (count < 4) out[count] = line.substr(start, i - start);
        if (++count >= 4) break;
    }
    return count;
}

std::int64_t parse_timestamp(std::string_view token, std::uint64_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw FormatError("timestamp is not an integer: '" + std::string(token) + "'", line_no);
    }
    return value;
}

struct RawTriple {
    NodeId u;
    NodeId v;
    std::int64_t t_raw;
};

}  // namespace

BucketSpec BucketSpec::with_width(std::int64_t w) {
    if (w <= 0) throw ArgumentError("bucket width must be positive");
    return BucketSpec{false, w};
}

BucketSpec BucketSpec::parse(const std::string& text) {
    if (text == "raw") return raw_mode();
    std::int64_t w = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
    if (ec != std::errc() || ptr != text.data() + text.size() || w <= 0) {
        throw ArgumentError("bucket width must be 'raw' or a positive integer, got '" + text + "'");
    }
    return with_width(w);
}

ParsedEdges parse_edge_list(std::istream& in, const BucketSpec& buckets) {
    ParsedEdges out;
    std::vector<RawTriple> raw;

    auto intern = [&out](std::string_view label) -> NodeId {
        auto it = out.label_ids.find(std::string(label));
        if (it != out.label_ids.end()) return it->second;
        NodeId id = static_cast<NodeId>(out.labels.size());
        out.labels.emplace_back(label);
        out.label_ids.emplace(out.labels.back(), id);
        return id;
    };

    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++out.stats.lines_total;

        std::string_view view(line);
        if (auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }

        std::string_view tokens[4];
        int count = tokenize(view, tokens);
        if (count == 0) {
            ++out.stats.comment_or_blank;
            continue;
        }
        if (count != 3) {
            throw FormatError("expected 'u v t', got " + std::to_string(count) + " token(s)",
                              line_no);
        }

        std::int64_t t_raw = parse_timestamp(tokens[2], line_no);
        if (tokens[0] == tokens[1]) {
            ++out.stats.self_loops_dropped;
            continue;
        }
        raw.push_back(RawTriple{intern(tokens[0]), intern(tokens[1]), t_raw});
    }

    if (out.stats.lines_total == out.stats.comment_or_blank) {
        throw FormatError("no edges");
    }
    if (raw.empty()) {
        // Only self-loops: a valid parse with zero surviving triples.
        out.horizon = 0;
        return out;
    }

    // Normalize timestamps onto contiguous bucket indices starting at 1.
    std::int64_t t_min = raw.front().t_raw;
    for (const RawTriple& r : raw) t_min = std::min(t_min, r.t_raw);

    std::int64_t step = 1;
    if (buckets.raw) {
        // The input is assumed to sit on an arithmetic grid; its step is the
        // gcd of all offsets from t_min. Gaps stay as empty snapshots.
        std::int64_t g = 0;
        for (const RawTriple& r : raw) g = std::gcd(g, r.t_raw - t_min);
        step = g == 0 ? 1 : g;
    } else {
        step = buckets.width;
    }

    out.triples.reserve(raw.size());
    std::int64_t max_bucket = 1;
    for (const RawTriple& r : raw) {
        std::int64_t bucket = (r.t_raw - t_min) / step + 1;
        max_bucket = std::max(max_bucket, bucket);
        if (max_bucket > kMaxHorizon) {
            throw ArgumentError("horizon too large (" + std::to_string(max_bucket) +
                                " buckets); increase the bucket width");
        }
        NodeId a = std::min(r.u, r.v);
        NodeId b = std::max(r.u, r.v);
        out.triples.push_back(TemporalEdge{a, b, static_cast<Timestamp>(bucket)});
    }
    out.horizon = static_cast<Timestamp>(max_bucket);

    // Collapse duplicate (u,v,bucket) triples: all snapshots are simple.
    std::sort(out.triples.begin(), out.triples.end(),
              [](const TemporalEdge& x, const TemporalEdge& y) {
                  return std::tie(x.u, x.v, x.t) < std::tie(y.u, y.v, y.t);
              });
    auto last = std::unique(out.triples.begin(), out.triples.end());
    out.stats.duplicates_dropped =
        static_cast<std::uint64_t>(std::distance(last, out.triples.end()));
    out.triples.erase(last, out.triples.end());
    out.stats.edges_kept = out.triples.size();

    return out;
}

TemporalGraph build_graph(ParsedEdges parsed) {
    if (parsed.triples.empty()) throw FormatError("no edges");

    TemporalGraph g;
    g.n = static_cast<NodeId>(parsed.labels.size());
    g.horizon = parsed.horizon;
    g.m = static_cast<std::int64_t>(parsed.triples.size());
    g.labels = std::move(parsed.labels);
    g.label_ids = std::move(parsed.label_ids);

    g.adj.resize(static_cast<std::size_t>(g.n));
    std::vector<std::int32_t> degree(static_cast<std::size_t>(g.n), 0);
    for (const TemporalEdge& e : parsed.triples) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }
    for (NodeId u = 0; u < g.n; ++u) {
        g.adj[static_cast<std::size_t>(u)].reserve(
            static_cast<std::size_t>(degree[static_cast<std::size_t>(u)]));
    }
    for (const TemporalEdge& e : parsed.triples) {
        g.adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.t);
        g.adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.t);
    }
    for (auto& list : g.adj) {
        std::sort(list.begin(), list.end());
    }
    return g;
}

TemporalGraph load_graph(const std::string& path, const BucketSpec& buckets) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open input file '" + path + "'");
    return build_graph(parse_edge_list(in, buckets));
}

NodeId TemporalGraph::id_of(const std::string& label) const {
    auto it = label_ids.find(label);
    if (it == label_ids.end()) throw ArgumentError("unknown node label '" + label + "'");
    return it->second;
}

std::size_t TemporalGraph::memory_footprint_bytes() const {
    std::size_t bytes = sizeof(TemporalGraph);
    bytes += adj.capacity() * sizeof(adj[0]);
    for (const auto& list : adj) {
        bytes += list.capacity() * sizeof(list[0]);
    }
    bytes += labels.capacity() * sizeof(labels[0]);
    for (const auto& label : labels) {
        if (label.size() > sizeof(std::string)) bytes += label.capacity();
    }
    // unordered_map: bucket array plus one heap node per entry.
    bytes += label_ids.bucket_count() * sizeof(void*);
    bytes += label_ids.size() * (sizeof(std::pair<std::string, NodeId>) + 2 * sizeof(void*));
    return bytes;
}

std::int64_t DetemporalGraph::edge_count() const {
    std::int64_t pairs = 0;
    for (const auto& list : adj) pairs += static_cast<std::int64_t>(list.size());
    return pairs / 2;
}

std::int32_t DetemporalGraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj) best = std::max(best, list.size());
    return static_cast<std::int32_t>(best);
}

DegreeSequence degree_sequence(const TemporalGraph& g, NodeId u, const NodeMask& subset) {
    if (u < 0 || u >= g.n || !subset[static_cast<std::size_t>(u)]) {
        throw ArgumentError("node is not a member of the restriction set");
    }
    DegreeSequence ds;
    ds.owner = u;
    ds.values.assign(static_cast<std::size_t>(g.horizon), 0);
    for (const auto& [v, t] : g.adj[static_cast<std::size_t>(u)]) {
        // (v, t) pairs are unique, so each in-subset pair is one distinct
        // neighbor at snapshot t.
        if (subset[static_cast<std::size_t>(v)]) {
            ++ds.values[static_cast<std::size_t>(t) - 1];
        }
    }
    for (NodeId v = 0; v < g.n; ++v) {
        if (subset[static_cast<std::size_t>(v)]) ds.restriction.push_back(v);
    }
    return ds;
}

DetemporalGraph detemporal(const TemporalGraph& g) {
    DetemporalGraph d;
    d.n = g.n;
    d.adj.resize(static_cast<std::size_t>(g.n));
    for (NodeId u = 0; u < g.n; ++u) {
        auto& out = d.adj[static_cast<std::size_t>(u)];
        NodeId last = -1;
        for (const auto& [v, t] : g.adj[static_cast<std::size_t>(u)]) {
            if (v != last) {
                out.push_back(v);
                last = v;
            }
        }
    }
    return d;
}

void write_edge_list(const TemporalGraph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.n; ++u) {
        for (const auto& [v, t] : g.adj[static_cast<std::size_t>(u)]) {
            if (u < v) {
                out << g.labels[static_cast<std::size_t>(u)] << ' '
                    << g.labels[static_cast<std::size_t>(v)] << ' ' << t << '\n';
            }
        }
    }
}

NodeMask mask_of(const NodeSet& nodes, NodeId n) {
    NodeMask mask(static_cast<std::size_t>(n), 0);
    for (NodeId u : nodes) mask[static_cast<std::size_t>(u)] = 1;
    return mask;
}

NodeSet all_nodes(NodeId n) {
    NodeSet nodes(static_cast<std::size_t>(n));
    std::iota(nodes.begin(), nodes.end(), 0);
    return nodes;
}

}  // namespace burstcore
