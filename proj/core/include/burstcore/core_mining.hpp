#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "burstcore/density.hpp"
#include "burstcore/segment_density.hpp"
#include "burstcore/temporal_graph.hpp"

namespace burstcore {

// One node's lazily-built density state inside a peel run.
struct NodeCache {
    DegreeSequence ds;  // against the current survivor set (restriction left
                        // empty here; the engine tracks survivors globally)
    MtsCache mts;
    Density msd{0, 1};
};

// Peeling workspace shared by the mining algorithms: current de-temporal
// degrees, the FIFO deletion queue with its enqueued flags (a node enters the
// queue at most once), the deleted set, the survivor set, and the per-node
// caches. Caches exist only for surviving nodes whose MSD has been demanded
// and are freed the moment their owner is deleted.
struct PeelState {
    std::vector<std::int32_t> deg;
    std::queue<NodeId> queue;
    std::vector<char> enqueued;
    std::vector<char> deleted;
    std::vector<char> surviving;
    std::vector<std::optional<NodeCache>> caches;
};

// Bookkeeping counters reported by mdc_plus so callers (and tests) can see
// cache behaviour without poking at internals.
struct PeelStats {
    std::int64_t caches_built = 0;
    std::int64_t caches_freed = 0;
    std::int64_t peak_live_caches = 0;
    std::int64_t update_calls = 0;      // incremental cache refreshes
    std::int64_t msd_recomputes = 0;    // from-scratch MSD evaluations
    std::int64_t nodes_deleted = 0;
    // Deleted nodes still holding a cache when the run returned; must be 0.
    std::int64_t deleted_with_cache_at_end = 0;
};

// A node's witnessing window inside the final community: the canonical
// (smallest t_s, then t_e) window of length ≥ l achieving its MSD there.
struct Witness {
    NodeId node = 0;
    Timestamp t_s = 0;
    Timestamp t_e = 0;
    Density density{0, 1};
};

// The (l,δ)-maximal dense core: the unique maximal node set in which every
// member's maximum l-segment density within the induced temporal subgraph is
// at least δ. Empty nodes/witnesses mean "no such community" — not an error.
struct MdcResult {
    std::int32_t l = 0;
    Density delta{0, 1};
    NodeSet nodes;                 // ascending NodeId
    std::vector<Witness> witnesses;  // aligned with nodes
};

// Maximal node set whose induced simple subgraph keeps every degree ≥ k,
// integer degrees compared to the rational threshold exactly. Throws
// ArgumentError when k ≤ 0.
NodeSet k_core(const DetemporalGraph& g, Density k);

// Baseline peeling (MDC-B): seeds from k_core(detemporal, δ) and repeatedly
// deletes nodes with deg < δ or brute-force MSD < δ, recomputing the full
// O(|T|²) window scan against the survivors on every touch.
MdcResult mdc_baseline(const TemporalGraph& g, std::int32_t l, Density delta);

// Peeling with the convex-hull MSD (MDC): identical fixpoint, recomputing
// each touched survivor's degree sequence and running the O(|T|) sweep from
// scratch. The initial per-node MSD pass only reads the immutable graph, so
// it fans out across `threads` workers before the queue drains sequentially.
MdcResult mdc(const TemporalGraph& g, std::int32_t l, Density delta, int threads = 1);

// Lazy incremental peeling (MDC+): visits candidates in increasing
// initial-degree order (ties by NodeId), builds a node's cache only when its
// MSD is first demanded, and on every deleted temporal edge (v,w,t)
// decrements DS[w][t] and refreshes w's cache incrementally — only when that
// cache exists. Caches are freed on deletion. Node set identical to mdc and
// mdc_baseline on every input.
MdcResult mdc_plus(const TemporalGraph& g, std::int32_t l, Density delta,
                   PeelStats* stats = nullptr);

}  // namespace burstcore
