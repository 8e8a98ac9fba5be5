#pragma once

#include <cstdint>
#include <vector>

#include "burstcore/core_mining.hpp"
#include "burstcore/density.hpp"
#include "burstcore/temporal_graph.hpp"

namespace burstcore {

// One entry of the Pareto frontier: the (l, delta)-maximal dense core that no
// other parameter pair dominates. Within a frontier, l strictly increases and
// delta strictly decreases. delta is stored in lowest terms.
struct ParetoPoint {
    std::int32_t l = 0;
    Density delta{0, 1};
    NodeSet nodes;

    friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

struct MaxDeltaResult {
    Density delta{0, 1};
    NodeSet nodes;
};

struct MaxLResult {
    std::int32_t l = 0;
    NodeSet nodes;
};

// Largest threshold δ̄ whose (l, δ̄)-core within the candidate set is
// nonempty, together with that node set. Each round takes δ̄ = the minimum
// surviving MSD, then peels everything that cannot clear a strictly higher
// threshold (MSD ≤ δ̄ or degree ≤ δ̄, cascading with incremental updates);
// when a peel would empty the set, the pre-peel survivors are the answer.
// Stepping only past the current minimum — rather than jumping to the second
// distinct starting value — matters: a node's MSD can land strictly between
// the two once its neighbours start disappearing, and a coarser jump would
// skip that attainable threshold. Throws ArgumentError("empty candidate set").
MaxDeltaResult max_delta(const TemporalGraph& g, std::int32_t l,
                         const NodeSet& candidates, int threads = 1);

// Grows l from l_start while the (l, delta)-core within the candidates stays
// nonempty (l capped at the horizon); returns the last successful l with its
// node set. If even l_start fails, returns (l_start - 1, candidates)
// unchanged — the caller's previous community.
MaxLResult max_l(const TemporalGraph& g, std::int32_t l_start, Density delta,
                 const NodeSet& candidates);

// Full Pareto frontier: starting at l = 2 over all nodes, alternates
// max_delta and max_l, records the point, restricts the candidates to the
// de-temporal k-core with k = δ·l/(l+1) (every community at a larger l keeps
// a degree of at least that), and continues at l+1 until the horizon is
// passed or the candidates die out. Empty graph or horizon < 2 → empty list.
std::vector<ParetoPoint> pomdc(const TemporalGraph& g, int threads = 1);

// Same enumeration without the k-core restriction: candidates reset to all
// nodes every iteration. Output is list-equal to pomdc on every input.
std::vector<ParetoPoint> pomdc_baseline(const TemporalGraph& g, int threads = 1);

}  // namespace burstcore
