#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "burstcore/density.hpp"
#include "burstcore/temporal_graph.hpp"

namespace burstcore {

// Cumulative sum curve of a degree sequence: csc[0] = 0 and
// csc[t] - csc[t-1] = DS[t], so csc is non-decreasing and the average degree
// of the window [a+1, b] equals the chord slope (csc[b]-csc[a])/(b-a).
struct CumCurve {
    std::vector<std::int64_t> csc;  // length horizon + 1

    Timestamp horizon() const { return static_cast<Timestamp>(csc.size()) - 1; }
    // Chord slope between curve indices a < b == density of timestamps [a+1, b].
    Density slope(Timestamp a, Timestamp b) const {
        return Density(csc[static_cast<std::size_t>(b)] - csc[static_cast<std::size_t>(a)], b - a);
    }
};

CumCurve cum_curve(const DegreeSequence& ds);

// Lower-convex-hull index window over the cumulative curve: the candidate
// start points ch[i_s..i_e] kept by the tangent sweep. Indices are strictly
// increasing and consecutive chord slopes strictly increase.
struct HullWindow {
    std::vector<Timestamp> ch;
    std::int32_t i_s = 0;  // head cursor (oldest usable start)
    std::int32_t i_e = -1; // tail cursor (newest start); empty when i_e < i_s

    bool empty() const { return i_e < i_s; }
};

// Best window ending at a fixed truncation time, with window start points
// restricted to lengths in [l, 2l]. The restriction is what keeps the cells
// exactly maintainable under single-timestamp decrements: a window whose
// endpoints both avoid the decremented cell keeps its density bit for bit.
struct MtsEntry {
    Density best{0, 1};
    Timestamp t_s = 0;  // start timestamp of the best window ([t_s, j])
};

// Per-node incremental state for maximum segment density: one MtsEntry per
// truncation time j in [l, horizon], plus the running global best and its
// witnessing window. The global best equals the true MSD because restricting
// window lengths to [l, 2l] never loses the maximum (any longer window splits
// into two halves of length ≥ l, one at least as dense).
struct MtsCache {
    std::int32_t l = 0;
    Timestamp horizon = 0;
    std::vector<MtsEntry> mts;  // mts[j - l] is the cell for truncation time j

    Density best{0, 1};
    Timestamp best_ts = 0;
    Timestamp best_te = 0;

    const MtsEntry& at(Timestamp j) const { return mts[static_cast<std::size_t>(j - l)]; }
};

struct MsdResult {
    Density value{0, 1};
    Timestamp t_s = 0;
    Timestamp t_e = 0;
    MtsCache cache;
    CumCurve curve;
};

struct BruteResult {
    Density value{0, 1};
    Timestamp t_s = 0;
    Timestamp t_e = 0;
};

// Reference scan over all windows of length ≥ l (prefix-summed, O(|T|²)).
// Ties break towards the smallest t_s, then the smallest t_e. Throws
// ArgumentError("window longer than horizon") when l > horizon and
// ArgumentError when l < 2.
BruteResult brute_force_msd(const DegreeSequence& ds, std::int32_t l);

// Called after each truncation-time iteration of compute_msd so tests can
// check the hull invariants without re-deriving the sweep.
using HullObserver = std::function<void(Timestamp j, const HullWindow&, const CumCurve&)>;

// Maximum l-segment density via the convex-hull tangent sweep, O(|T|) for the
// value, plus an O(|T|·l) fill of the restricted per-truncation-time cells.
// Hull maintenance: before appending start point j-l, pop the tail while
// slope(ch[i_e], j-l) ≤ slope(ch[i_e-1], ch[i_e]); then advance the head
// while slope(ch[i_s], j) ≥ slope(ch[i_s], ch[i_s+1]). Value-equal to
// brute_force_msd on every input; errors as brute_force_msd.
MsdResult compute_msd(const DegreeSequence& ds, std::int32_t l,
                      const HullObserver& observe = {});

// Incremental maintenance after ds.at(t) was decremented by exactly one (the
// sequence passed in is the already-decremented one; the cache is still the
// pre-decrement state). Rebuilds a local cumulative curve over
// [max(0, t-2l), min(t+2l, horizon)], recomputes the cells for the affected
// truncation times j ∈ [max(l, t), min(t+2l, horizon)] — every other cell's
// candidate windows miss the decremented snapshot entirely — and refreshes
// the global best. Returns the new maximum; value-equal to compute_msd run
// from scratch on the decremented sequence. Throws InternalError on a
// cache/sequence length mismatch.
Density update_msd(const DegreeSequence& ds, MtsCache& cache, Timestamp t, std::int32_t l);

}  // namespace burstcore
