#include "burstcore/segment_density.hpp"

#include <algorithm>

namespace burstcore {

namespace {

void check_window_length(std::int32_t l, Timestamp horizon) {
    if (l < 2) throw ArgumentError("window length bound must be at least 2");
    if (l > horizon) throw ArgumentError("window longer than horizon");
}

// Scans the admissible starts for truncation time j (window lengths in
// [l, 2l]) and returns the densest window, preferring the smallest start.
MtsEntry restricted_entry(const std::vector<std::int64_t>& csc, Timestamp j, std::int32_t l) {
    Timestamp a_lo = std::max<Timestamp>(0, j - 2 * l);
    Timestamp a_hi = j - l;
    MtsEntry entry;
    bool first = true;
    for (Timestamp a = a_lo; a <= a_hi; ++a) {
        Density d(csc[static_cast<std::size_t>(j)] - csc[static_cast<std::size_t>(a)], j - a);
        if (first || d > entry.best) {
            entry.best = d;
            entry.t_s = a + 1;
            first = false;
        }
    }
    return entry;
}

// Refreshes cache.best from the cells, preferring the smallest (t_s, t_e).
void refresh_best(MtsCache& cache) {
    bool first = true;
    for (Timestamp j = cache.l; j <= cache.horizon; ++j) {
        const MtsEntry& entry = cache.at(j);
        if (first || entry.best > cache.best ||
            (entry.best == cache.best &&
             std::pair(entry.t_s, j) < std::pair(cache.best_ts, cache.best_te))) {
            cache.best = entry.best;
            cache.best_ts = entry.t_s;
            cache.best_te = j;
            first = false;
        }
    }
}

}  // namespace

CumCurve cum_curve(const DegreeSequence& ds) {
    CumCurve curve;
    curve.csc.resize(ds.values.size() + 1);
    curve.csc[0] = 0;
    for (std::size_t i = 0; i < ds.values.size(); ++i) {
        curve.csc[i + 1] = curve.csc[i] + ds.values[i];
    }
    return curve;
}

BruteResult brute_force_msd(const DegreeSequence& ds, std::int32_t l) {
    check_window_length(l, ds.horizon());
    CumCurve curve = cum_curve(ds);
    const Timestamp horizon = ds.horizon();

    BruteResult result;
    bool first = true;
    for (Timestamp ts = 1; ts + l - 1 <= horizon; ++ts) {
        for (Timestamp te = ts + l - 1; te <= horizon; ++te) {
            Density d = curve.slope(ts - 1, te);
            // Strict improvement keeps the smallest ts, then the smallest te.
            if (first || d > result.value) {
                result.value = d;
                result.t_s = ts;
                result.t_e = te;
                first = false;
            }
        }
    }
    return result;
}

MsdResult compute_msd(const DegreeSequence& ds, std::int32_t l, const HullObserver& observe) {
    check_window_length(l, ds.horizon());
    const Timestamp horizon = ds.horizon();

    MsdResult result;
    result.curve = cum_curve(ds);
    const CumCurve& curve = result.curve;

    // Tangent sweep over the lower convex hull of the curve's start points.
    // At truncation time j the candidate starts are 0..j-l; the hull keeps the
    // lower-convex subset of them, and the head chases the tangent from j.
    HullWindow hull;
    hull.ch.reserve(static_cast<std::size_t>(horizon));

    Density best{0, 1};
    Timestamp best_ts = 0, best_te = 0;
    bool first = true;

    for (Timestamp j = l; j <= horizon; ++j) {
        // Admit start point j-l, popping tail points that stop being convex.
        const Timestamp incoming = j - l;
        while (hull.i_e > hull.i_s &&
               curve.slope(hull.ch[static_cast<std::size_t>(hull.i_e)], incoming) <=
                   curve.slope(hull.ch[static_cast<std::size_t>(hull.i_e - 1)],
                               hull.ch[static_cast<std::size_t>(hull.i_e)])) {
            --hull.i_e;
            hull.ch.pop_back();
        }
        hull.ch.push_back(incoming);
        ++hull.i_e;

        // Advance the head while the chord to j is still climbing the hull.
        while (hull.i_s < hull.i_e &&
               curve.slope(hull.ch[static_cast<std::size_t>(hull.i_s)], j) >=
                   curve.slope(hull.ch[static_cast<std::size_t>(hull.i_s)],
                               hull.ch[static_cast<std::size_t>(hull.i_s + 1)])) {
            ++hull.i_s;
        }

        const Timestamp start = hull.ch[static_cast<std::size_t>(hull.i_s)];
        Density mts_j = curve.slope(start, j);
        if (first || mts_j > best) {
            best = mts_j;
            best_ts = start + 1;
            best_te = j;
            first = false;
        }

        if (observe) observe(j, hull, curve);
    }

    result.value = best;
    result.t_s = best_ts;
    result.t_e = best_te;

    // Fill the per-truncation-time cells with the length-restricted maxima.
    // These, not the sweep's unrestricted values, are what survives
    // decrement updates exactly; their maximum is the same MSD.
    MtsCache& cache = result.cache;
    cache.l = l;
    cache.horizon = horizon;
    cache.mts.resize(static_cast<std::size_t>(horizon - l + 1));
    for (Timestamp j = l; j <= horizon; ++j) {
        cache.mts[static_cast<std::size_t>(j - l)] = restricted_entry(curve.csc, j, l);
    }
    refresh_best(cache);

    return result;
}

Density update_msd(const DegreeSequence& ds, MtsCache& cache, Timestamp t, std::int32_t l) {
    const Timestamp horizon = ds.horizon();
    if (cache.horizon != horizon ||
        cache.mts.size() != static_cast<std::size_t>(horizon - cache.l + 1)) {
        throw InternalError("cache/sequence length mismatch");
    }
    if (l != cache.l) throw InternalError("cache was built for a different window bound");
    if (t < 1 || t > horizon) throw ArgumentError("decrement timestamp out of range");

    // Local cumulative curve over the neighbourhood of t; cells outside the
    // affected truncation range only use windows whose endpoints both avoid
    // t, so their stored densities are still exact.
    const Timestamp lo = std::max<Timestamp>(0, t - 2 * l);
    const Timestamp hi = std::min<Timestamp>(t + 2 * l, horizon);
    std::vector<std::int64_t> csc(static_cast<std::size_t>(hi) + 1, 0);
    for (Timestamp i = lo + 1; i <= hi; ++i) {
        csc[static_cast<std::size_t>(i)] =
            csc[static_cast<std::size_t>(i - 1)] + ds.at(i);
    }

    const Timestamp j_lo = std::max<Timestamp>(l, t);
    for (Timestamp j = j_lo; j <= hi; ++j) {
        cache.mts[static_cast<std::size_t>(j - l)] = restricted_entry(csc, j, l);
    }
    refresh_best(cache);
    return cache.best;
}

}  // namespace burstcore
