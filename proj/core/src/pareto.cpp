#include "burstcore/pareto.hpp"

#include <algorithm>
#include <utility>

#include "peel_util.hpp"

namespace burstcore {

namespace {

// Candidate set with fully primed incremental caches: every alive node
// carries its degree, degree sequence, and segment-density cells for the
// subgraph induced by the alive set at the engine's window bound.
struct PrimedSet {
    const TemporalGraph& g;
    const DetemporalGraph& det;
    std::int32_t l;

    std::vector<char> alive;
    std::vector<std::int32_t> deg;
    std::vector<NodeCache> caches;  // dense; only meaningful for alive nodes

    PrimedSet(const TemporalGraph& graph, const DetemporalGraph& d, std::int32_t window_bound,
              const NodeSet& candidates, int threads)
        : g(graph), det(d), l(window_bound) {
        alive = mask_of(candidates, g.n);
        deg = detail::induced_degrees(det, alive);
        caches.resize(static_cast<std::size_t>(g.n));
        detail::parallel_over(candidates, threads, [this](NodeId u) {
            NodeCache& cache = caches[static_cast<std::size_t>(u)];
            detail::fill_ds_values(g, u, alive, cache.ds.values);
            cache.ds.owner = u;
            MsdResult from_scratch = compute_msd(cache.ds, l);
            cache.mts = std::move(from_scratch.cache);
            cache.msd = cache.mts.best;
        });
    }

    // Deletes every alive node failing `doomed`, cascading with incremental
    // density updates. Returns the number of deletions.
    template <typename Doomed>
    std::int64_t peel(Doomed&& doomed) {
        std::vector<NodeId> queue;
        std::vector<char> enqueued(static_cast<std::size_t>(g.n), 0);
        for (NodeId u = 0; u < g.n; ++u) {
            if (alive[static_cast<std::size_t>(u)] && doomed(u)) {
                queue.push_back(u);
                enqueued[static_cast<std::size_t>(u)] = 1;
            }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            NodeId v = queue[head];
            alive[static_cast<std::size_t>(v)] = 0;
            const auto& edges = g.adj[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < edges.size();) {
                const NodeId w = edges[i].first;
                std::size_t end = i;
                while (end < edges.size() && edges[end].first == w) ++end;
                if (!alive[static_cast<std::size_t>(w)]) {
                    i = end;
                    continue;
                }
                --deg[static_cast<std::size_t>(w)];
                NodeCache& cache = caches[static_cast<std::size_t>(w)];
                for (std::size_t k = i; k < end; ++k) {
                    const Timestamp t = edges[k].second;
                    --cache.ds.values[static_cast<std::size_t>(t) - 1];
                    cache.msd = update_msd(cache.ds, cache.mts, t, l);
                }
                if (!enqueued[static_cast<std::size_t>(w)] && doomed(w)) {
                    queue.push_back(w);
                    enqueued[static_cast<std::size_t>(w)] = 1;
                }
                i = end;
            }
        }
        return static_cast<std::int64_t>(queue.size());
    }

    NodeSet alive_set() const { return detail::collect_alive(alive); }

    bool any_alive() const {
        return std::any_of(alive.begin(), alive.end(), [](char c) { return c != 0; });
    }
};

MaxDeltaResult max_delta_impl(const TemporalGraph& g, const DetemporalGraph& det, std::int32_t l,
                              const NodeSet& candidates, int threads) {
    if (candidates.empty()) throw ArgumentError("empty candidate set");
    if (l < 2) throw ArgumentError("window length bound must be at least 2");
    if (l > g.horizon) throw ArgumentError("window longer than horizon");

    PrimedSet set(g, det, l, candidates, threads);

    while (true) {
        // The best attainable threshold this round is the weakest member.
        bool first = true;
        Density floor{0, 1};
        for (NodeId u = 0; u < g.n; ++u) {
            if (!set.alive[static_cast<std::size_t>(u)]) continue;
            const Density& msd = set.caches[static_cast<std::size_t>(u)].msd;
            if (first || msd < floor) {
                floor = msd;
                first = false;
            }
        }
        NodeSet snapshot = set.alive_set();

        // Try to clear any strictly higher threshold: everything at or below
        // the floor must go. Deletions can drag other members down to values
        // between the old floor and the next starting value, so the cascade
        // re-tests against the floor itself rather than a pre-computed jump
        // target — those emergent thresholds are still attainable and must
        // not be skipped.
        set.peel([&set, &floor](NodeId u) {
            return set.caches[static_cast<std::size_t>(u)].msd <= floor ||
                   floor.degree_at_most(set.deg[static_cast<std::size_t>(u)]);
        });

        if (!set.any_alive()) {
            return MaxDeltaResult{floor, std::move(snapshot)};
        }
    }
}

// The (l, delta)-core within `candidates`: peel everything below the
// threshold, cascading incrementally.
NodeSet core_within(const TemporalGraph& g, const DetemporalGraph& det, std::int32_t l,
                    Density delta, const NodeSet& candidates, int threads) {
    if (candidates.empty() || l > g.horizon) return {};
    PrimedSet set(g, det, l, candidates, threads);
    set.peel([&set, &delta](NodeId u) {
        return set.caches[static_cast<std::size_t>(u)].msd < delta ||
               delta.degree_below(set.deg[static_cast<std::size_t>(u)]);
    });
    return set.alive_set();
}

MaxLResult max_l_impl(const TemporalGraph& g, const DetemporalGraph& det, std::int32_t l_start,
                      Density delta, const NodeSet& candidates, int threads) {
    MaxLResult result{l_start - 1, candidates};
    for (std::int32_t l = l_start; l <= g.horizon; ++l) {
        // Window bounds only grow, so each round can start from the previous
        // survivors; the caches are window-bound-specific and rebuilt per l.
        NodeSet survivors = core_within(g, det, l, delta, result.nodes, threads);
        if (survivors.empty()) break;
        result.l = l;
        result.nodes = std::move(survivors);
    }
    return result;
}

std::vector<ParetoPoint> enumerate_frontier(const TemporalGraph& g, int threads, bool prune) {
    std::vector<ParetoPoint> frontier;
    if (g.n == 0 || g.horizon < 2) return frontier;

    DetemporalGraph det = detemporal(g);
    NodeSet candidates = all_nodes(g.n);
    std::int32_t l = 2;

    while (l <= g.horizon && !candidates.empty()) {
        MaxDeltaResult best = max_delta_impl(g, det, l, candidates, threads);
        if (best.delta.sum == 0) break;  // nothing dense is attainable at any larger l either

        MaxLResult grown = max_l_impl(g, det, l + 1, best.delta, best.nodes, threads);
        frontier.push_back(ParetoPoint{grown.l, best.delta.reduced(), std::move(grown.nodes)});

        if (prune) {
            // Any community at a larger window bound keeps degree at least
            // δ·l/(l+1), so the search space shrinks to that core.
            Density k{best.delta.sum * grown.l, best.delta.len * (grown.l + 1)};
            candidates = k_core(det, k);
        } else {
            candidates = all_nodes(g.n);
        }
        l = grown.l + 1;
    }
    return frontier;
}

}  // namespace

MaxDeltaResult max_delta(const TemporalGraph& g, std::int32_t l, const NodeSet& candidates,
                         int threads) {
    DetemporalGraph det = detemporal(g);
    return max_delta_impl(g, det, l, candidates, threads);
}

MaxLResult max_l(const TemporalGraph& g, std::int32_t l_start, Density delta,
                 const NodeSet& candidates) {
    DetemporalGraph det = detemporal(g);
    return max_l_impl(g, det, l_start, delta, candidates, /*threads=*/1);
}

std::vector<ParetoPoint> pomdc(const TemporalGraph& g, int threads) {
    return enumerate_frontier(g, threads, /*prune=*/true);
}

std::vector<ParetoPoint> pomdc_baseline(const TemporalGraph& g, int threads) {
    return enumerate_frontier(g, threads, /*prune=*/false);
}

}  // namespace burstcore
