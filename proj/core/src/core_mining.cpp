#include "burstcore/core_mining.hpp"

#include <algorithm>
#include <numeric>

#include "peel_util.hpp"

namespace burstcore {

namespace {

void check_mdc_args(std::int32_t l, const Density& delta) {
    if (l < 2) throw ArgumentError("window length bound must be at least 2");
    if (delta.sum <= 0 || delta.len <= 0) throw ArgumentError("delta must be positive");
}

// Witness windows are recomputed once against the final community, so the
// reported windows describe the output graph rather than whatever peeling
// state first certified the node.
void attach_witnesses(const TemporalGraph& g, std::int32_t l, MdcResult& result) {
    if (result.nodes.empty()) return;
    NodeMask mask = mask_of(result.nodes, g.n);
    DegreeSequence ds;
    ds.values.resize(static_cast<std::size_t>(g.horizon));
    result.witnesses.reserve(result.nodes.size());
    for (NodeId u : result.nodes) {
        detail::fill_ds_values(g, u, mask, ds.values);
        ds.owner = u;
        BruteResult best = brute_force_msd(ds, l);
        result.witnesses.push_back(Witness{u, best.t_s, best.t_e, best.value});
    }
}

// One peeling pass shared by mdc_baseline and mdc. Both recompute a touched
// survivor's degree sequence from the graph on every touch; they only differ
// in how the maximum segment density is evaluated (full window scan vs the
// convex-hull sweep) and in whether the initial pass is parallel.
template <typename MsdFn>
MdcResult peel_recompute(const TemporalGraph& g, std::int32_t l, Density delta, int threads,
                         MsdFn&& msd_of) {
    MdcResult result;
    result.l = l;
    result.delta = delta;
    if (l > g.horizon) return result;  // no admissible window: nobody is dense

    DetemporalGraph det = detemporal(g);
    NodeSet candidates = k_core(det, delta);
    if (candidates.empty()) return result;

    PeelState st;
    st.surviving = mask_of(candidates, g.n);
    st.deleted.assign(static_cast<std::size_t>(g.n), 0);
    st.enqueued.assign(static_cast<std::size_t>(g.n), 0);
    st.deg = detail::induced_degrees(det, st.surviving);

    // Initial densities only read the immutable graph; fan out, then seed the
    // queue in ascending NodeId order so the FIFO contents are deterministic.
    std::vector<Density> msd(static_cast<std::size_t>(g.n), Density{0, 1});
    detail::parallel_over(candidates, threads, [&](NodeId u) {
        msd[static_cast<std::size_t>(u)] = msd_of(u, st.surviving);
    });
    auto enqueue = [&st](NodeId u) {
        st.enqueued[static_cast<std::size_t>(u)] = 1;
        st.queue.push(u);
    };
    for (NodeId u : candidates) {
        if (msd[static_cast<std::size_t>(u)] < delta) enqueue(u);
    }

    while (!st.queue.empty()) {
        NodeId v = st.queue.front();
        st.queue.pop();
        st.surviving[static_cast<std::size_t>(v)] = 0;
        st.deleted[static_cast<std::size_t>(v)] = 1;

        for (NodeId w : det.adj[static_cast<std::size_t>(v)]) {
            if (!st.surviving[static_cast<std::size_t>(w)]) continue;
            --st.deg[static_cast<std::size_t>(w)];
            if (st.enqueued[static_cast<std::size_t>(w)]) continue;
            if (delta.degree_below(st.deg[static_cast<std::size_t>(w)]) ||
                msd_of(w, st.surviving) < delta) {
                enqueue(w);
            }
        }
    }

    result.nodes = detail::collect_alive(st.surviving);
    attach_witnesses(g, l, result);
    return result;
}

}  // namespace

NodeSet k_core(const DetemporalGraph& g, Density k) {
    if (k.sum <= 0 || k.len <= 0) throw ArgumentError("core threshold must be positive");

    std::vector<char> alive(static_cast<std::size_t>(g.n), 1);
    std::vector<std::int32_t> deg(static_cast<std::size_t>(g.n), 0);
    std::vector<char> enqueued(static_cast<std::size_t>(g.n), 0);
    std::vector<NodeId> queue;
    for (NodeId u = 0; u < g.n; ++u) {
        deg[static_cast<std::size_t>(u)] =
            static_cast<std::int32_t>(g.adj[static_cast<std::size_t>(u)].size());
        if (k.degree_below(deg[static_cast<std::size_t>(u)])) {
            queue.push_back(u);
            enqueued[static_cast<std::size_t>(u)] = 1;
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId v = queue[head];
        alive[static_cast<std::size_t>(v)] = 0;
        for (NodeId w : g.adj[static_cast<std::size_t>(v)]) {
            if (!alive[static_cast<std::size_t>(w)] || enqueued[static_cast<std::size_t>(w)]) {
                continue;
            }
            if (k.degree_below(--deg[static_cast<std::size_t>(w)])) {
                queue.push_back(w);
                enqueued[static_cast<std::size_t>(w)] = 1;
            }
        }
    }
    return detail::collect_alive(alive);
}

MdcResult mdc_baseline(const TemporalGraph& g, std::int32_t l, Density delta) {
    check_mdc_args(l, delta);
    DegreeSequence scratch;
    return peel_recompute(g, l, delta, /*threads=*/1,
                          [&](NodeId u, const std::vector<char>& alive) {
                              detail::fill_ds_values(g, u, alive, scratch.values);
                              return brute_force_msd(scratch, l).value;
                          });
}

MdcResult mdc(const TemporalGraph& g, std::int32_t l, Density delta, int threads) {
    check_mdc_args(l, delta);
    return peel_recompute(g, l, delta, threads,
                          [&](NodeId u, const std::vector<char>& alive) {
                              DegreeSequence scratch;  // per-call: runs on worker threads
                              detail::fill_ds_values(g, u, alive, scratch.values);
                              return compute_msd(scratch, l).value;
                          });
}

MdcResult mdc_plus(const TemporalGraph& g, std::int32_t l, Density delta, PeelStats* stats) {
    check_mdc_args(l, delta);

    MdcResult result;
    result.l = l;
    result.delta = delta;
    PeelStats local;

    if (l > g.horizon) {
        if (stats) *stats = local;
        return result;
    }

    DetemporalGraph det = detemporal(g);
    NodeSet candidates = k_core(det, delta);
    if (candidates.empty()) {
        if (stats) *stats = local;
        return result;
    }

    PeelState st;
    st.surviving = mask_of(candidates, g.n);
    st.deleted.assign(static_cast<std::size_t>(g.n), 0);
    st.enqueued.assign(static_cast<std::size_t>(g.n), 0);
    st.deg = detail::induced_degrees(det, st.surviving);
    st.caches.assign(static_cast<std::size_t>(g.n), std::nullopt);

    std::int64_t live_caches = 0;
    auto ensure_cache = [&](NodeId u) -> NodeCache& {
        auto& slot = st.caches[static_cast<std::size_t>(u)];
        if (!slot) {
            NodeCache cache;
            detail::fill_ds_values(g, u, st.surviving, cache.ds.values);
            cache.ds.owner = u;
            MsdResult from_scratch = compute_msd(cache.ds, l);
            cache.mts = std::move(from_scratch.cache);
            cache.msd = cache.mts.best;
            slot.emplace(std::move(cache));
            ++local.caches_built;
            ++local.msd_recomputes;
            ++live_caches;
            local.peak_live_caches = std::max(local.peak_live_caches, live_caches);
        }
        return *slot;
    };
    auto enqueue = [&st](NodeId u) {
        st.enqueued[static_cast<std::size_t>(u)] = 1;
        st.queue.push(u);
    };

    // Drains the deletion queue: every temporal edge leaving a deleted node
    // decrements the surviving endpoint's degree sequence, and cached
    // endpoints get their density refreshed incrementally.
    auto drain = [&] {
        while (!st.queue.empty()) {
            NodeId v = st.queue.front();
            st.queue.pop();
            st.surviving[static_cast<std::size_t>(v)] = 0;
            st.deleted[static_cast<std::size_t>(v)] = 1;
            ++local.nodes_deleted;
            if (st.caches[static_cast<std::size_t>(v)]) {
                st.caches[static_cast<std::size_t>(v)].reset();
                ++local.caches_freed;
                --live_caches;
            }

            const auto& edges = g.adj[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < edges.size();) {
                const NodeId w = edges[i].first;
                std::size_t end = i;
                while (end < edges.size() && edges[end].first == w) ++end;
                if (!st.surviving[static_cast<std::size_t>(w)]) {
                    i = end;
                    continue;
                }
                --st.deg[static_cast<std::size_t>(w)];
                auto& slot = st.caches[static_cast<std::size_t>(w)];
                if (slot) {
                    for (std::size_t k = i; k < end; ++k) {
                        const Timestamp t = edges[k].second;
                        --slot->ds.values[static_cast<std::size_t>(t) - 1];
                        slot->msd = update_msd(slot->ds, slot->mts, t, l);
                        ++local.update_calls;
                    }
                }
                if (!st.enqueued[static_cast<std::size_t>(w)] &&
                    (delta.degree_below(st.deg[static_cast<std::size_t>(w)]) ||
                     (slot && slot->msd < delta))) {
                    enqueue(w);
                }
                i = end;
            }
        }
    };

    // Seed in increasing initial-degree order (ties by NodeId) so cheap
    // cascades run before expensive caches get built.
    NodeSet order = candidates;
    {
        const std::vector<std::int32_t>& deg0 = st.deg;
        std::sort(order.begin(), order.end(), [&deg0](NodeId a, NodeId b) {
            return std::pair(deg0[static_cast<std::size_t>(a)], a) <
                   std::pair(deg0[static_cast<std::size_t>(b)], b);
        });
    }

    for (NodeId u : order) {
        if (!st.surviving[static_cast<std::size_t>(u)] ||
            st.enqueued[static_cast<std::size_t>(u)]) {
            continue;
        }
        if (delta.degree_below(st.deg[static_cast<std::size_t>(u)]) ||
            ensure_cache(u).msd < delta) {
            enqueue(u);
            drain();
        }
    }

    result.nodes = detail::collect_alive(st.surviving);

    for (NodeId u = 0; u < g.n; ++u) {
        if (st.deleted[static_cast<std::size_t>(u)] && st.caches[static_cast<std::size_t>(u)]) {
            ++local.deleted_with_cache_at_end;
        }
    }
    if (stats) *stats = local;

    attach_witnesses(g, l, result);
    return result;
}

}  // namespace burstcore
