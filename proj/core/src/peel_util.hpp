#pragma once

// Internal helpers shared by the peeling engines (core_mining, pareto).

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "burstcore/temporal_graph.hpp"

namespace burstcore::detail {

// DS(u) against the alive mask, written into `out` (sized horizon). Unlike
// the public degree_sequence this does not materialize the restriction set.
inline void fill_ds_values(const TemporalGraph& g, NodeId u, const std::vector<char>& alive,
                           std::vector<std::int32_t>& out) {
    out.assign(static_cast<std::size_t>(g.horizon), 0);
    for (const auto& [v, t] : g.adj[static_cast<std::size_t>(u)]) {
        if (alive[static_cast<std::size_t>(v)]) {
            ++out[static_cast<std::size_t>(t) - 1];
        }
    }
}

// De-temporal degree of every alive node counting only alive neighbors.
inline std::vector<std::int32_t> induced_degrees(const DetemporalGraph& det,
                                                 const std::vector<char>& alive) {
    std::vector<std::int32_t> deg(static_cast<std::size_t>(det.n), 0);
    for (NodeId u = 0; u < det.n; ++u) {
        if (!alive[static_cast<std::size_t>(u)]) continue;
        std::int32_t d = 0;
        for (NodeId v : det.adj[static_cast<std::size_t>(u)]) {
            if (alive[static_cast<std::size_t>(v)]) ++d;
        }
        deg[static_cast<std::size_t>(u)] = d;
    }
    return deg;
}

inline NodeSet collect_alive(const std::vector<char>& alive) {
    NodeSet nodes;
    for (std::size_t u = 0; u < alive.size(); ++u) {
        if (alive[u]) nodes.push_back(static_cast<NodeId>(u));
    }
    return nodes;
}

// Runs fn(u) for every node in `nodes`, fanned out over `threads` workers.
// fn must only write to per-node slots; the strided split keeps the work
// deterministic regardless of the thread count.
template <typename Fn>
void parallel_over(const NodeSet& nodes, int threads, Fn&& fn) {
    const int usable = std::max(1, threads);
    if (usable == 1 || nodes.size() < 2) {
        for (NodeId u : nodes) fn(u);
        return;
    }
    const int workers =
        static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(usable), nodes.size()));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&nodes, &fn, w, workers] {
            for (std::size_t i = static_cast<std::size_t>(w); i < nodes.size();
                 i += static_cast<std::size_t>(workers)) {
                fn(nodes[i]);
            }
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace burstcore::detail
