// Benchmarks for the miners: the three MDC engines on one noisy planted
// instance, and frontier enumeration with and without candidate pruning.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "burstcore/core_mining.hpp"
#include "burstcore/density.hpp"
#include "burstcore/generator.hpp"
#include "burstcore/pareto.hpp"
#include "burstcore/temporal_graph.hpp"

namespace {

using burstcore::Density;
using burstcore::NodeId;
using burstcore::TemporalEdge;
using burstcore::TemporalGraph;
using burstcore::Timestamp;

TemporalGraph from_triples(NodeId n, Timestamp horizon,
                           std::vector<TemporalEdge> triples) {
    burstcore::ParsedEdges parsed;
    parsed.horizon = horizon;
    for (NodeId u = 0; u < n; ++u) {
        parsed.labels.push_back(std::to_string(u));
        parsed.label_ids[parsed.labels.back()] = u;
    }
    parsed.triples = std::move(triples);
    return burstcore::build_graph(std::move(parsed));
}

// Background noise plus one persistent planted clique.
const TemporalGraph& mdc_instance() {
    static const TemporalGraph g = [] {
        burstcore::GenConfig config;
        config.n = 3000;
        config.horizon = 60;
        config.background_prob = 1e-4;
        config.seed = 99;
        burstcore::PlantedClique clique;
        clique.size = 20;
        clique.t_begin = 1;
        clique.t_end = 60;
        clique.presence_prob = 1.0;
        config.clique = clique;
        auto result = burstcore::generate(config);
        return from_triples(config.n, config.horizon, std::move(result.edges));
    }();
    return g;
}

// Disjoint cliques trading size against lifetime: a multi-point frontier.
const TemporalGraph& frontier_instance() {
    static const TemporalGraph g = [] {
        std::mt19937_64 rng(7);
        const NodeId n = 1500;
        const Timestamp horizon = 24;
        std::vector<TemporalEdge> triples;
        const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
        std::binomial_distribution<std::int64_t> count_dist(pairs, 1e-4);
        std::uniform_int_distribution<NodeId> node_dist(0, n - 1);
        for (Timestamp t = 1; t <= horizon; ++t) {
            for (std::int64_t k = count_dist(rng); k > 0; --k) {
                const NodeId u = node_dist(rng);
                const NodeId v = node_dist(rng);
                if (u != v) triples.push_back({u, v, t});
            }
        }
        struct Plant {
            NodeId first;
            NodeId size;
            Timestamp t_end;
        };
        for (const Plant& p :
             {Plant{0, 24, 2}, Plant{24, 16, 8}, Plant{40, 8, 24}}) {
            for (NodeId u = p.first; u < p.first + p.size; ++u) {
                for (NodeId v = u + 1; v < p.first + p.size; ++v) {
                    for (Timestamp t = 1; t <= p.t_end; ++t) {
                        triples.push_back({u, v, t});
                    }
                }
            }
        }
        // build_graph deduplicates nothing: collisions between noise and
        // clique edges are rare and harmless for a throughput benchmark, but
        // normalize (u < v) and drop exact duplicates anyway.
        for (auto& e : triples) {
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(triples.begin(), triples.end(),
                  [](const TemporalEdge& a, const TemporalEdge& b) {
                      return std::tie(a.u, a.v, a.t) < std::tie(b.u, b.v, b.t);
                  });
        triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
        return from_triples(n, horizon, std::move(triples));
    }();
    return g;
}

void BM_MdcBaseline(benchmark::State& state) {
    const auto& g = mdc_instance();
    for (auto _ : state) {
        benchmark::DoNotOptimize(burstcore::mdc_baseline(g, 3, Density(3, 1)));
    }
}
BENCHMARK(BM_MdcBaseline)->Unit(benchmark::kMillisecond);

void BM_MdcHull(benchmark::State& state) {
    const auto& g = mdc_instance();
    for (auto _ : state) {
        benchmark::DoNotOptimize(burstcore::mdc(g, 3, Density(3, 1)));
    }
}
BENCHMARK(BM_MdcHull)->Unit(benchmark::kMillisecond);

void BM_MdcPlus(benchmark::State& state) {
    const auto& g = mdc_instance();
    for (auto _ : state) {
        benchmark::DoNotOptimize(burstcore::mdc_plus(g, 3, Density(3, 1)));
    }
}
BENCHMARK(BM_MdcPlus)->Unit(benchmark::kMillisecond);

void BM_PomdcPruned(benchmark::State& state) {
    const auto& g = frontier_instance();
    for (auto _ : state) {
        benchmark::DoNotOptimize(burstcore::pomdc(g));
    }
}
BENCHMARK(BM_PomdcPruned)->Unit(benchmark::kMillisecond);

void BM_PomdcBaseline(benchmark::State& state) {
    const auto& g = frontier_instance();
    for (auto _ : state) {
        benchmark::DoNotOptimize(burstcore::pomdc_baseline(g));
    }
}
BENCHMARK(BM_PomdcBaseline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
