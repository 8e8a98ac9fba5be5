#include "burstcore/generator.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <unordered_set>

namespace burstcore {

namespace {

void validate(const GenConfig& config) {
    if (config.n < 2) throw ArgumentError("generator needs at least 2 nodes");
    if (config.horizon < 1) throw ArgumentError("generator needs a positive horizon");
    if (config.background_prob < 0.0 || config.background_prob > 1.0) {
        throw ArgumentError("background probability must be in [0, 1]");
    }
    if (config.clique) {
        const PlantedClique& c = *config.clique;
        if (c.size < 2 || c.size > config.n) {
            throw ArgumentError("planted clique size must be in [2, n]");
        }
        if (c.t_begin < 1 || c.t_end > config.horizon || c.t_begin > c.t_end) {
            throw ArgumentError("planted window must lie within the horizon");
        }
        if (c.presence_prob < 0.0 || c.presence_prob > 1.0) {
            throw ArgumentError("presence probability must be in [0, 1]");
        }
    }
}

}  // namespace

GenResult generate(const GenConfig& config) {
    validate(config);

    std::mt19937_64 rng(config.seed);
    const std::int64_t n = config.n;
    const std::int64_t pairs = n * (n - 1) / 2;

    GenResult result;

    // Encoded pair set per snapshot keeps duplicates out when the planted
    // clique collides with a background edge.
    std::unordered_set<std::int64_t> seen;
    std::uniform_int_distribution<std::int64_t> pick_node(0, n - 1);
    std::binomial_distribution<std::int64_t> edge_count(pairs, config.background_prob);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    for (Timestamp t = 1; t <= config.horizon; ++t) {
        seen.clear();
        auto add_edge = [&](NodeId u, NodeId v) {
            NodeId a = std::min(u, v);
            NodeId b = std::max(u, v);
            if (seen.insert(static_cast<std::int64_t>(a) * n + b).second) {
                result.edges.push_back(TemporalEdge{a, b, t});
            }
        };

        if (config.background_prob > 0.0) {
            // Drawing the count binomially and then sampling that many
            // distinct pairs is distribution-identical to one independent
            // coin per pair, without touching all O(n²) of them.
            std::int64_t count = edge_count(rng);
            while (static_cast<std::int64_t>(seen.size()) < count) {
                NodeId u = static_cast<NodeId>(pick_node(rng));
                NodeId v = static_cast<NodeId>(pick_node(rng));
                if (u != v) add_edge(u, v);
            }
        }

        // coin ∈ [0,1): strict < fires never at prob 0 and always at prob 1.
        if (config.clique && t >= config.clique->t_begin && t <= config.clique->t_end &&
            coin(rng) < config.clique->presence_prob) {
            for (NodeId u = 0; u < config.clique->size; ++u) {
                for (NodeId v = u + 1; v < config.clique->size; ++v) {
                    add_edge(u, v);
                }
            }
        }
    }

    std::sort(result.edges.begin(), result.edges.end(),
              [](const TemporalEdge& a, const TemporalEdge& b) {
                  return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
              });

    if (config.clique) {
        result.clique_members.resize(static_cast<std::size_t>(config.clique->size));
        for (NodeId u = 0; u < config.clique->size; ++u) result.clique_members[u] = u;
    }
    return result;
}

void write_generated(const GenResult& result, std::ostream& out) {
    for (const TemporalEdge& e : result.edges) {
        out << e.u << ' ' << e.v << ' ' << e.t << '\n';
    }
}

void write_members(const GenResult& result, std::ostream& out) {
    for (NodeId u : result.clique_members) {
        out << u << '\n';
    }
}

}  // namespace burstcore
