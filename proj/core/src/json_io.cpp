#include "burstcore/json_io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace burstcore {

namespace {

using json = nlohmann::ordered_json;

json density_json(const Density& d) {
    return json{{"num", d.sum}, {"den", d.len}};
}

// Community members as original labels, sorted lexicographically; `order`
// receives the corresponding positions into `nodes` so aligned payloads
// (witnesses) can follow the same order.
json label_array(const TemporalGraph& g, const NodeSet& nodes, std::vector<std::size_t>* order) {
    std::vector<std::size_t> index(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) index[i] = i;
    std::sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
        return g.labels[static_cast<std::size_t>(nodes[a])] <
               g.labels[static_cast<std::size_t>(nodes[b])];
    });
    json array = json::array();
    for (std::size_t i : index) {
        array.push_back(g.labels[static_cast<std::size_t>(nodes[i])]);
    }
    if (order) *order = std::move(index);
    return array;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string stats_json(const TemporalGraph& g) {
    DetemporalGraph det = detemporal(g);
    json j{{"n", g.n},
           {"m_temporal", g.m},
           {"m_detemporal", det.edge_count()},
           {"horizon", g.horizon},
           {"d_max", det.max_degree()}};
    return dump(j);
}

std::string mdc_json(const TemporalGraph& g, const MdcResult& result) {
    std::vector<std::size_t> order;
    json j{{"l", result.l}, {"delta", density_json(result.delta)}};
    j["nodes"] = label_array(g, result.nodes, &order);
    json witnesses = json::array();
    for (std::size_t i : order) {
        const Witness& w = result.witnesses[i];
        witnesses.push_back(json{{"node", g.labels[static_cast<std::size_t>(w.node)]},
                                 {"window", json::array({w.t_s, w.t_e})},
                                 {"density", density_json(w.density)}});
    }
    j["witnesses"] = std::move(witnesses);
    return dump(j);
}

std::string frontier_json(const TemporalGraph& g, const std::vector<ParetoPoint>& frontier) {
    json array = json::array();
    for (const ParetoPoint& point : frontier) {
        json j{{"l", point.l}, {"delta", density_json(point.delta)}};
        j["nodes"] = label_array(g, point.nodes, nullptr);
        array.push_back(std::move(j));
    }
    return dump(array);
}

std::string metrics_json(const MetricReport& report) {
    json j;
    j["AD"] = report.ad;
    if (report.as_infinite) {
        j["AS"] = "inf";
    } else {
        j["AS"] = report.as_;
    }
    j["internal"] = report.internal_edges;
    j["cross"] = report.cross_edges;
    j["size"] = report.community_size;
    return dump(j);
}

}  // namespace burstcore
