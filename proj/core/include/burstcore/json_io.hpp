#pragma once

#include <string>
#include <vector>

#include "burstcore/core_mining.hpp"
#include "burstcore/metrics.hpp"
#include "burstcore/pareto.hpp"
#include "burstcore/temporal_graph.hpp"

namespace burstcore {

// JSON serialization of the module outputs. Node sets are emitted as original
// labels sorted lexicographically (witnesses follow the same order), so runs
// that agree on the node set agree byte-for-byte. Densities serialize as
// {"num": sum, "den": len}. All functions return a pretty-printed document
// with a trailing newline.

// {"n", "m_temporal", "m_detemporal", "horizon", "d_max"}
std::string stats_json(const TemporalGraph& g);

// {"l", "delta": {"num","den"}, "nodes": [...],
//  "witnesses": [{"node", "window": [ts, te], "density": {"num","den"}}, ...]}
std::string mdc_json(const TemporalGraph& g, const MdcResult& result);

// [{"l", "delta": {"num","den"}, "nodes": [...]}, ...] sorted by l ascending.
std::string frontier_json(const TemporalGraph& g, const std::vector<ParetoPoint>& frontier);

// {"AD": float, "AS": float|"inf", "internal": int, "cross": int, "size": int}
std::string metrics_json(const MetricReport& report);

}  // namespace burstcore
