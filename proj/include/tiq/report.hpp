#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tiq/graph.hpp"
#include "tiq/oracle.hpp"
#include "tiq/pipeline.hpp"

namespace tiq {

// Field names are frozen in docs/report-schema.md; downstream scripts parse
// them. Key order in the emitted text is alphabetical (the JSON library
// sorts), so equal inputs give byte-identical documents.

nlohmann::json ledger_json(const QueryLedger& ledger);

nlohmann::json graph_json(const Graph& g, const TriangleStats& stats);

nlohmann::json config_json(const EstimatorConfig& cfg);

nlohmann::json derived_json(const DerivedParams& dp);

// The full per-run document: graph metadata, config echo, derived
// parameters, the estimate with its relative error against ground truth,
// and the query breakdown. wall_time_s is emitted only when provided, so
// timing-free runs stay reproducible byte for byte.
nlohmann::json run_report_json(const Graph& g, const TriangleStats& stats,
                               const EstimatorConfig& cfg,
                               const EstimateReport& report,
                               std::optional<double> wall_time_s);

// Serializes with a fixed indent and trailing newline.
std::string dump_report(const nlohmann::json& j);

}  // namespace tiq
