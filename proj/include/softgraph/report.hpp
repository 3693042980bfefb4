#pragma once

#include <string>
#include <vector>

#include "softgraph/embedding.hpp"
#include "softgraph/graph.hpp"
#include "softgraph/landscape.hpp"
#include "softgraph/tables.hpp"
#include "softgraph/transforms.hpp"

namespace softgraph {

// JSON documents for the CLI surfaces. Deterministic field order and
// number formatting.
std::string spectrum_report_json(const Graph& g);
std::string soft_report_json(const Graph& g, const SoftNodeReport& report);
std::string records_json(const std::vector<RatRecord>& records);
std::string delta_analysis_json(const DeltaAnalysis& analysis);
std::string table_report_json(const std::vector<TableRow>& rows);

std::string emit_landscape_json(const Family& family);

}  // namespace softgraph
