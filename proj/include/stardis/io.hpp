#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "stardis/discrepancy.hpp"
#include "stardis/experiment.hpp"
#include "stardis/samplers.hpp"

namespace stardis {

// Shortest round-trip decimal form of a double (printf %.17g trimmed).
std::string format_double(double value);

// Header dim0,...,dim{d-1}; one row per point, coordinates with full
// round-trip precision.
void write_point_set_csv(const PointSet& points, std::ostream& out);
PointSet read_point_set_csv(std::istream& in);
PointSet read_point_set_csv_file(const std::string& path);

// Columns replication,sampler,discrepancy; samplers in config order,
// replications ascending within a sampler.
void write_samples_csv(const ExperimentResult& result, std::ostream& out);

nlohmann::json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig read_run_config_file(const std::string& path);

nlohmann::json to_json(const ExperimentResult& result);
nlohmann::json to_json(const DiscrepancyResult& result);

}  // namespace stardis
