#include "stardis/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace stardis {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream row(line);
  while (std::getline(row, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_coord(const std::string& field, std::uint64_t row) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::domain_error("row " + std::to_string(row) + ": bad coordinate '" + field + "'");
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error("row " + std::to_string(row) + ": coordinate outside [0,1]");
  }
  return value;
}

std::string trimmed(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  return line;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  double parsed = 0.0;
  // Prefer the shortest representation that still round-trips.
  for (int precision = 1; precision < 17; ++precision) {
    char probe[32];
    std::snprintf(probe, sizeof probe, "%.*g", precision, value);
    std::sscanf(probe, "%lf", &parsed);
    if (parsed == value) return probe;
  }
  return buf;
}

void write_point_set_csv(const PointSet& points, std::ostream& out) {
  for (std::uint32_t j = 0; j < points.dimension(); ++j) {
    out << (j == 0 ? "" : ",") << "dim" << j;
  }
  out << '\n';
  for (std::uint64_t i = 0; i < points.size(); ++i) {
    for (std::uint32_t j = 0; j < points.dimension(); ++j) {
      out << (j == 0 ? "" : ",") << format_double(points.coord(i, j));
    }
    out << '\n';
  }
}

PointSet read_point_set_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::domain_error("point set csv is empty");
  const std::size_t dimension = split_csv_row(trimmed(line)).size();
  if (dimension == 0) throw std::domain_error("point set csv has no columns");

  std::vector<double> rows;
  std::uint64_t count = 0;
  while (std::getline(in, line)) {
    line = trimmed(line);
    if (line.empty()) continue;
    const auto fields = split_csv_row(line);
    if (fields.size() != dimension) {
      throw std::domain_error("row " + std::to_string(count + 1) + ": expected " +
                              std::to_string(dimension) + " columns, got " +
                              std::to_string(fields.size()));
    }
    for (const auto& field : fields) rows.push_back(parse_coord(field, count + 1));
    ++count;
  }
  if (count == 0) throw std::domain_error("point set csv has no data rows");

  PointSet points(static_cast<std::uint32_t>(dimension), count);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::uint32_t j = 0; j < dimension; ++j) {
      points.coord(i, j) = rows[i * dimension + j];
    }
  }
  return points;
}

PointSet read_point_set_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open point set file: " + path);
  return read_point_set_csv(in);
}

void write_samples_csv(const ExperimentResult& result, std::ostream& out) {
  out << "replication,sampler,discrepancy\n";
  for (const auto& summary : result.summaries) {
    for (std::size_t k = 0; k < summary.samples.size(); ++k) {
      out << k << ',' << sampler_kind_name(summary.kind) << ','
          << format_double(summary.samples[k]) << '\n';
    }
  }
}

nlohmann::json to_json(const RunConfig& config) {
  nlohmann::json samplers = nlohmann::json::array();
  for (const auto kind : config.samplers) samplers.push_back(sampler_kind_name(kind));
  return {
      {"dimension", config.dimension},
      {"cells_per_axis", config.cells_per_axis},
      {"samplers", samplers},
      {"replications", config.replications},
      {"master_seed", config.master_seed},
      {"method", discrepancy_method_name(config.method)},
      {"delta", config.delta},
      {"confidence", config.confidence},
  };
}

RunConfig run_config_from_json(const nlohmann::json& j) {
  RunConfig config;
  config.dimension = j.value("dimension", config.dimension);
  config.cells_per_axis = j.value("cells_per_axis", config.cells_per_axis);
  if (j.contains("samplers")) {
    config.samplers.clear();
    for (const auto& name : j.at("samplers")) {
      const auto kind = parse_sampler_kind(name.get<std::string>());
      if (!kind) throw std::domain_error("unknown sampler: " + name.get<std::string>());
      config.samplers.push_back(*kind);
    }
  }
  config.replications = j.value("replications", config.replications);
  config.master_seed = j.value("master_seed", config.master_seed);
  if (j.contains("method")) {
    const auto name = j.at("method").get<std::string>();
    if (name == "exact") {
      config.method = DiscrepancyMethod::exact;
    } else if (name == "cover") {
      config.method = DiscrepancyMethod::cover;
    } else if (name == "auto" || name == "automatic") {
      config.method = DiscrepancyMethod::automatic;
    } else {
      throw std::domain_error("unknown method: " + name);
    }
  }
  config.delta = j.value("delta", config.delta);
  config.confidence = j.value("confidence", config.confidence);
  config.validate();
  return config;
}

RunConfig read_run_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::domain_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error("config is not valid json: " + std::string(e.what()));
  }
  return run_config_from_json(j);
}

nlohmann::json to_json(const ExperimentResult& result) {
  nlohmann::json summaries = nlohmann::json::array();
  for (const auto& s : result.summaries) {
    summaries.push_back({
        {"sampler", sampler_kind_name(s.kind)},
        {"mean", s.mean},
        {"stddev", s.stddev},
        {"standard_error", s.standard_error},
        {"replications", s.samples.size()},
    });
  }
  nlohmann::json j{
      {"config", to_json(result.config)},
      {"method", discrepancy_method_name(result.config.resolved_method())},
      {"summaries", summaries},
      {"difference", result.difference},
      {"ci_low", result.ci_low},
      {"ci_high", result.ci_high},
      {"t_statistic", result.t_statistic},
      {"degrees_of_freedom", result.degrees_of_freedom},
      {"p_value", result.p_value},
      {"verdict", result.verdict},
      {"runtime_seconds", result.runtime_seconds},
  };
  if (result.config.resolved_method() == DiscrepancyMethod::cover) {
    // Each sample is a lattice value; the exact discrepancy lies within
    // +delta of it.
    j["delta_band"] = result.config.resolved_delta();
  }
  return j;
}

nlohmann::json to_json(const DiscrepancyResult& result) {
  return {
      {"value", result.value},
      {"witness", result.witness},
      {"side", result.side == DiscrepancySide::over ? "over" : "under"},
  };
}

}  // namespace stardis
