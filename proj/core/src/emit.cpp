#include "bellsta/emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "bellsta/errors.hpp"

namespace bellsta {

void Metadata::add(const std::string& key, const std::string& value) {
  items.emplace_back(key, value);
}

void Metadata::add(const std::string& key, double value) {
  items.emplace_back(key, format_double(value));
}

void Metadata::add(const std::string& key, int value) {
  items.emplace_back(key, std::to_string(value));
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  // Shortest decimal form that parses back to the same double, preferring
  // plain notation ("20.0" rather than "2e+01"); matches the JSON emitter.
  return nlohmann::json(value).dump();
}

namespace {

void check_table(const SeriesTable& table) {
  if (table.columns.empty()) throw DomainError("table must have at least one column");
  for (const auto& row : table.rows)
    if (row.size() != table.columns.size())
      throw DomainError("table row width does not match the column count");
}

std::string metadata_comment(const Metadata& meta) {
  std::string line = "#";
  for (const auto& [key, value] : meta.items) line += " " + key + "=" + value;
  line += "\n";
  return line;
}

}  // namespace

std::string to_csv(const SeriesTable& table, const Metadata& meta) {
  check_table(table);
  std::string out = metadata_comment(meta);
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ",";
    out += table.columns[c];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += format_double(row[c]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const SeriesTable& table, const Metadata& meta) {
  check_table(table);
  nlohmann::ordered_json doc;
  auto& meta_obj = doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta.items) meta_obj[key] = value;
  auto& records = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record;
    for (std::size_t c = 0; c < row.size(); ++c) record[table.columns[c]] = row[c];
    records.push_back(std::move(record));
  }
  return doc.dump() + "\n";
}

SeriesTable trajectory_table(const Trajectory& trajectory) {
  SeriesTable table;
  const int dim = basis_dim(trajectory.basis());
  table.columns.push_back("t");
  for (int k = 1; k <= dim; ++k) {
    table.columns.push_back("re_a" + std::to_string(k));
    table.columns.push_back("im_a" + std::to_string(k));
  }
  for (int k = 1; k <= dim; ++k) table.columns.push_back("p" + std::to_string(k));
  table.rows.reserve(static_cast<std::size_t>(trajectory.n_nodes()));
  for (int node = 0; node < trajectory.n_nodes(); ++node) {
    std::vector<double> row;
    row.reserve(table.columns.size());
    row.push_back(trajectory.time_at(node));
    const auto& amps = trajectory.state_at(node);
    for (int k = 0; k < dim; ++k) {
      row.push_back(amps[k].real());
      row.push_back(amps[k].imag());
    }
    for (int k = 0; k < dim; ++k) row.push_back(std::norm(amps[k]));
    table.rows.push_back(std::move(row));
  }
  return table;
}

SeriesTable sweep_table(const SweepResult& sweep) {
  SeriesTable table;
  table.columns = {"omega0", "alpha", "population"};
  table.rows.reserve(sweep.population.size());
  const std::size_t n_alpha = sweep.alpha_values.size();
  for (std::size_t i = 0; i < sweep.omega0_values.size(); ++i)
    for (std::size_t j = 0; j < n_alpha; ++j)
      table.rows.push_back({sweep.omega0_values[i], sweep.alpha_values[j],
                            sweep.population[i * n_alpha + j]});
  return table;
}

SeriesTable curve_table(const FidelityCurve& curve) {
  SeriesTable table;
  table.columns = {"t_total", "f_adiabatic", "f_tqd", "f_lri"};
  for (std::size_t k = 0; k < curve.t_total.size(); ++k)
    table.rows.push_back(
        {curve.t_total[k], curve.f_adiabatic[k], curve.f_tqd[k], curve.f_lri[k]});
  return table;
}

SeriesTable design_report_table(const DesignReport& report) {
  SeriesTable table;
  table.columns = {"t", "gamma", "beta", "omega_lr", "delta_lr"};
  for (std::size_t k = 0; k < report.t.size(); ++k)
    table.rows.push_back({report.t[k], report.gamma[k], report.beta[k],
                          report.omega_lr[k], report.delta_lr[k]});
  return table;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot open \"" + path + "\" for writing");
  out << content;
  out.flush();
  if (!out) throw DomainError("failed while writing \"" + path + "\"");
}

}  // namespace bellsta
