#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bellsta/experiments.hpp"
#include "bellsta/propagate.hpp"

namespace bellsta {

/// Ordered key-value pairs written into every emitted file. Deliberately
/// excludes wall-clock timestamps so identical inputs produce bit-identical
/// files.
struct Metadata {
  std::vector<std::pair<std::string, std::string>> items;

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add(const std::string& key, int value);
};

/// A rectangular table of doubles with named columns.
struct SeriesTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  ///< each row has columns.size() entries
};

/// Shortest round-trip decimal form of a double ("%.17g" trimmed); NaN is
/// rendered as "nan".
std::string format_double(double value);

/// CSV with '.' decimal separator and a header row of column names. The first
/// line is a comment of the form "# key=value key=value ..." carrying the
/// metadata. Lines end with '\n'; fields never need quoting.
std::string to_csv(const SeriesTable& table, const Metadata& meta);

/// JSON document {"meta": {...}, "records": [{column: value, ...}, ...]}.
/// Metadata values stay strings; cell values are numbers (NaN becomes null).
std::string to_json(const SeriesTable& table, const Metadata& meta);

// Table builders for the result types produced by this library.

/// Columns: t, re_a1, im_a1, ..., re_aN, im_aN, p1, ..., pN (1-based).
SeriesTable trajectory_table(const Trajectory& trajectory);

/// Columns: omega0, alpha, population; one row per cell, omega0-major order.
SeriesTable sweep_table(const SweepResult& sweep);

/// Columns: t_total, f_adiabatic, f_tqd, f_lri.
SeriesTable curve_table(const FidelityCurve& curve);

/// Columns: t, gamma, beta, omega_lr, delta_lr.
SeriesTable design_report_table(const DesignReport& report);

/// Writes content to path, creating or truncating the file. Throws
/// DomainError naming the path on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bellsta
