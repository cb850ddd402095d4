#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ionsim/sweep.hpp"

namespace ionsim {

struct RecordField {
  const char* name;
  double SweepRecord::* member;
};

// Canonical column order shared by the CSV schema, the JSON records, the plot
// field lookup, and the convergence diffs.
std::span<const RecordField> record_fields();

// %.12g; 12 significant digits are the serialization contract.
std::string format_sig12(double value);

// Header `theta_deg,T_deg,N_A,...,leakage` then one row per record.
std::string to_csv(const std::vector<SweepRecord>& records);

// Strict: the header must match the canonical schema exactly.
std::vector<SweepRecord> parse_csv(std::istream& in);
std::vector<SweepRecord> parse_csv_file(const std::string& path);

// {"config": {...}, "metadata": {...}, "records": [...]}
std::string to_json(const SweepResult& result);

void write_text_file(const std::string& path, const std::string& content);

// Static heatmap of one record field, theta horizontal, T vertical, linear
// color map over [0, max].  Requires a complete rectangular grid.
std::string render_heatmap_svg(const std::vector<SweepRecord>& records,
                               const std::string& field);

// Line traces of one or more fields versus T at a fixed theta row.
std::string render_line_svg(const std::vector<SweepRecord>& records,
                            const std::vector<std::string>& fields, double theta_deg);

}  // namespace ionsim
