#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dirset/cap_analysis.hpp"
#include "dirset/direction_set.hpp"
#include "dirset/point_cloud.hpp"
#include "dirset/secant.hpp"
#include "dirset/trichotomy.hpp"

namespace dirset {

// Shortest round-trip decimal form of a double; all file formats use this so
// outputs are byte-stable.
std::string format_double(double v);

// Points CSV: one point per row, d numeric columns, optional header row
// (auto-detected on input, always written on output). Rows with non-finite
// or non-numeric values are rejected with the 1-based file line number.
PointCloud read_points_csv(std::istream& in, std::string label = {},
                           bool allow_duplicates = false);
PointCloud read_points_csv_file(const std::string& path, bool allow_duplicates = false);
void write_points_csv(std::ostream& out, const PointCloud& cloud);
void write_points_csv_file(const std::string& path, const PointCloud& cloud);

// Metadata every JSON output carries: {tool_version, config_echo}. The echo
// lists the flags needed to regenerate the file, in fixed order.
struct JsonMeta {
  std::vector<std::pair<std::string, std::string>> config_echo;
};

std::string direction_set_to_json(const DirectionSet& ds, const JsonMeta& meta);
DirectionSet direction_set_from_json(const std::string& text);
DirectionSet direction_set_from_json_file(const std::string& path);

std::string cap_report_to_json(const CapReport& cap, std::size_t dim, const JsonMeta& meta);
CapReport cap_report_from_json(const std::string& text);
CapReport cap_report_from_json_file(const std::string& path);

std::string coverage_to_json(const CoverageCertificate& cert, std::size_t dim,
                             const JsonMeta& meta);

// Classification record. Witness sample arrays are inlined below
// `witness_inline_limit` points and otherwise written to `witness_file`
// (CSV: base columns then value), which is then referenced from the JSON.
std::string classification_to_json(const Classification& c, const JsonMeta& meta,
                                   std::size_t witness_inline_limit = 10000,
                                   const std::string& witness_file = {});

// Slope list CSV with a single `slope` column.
void write_slopes_csv(std::ostream& out, const SlopeSet& slopes);
std::vector<double> read_slopes_csv_file(const std::string& path);

// Refinement table CSV: depth,n,max_abs_slope,fill_eps,M.
void write_refinement_csv(std::ostream& out, const std::vector<RefinementRow>& rows);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dirset
