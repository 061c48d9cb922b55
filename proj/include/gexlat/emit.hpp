#pragma once

#include <string>

#include "gexlat/bounds.hpp"
#include "gexlat/harness.hpp"

namespace gexlat {

// %.9g, C locale.
std::string format_g9(double v);

// Trial rows. Header always present; LF endings; 9 significant digits.
std::string to_csv(const SweepReport& report);

// Rows plus per-cell aggregates and notes, key order fixed.
std::string to_json(const SweepReport& report, const SweepConfig& sweep);

// delta_bound per beta over n (solid), mean empirical delta (dashed) when
// present. Log10 y-axis. Pure function of the report.
std::string to_svg(const SweepReport& report);

std::string bound_report_csv(const NetworkConfig& cfg, const BoundReport& r);
std::string bound_report_json(const NetworkConfig& cfg, const BoundReport& r);

void write_text_file(const std::string& path, const std::string& content);

// Writes CSV/JSON to sweep.out_path (stdout when empty) and the SVG to
// sweep.plot_path when set.
void emit_outputs(const SweepReport& report, const SweepConfig& sweep);

}  // namespace gexlat
