#include "gexlat/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace gexlat {

std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string to_csv(const SweepReport& report) {
  std::string out =
      "n,beta,trial_index,derived_seed,num_edges,connected,num_colors,"
      "max_conflict_degree,delta_exact,delta_rate_bound,rate_bound_valid,"
      "delta_bound,delta_orderwise,clique_est_comm,tin_all_satisfied\n";
  char buf[512];
  for (const TrialResult& r : report.rows) {
    std::snprintf(buf, sizeof buf,
                  "%d,%s,%d,%llu,%lld,%d,%d,%lld,%s,%s,%d,%s,%s,%d,%d\n", r.n,
                  format_g9(r.beta).c_str(), r.trial_index,
                  static_cast<unsigned long long>(r.derived_seed),
                  static_cast<long long>(r.num_edges), r.connected ? 1 : 0,
                  r.num_colors, static_cast<long long>(r.max_conflict_degree),
                  format_g9(r.delta_exact).c_str(),
                  format_g9(r.delta_rate_bound).c_str(),
                  r.rate_bound_valid ? 1 : 0, format_g9(r.delta_bound).c_str(),
                  format_g9(r.delta_orderwise).c_str(), r.clique_est_comm,
                  r.tin_all_satisfied ? 1 : 0);
    out += buf;
  }
  return out;
}

namespace {

nlohmann::ordered_json row_json(const TrialResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["beta"] = r.beta;
  j["trial_index"] = r.trial_index;
  j["derived_seed"] = r.derived_seed;
  j["num_edges"] = r.num_edges;
  j["connected"] = r.connected;
  j["num_colors"] = r.num_colors;
  j["max_conflict_degree"] = r.max_conflict_degree;
  j["delta_exact"] = r.delta_exact;
  j["delta_rate_bound"] = r.delta_rate_bound;
  j["rate_bound_valid"] = r.rate_bound_valid;
  j["delta_bound"] = r.delta_bound;
  j["delta_orderwise"] = r.delta_orderwise;
  j["clique_est_comm"] = r.clique_est_comm;
  j["tin_all_satisfied"] = r.tin_all_satisfied;
  return j;
}

nlohmann::ordered_json cell_json(const CellSummary& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["beta"] = c.beta;
  j["trials_done"] = c.trials_done;
  j["mean_delta_exact"] = c.mean_delta_exact;
  j["min_delta_exact"] = c.min_delta_exact;
  j["max_delta_exact"] = c.max_delta_exact;
  j["mean_delta_rate_bound"] = c.mean_delta_rate_bound;
  j["delta_bound"] = c.delta_bound;
  j["delta_orderwise"] = c.delta_orderwise;
  j["mean_num_edges"] = c.mean_num_edges;
  j["mean_num_colors"] = c.mean_num_colors;
  j["connected_count"] = c.connected_count;
  j["tin_count"] = c.tin_count;
  j["connectivity_marginal"] = c.connectivity_marginal;
  return j;
}

nlohmann::ordered_json config_json(const SweepConfig& sweep) {
  nlohmann::ordered_json j;
  j["n_values"] = sweep.n_values;
  j["beta_values"] = sweep.beta_values;
  j["trials"] = sweep.trials;
  j["bound_only"] = sweep.bound_only;
  j["order"] = to_string(sweep.order);
  j["empirical_n_cap"] = sweep.empirical_n_cap;
  j["radius_m"] = sweep.base.radius_m;
  j["alpha"] = sweep.base.alpha;
  j["power_dbm"] = sweep.base.power_dbm;
  j["noise_psd_dbm_hz"] = sweep.base.noise_psd_dbm_hz;
  j["bandwidth_hz"] = sweep.base.bandwidth_hz;
  j["ref_gain"] = sweep.base.ref_gain;
  j["seed"] = sweep.base.seed;
  j["exchange_mode"] = to_string(sweep.base.exchange_mode);
  return j;
}

}  // namespace

std::string to_json(const SweepReport& report, const SweepConfig& sweep) {
  nlohmann::ordered_json doc;
  doc["config"] = config_json(sweep);
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const TrialResult& r : report.rows) rows.push_back(row_json(r));
  auto& cells = doc["cells"] = nlohmann::ordered_json::array();
  for (const CellSummary& c : report.cells) cells.push_back(cell_json(c));
  doc["notes"] = report.notes;
  return doc.dump(2) + "\n";
}

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 80.0, kRight = 830.0, kTop = 40.0, kBottom = 480.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string to_svg(const SweepReport& report) {
  // series keyed by beta: (n, delta_bound) and optionally (n, mean empirical)
  std::map<double, std::vector<std::pair<int, double>>> bound_series;
  std::map<double, std::vector<std::pair<int, double>>> exact_series;
  double y_min = 0.0, y_max = 0.0;
  int x_min = 0, x_max = 0;
  bool have_any = false;
  for (const CellSummary& c : report.cells) {
    bound_series[c.beta].emplace_back(c.n, c.delta_bound);
    if (!have_any) {
      y_min = y_max = c.delta_bound;
      x_min = x_max = c.n;
      have_any = true;
    }
    y_min = std::min(y_min, c.delta_bound);
    y_max = std::max(y_max, c.delta_bound);
    x_min = std::min(x_min, c.n);
    x_max = std::max(x_max, c.n);
    if (c.trials_done > 0 && c.mean_delta_exact > 0.0) {
      exact_series[c.beta].emplace_back(c.n, c.mean_delta_exact);
      y_min = std::min(y_min, c.mean_delta_exact);
      y_max = std::max(y_max, c.mean_delta_exact);
    }
  }

  std::string svg;
  svg += "<svg xmlns='http://www.w3.org/2000/svg' width='" + fmt(kWidth) +
         "' height='" + fmt(kHeight) + "' viewBox='0 0 " + fmt(kWidth) + " " +
         fmt(kHeight) + "'>\n";
  svg += "<rect width='100%' height='100%' fill='white'/>\n";
  svg += "<text x='430' y='22' text-anchor='middle' font-size='15' "
         "font-family='sans-serif'>normalized gradient-exchange latency vs "
         "network size</text>\n";

  if (!have_any) {
    svg += "</svg>\n";
    return svg;
  }

  const double ly_min = std::floor(std::log10(std::max(y_min, 1e-300)));
  const double ly_max = std::ceil(std::log10(std::max(y_max, 1e-300)));
  const double ly_span = std::max(ly_max - ly_min, 1.0);
  const double x_span = std::max(1.0, static_cast<double>(x_max - x_min));

  auto sx = [&](double n) {
    return kLeft + (n - x_min) / x_span * (kRight - kLeft);
  };
  auto sy = [&](double v) {
    const double l = std::log10(std::max(v, 1e-300));
    return kBottom - (l - ly_min) / ly_span * (kBottom - kTop);
  };

  // axes and decade gridlines
  svg += "<g stroke='#444' stroke-width='1'>\n";
  svg += "<line x1='" + fmt(kLeft) + "' y1='" + fmt(kBottom) + "' x2='" +
         fmt(kRight) + "' y2='" + fmt(kBottom) + "'/>\n";
  svg += "<line x1='" + fmt(kLeft) + "' y1='" + fmt(kTop) + "' x2='" +
         fmt(kLeft) + "' y2='" + fmt(kBottom) + "'/>\n";
  svg += "</g>\n";
  for (double d = ly_min; d <= ly_max + 0.5; d += 1.0) {
    const double y = sy(std::pow(10.0, d));
    svg += "<line x1='" + fmt(kLeft) + "' y1='" + fmt(y) + "' x2='" +
           fmt(kRight) + "' y2='" + fmt(y) +
           "' stroke='#ddd' stroke-width='0.5'/>\n";
    svg += "<text x='" + fmt(kLeft - 8) + "' y='" + fmt(y + 4) +
           "' text-anchor='end' font-size='11' font-family='sans-serif'>1e" +
           fmt(d) + "</text>\n";
  }
  for (const auto& [beta, pts] : bound_series) {
    for (const auto& [n, v] : pts) {
      (void)v;
      svg += "<text x='" + fmt(sx(n)) + "' y='" + fmt(kBottom + 16) +
             "' text-anchor='middle' font-size='10' "
             "font-family='sans-serif'>" + std::to_string(n) + "</text>\n";
    }
    break;  // tick labels once
  }

  int color_idx = 0;
  double legend_y = kTop + 10;
  for (const auto& [beta, pts] : bound_series) {
    const char* color = kPalette[color_idx % 8];
    std::string poly = "<polyline fill='none' stroke='" + std::string(color) +
                       "' stroke-width='1.6' points='";
    for (const auto& [n, v] : pts)
      poly += fmt(sx(n)) + "," + fmt(sy(v)) + " ";
    poly += "'/>\n";
    svg += poly;
    svg += "<text x='" + fmt(kRight - 140) + "' y='" + fmt(legend_y) +
           "' font-size='11' font-family='sans-serif' fill='" + color +
           "'>bound, beta=" + format_g9(beta) + "</text>\n";
    legend_y += 14;

    const auto it = exact_series.find(beta);
    if (it != exact_series.end() && !it->second.empty()) {
      std::string dashed = "<polyline fill='none' stroke='" +
                           std::string(color) +
                           "' stroke-width='1.2' stroke-dasharray='5,4' points='";
      for (const auto& [n, v] : it->second)
        dashed += fmt(sx(n)) + "," + fmt(sy(v)) + " ";
      dashed += "'/>\n";
      svg += dashed;
      svg += "<text x='" + fmt(kRight - 140) + "' y='" + fmt(legend_y) +
             "' font-size='11' font-family='sans-serif' fill='" + color +
             "'>empirical, beta=" + format_g9(beta) + "</text>\n";
      legend_y += 14;
    }
    ++color_idx;
  }
  svg += "<text x='455' y='" + fmt(kBottom + 34) +
         "' text-anchor='middle' font-size='12' "
         "font-family='sans-serif'>nodes</text>\n";
  svg += "</svg>\n";
  return svg;
}

std::string bound_report_csv(const NetworkConfig& cfg, const BoundReport& r) {
  std::string out =
      "n,beta,chi_bound,delta_bound,delta_orderwise,expected_edges,"
      "clique_asymptote_comm,clique_asymptote_conf\n";
  char buf[320];
  std::snprintf(buf, sizeof buf, "%d,%s,%s,%s,%s,%s,%s,%s\n", cfg.n,
                format_g9(cfg.beta).c_str(), format_g9(r.chi_bound).c_str(),
                format_g9(r.delta_bound).c_str(),
                format_g9(r.delta_orderwise).c_str(),
                format_g9(r.expected_edges).c_str(),
                format_g9(r.clique_asymptote_comm).c_str(),
                format_g9(r.clique_asymptote_conf).c_str());
  out += buf;
  return out;
}

std::string bound_report_json(const NetworkConfig& cfg, const BoundReport& r) {
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["beta"] = cfg.beta;
  j["chi_bound"] = r.chi_bound;
  j["delta_bound"] = r.delta_bound;
  j["delta_orderwise"] = r.delta_orderwise;
  j["expected_edges"] = r.expected_edges;
  j["clique_asymptote_comm"] = r.clique_asymptote_comm;
  j["clique_asymptote_conf"] = r.clique_asymptote_conf;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_outputs(const SweepReport& report, const SweepConfig& sweep) {
  const std::string body =
      sweep.format == "json" ? to_json(report, sweep) : to_csv(report);
  if (sweep.out_path.empty()) {
    std::cout << body;
  } else {
    write_text_file(sweep.out_path, body);
  }
  if (!sweep.plot_path.empty()) write_text_file(sweep.plot_path, to_svg(report));
}

}  // namespace gexlat
