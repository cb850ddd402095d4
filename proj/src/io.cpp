#include "ionsim/io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ionsim {

namespace {

constexpr std::array<RecordField, 13> kRecordFields{{
    {"theta_deg", &SweepRecord::theta_deg},
    {"T_deg", &SweepRecord::T_deg},
    {"N_A", &SweepRecord::N_A},
    {"N_B", &SweepRecord::N_B},
    {"N_C", &SweepRecord::N_C},
    {"Sl_A", &SweepRecord::Sl_A},
    {"Sl_B", &SweepRecord::Sl_B},
    {"Sl_C", &SweepRecord::Sl_C},
    {"purity_A", &SweepRecord::purity_A},
    {"purity_B", &SweepRecord::purity_B},
    {"purity_C", &SweepRecord::purity_C},
    {"norm_error", &SweepRecord::norm_error},
    {"leakage", &SweepRecord::leakage},
}};

std::string canonical_header() {
  std::string h;
  for (const RecordField& f : kRecordFields) {
    if (!h.empty()) h += ',';
    h += f.name;
  }
  return h;
}

double parse_double(const std::string& text, int line_no) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw IoError("csv: cannot parse number '" + text + "' on line " + std::to_string(line_no));
  }
  return v;
}

}  // namespace

std::span<const RecordField> record_fields() { return kRecordFields; }

std::string format_sig12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = canonical_header() + '\n';
  for (const SweepRecord& rec : records) {
    bool first = true;
    for (const RecordField& f : kRecordFields) {
      if (!first) out += ',';
      out += format_sig12(rec.*f.member);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::vector<SweepRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != canonical_header()) {
    throw IoError("csv: header does not match sweep schema: '" + line + "'");
  }

  std::vector<SweepRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (cells.size() != kRecordFields.size()) {
      throw IoError("csv: expected " + std::to_string(kRecordFields.size()) +
                    " columns on line " + std::to_string(line_no) + ", got " +
                    std::to_string(cells.size()));
    }
    SweepRecord rec;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      rec.*kRecordFields[k].member = parse_double(cells[k], line_no);
    }
    records.push_back(rec);
  }
  return records;
}

std::vector<SweepRecord> parse_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return parse_csv(in);
}

std::string to_json(const SweepResult& result) {
  nlohmann::ordered_json j;
  const SweepConfig& c = result.config;
  j["config"] = {
      {"tier", tier_name(c.tier)},
      {"family", family_name(c.family)},
      {"beta_re", c.beta.real()},
      {"beta_im", c.beta.imag()},
      {"mu_over_a", c.mu_over_a},
      {"g_eta_c", c.g_eta_c},
      {"eta_l", c.eta_l},
      {"eta_c", c.eta_c},
      {"theta_grid", {{"start", c.theta_grid.start}, {"stop", c.theta_grid.stop}, {"count", c.theta_grid.count}}},
      {"t_grid", {{"start", c.t_grid.start}, {"stop", c.t_grid.stop}, {"count", c.t_grid.count}}},
      {"cutoff_m", c.cutoff_m},
      {"cutoff_n", c.cutoff_n},
      {"d_mode", c.d_mode.str()},
      {"trunc_tol", c.trunc_tol},
  };
  j["metadata"] = {
      {"effective_d",
       {{"A", result.metadata.effective_d[0]},
        {"B", result.metadata.effective_d[1]},
        {"C", result.metadata.effective_d[2]}}},
      {"renormalized_initial", result.metadata.renormalized_initial},
      {"truncation_deficit", result.metadata.truncation_deficit},
      {"max_leakage", result.metadata.max_leakage},
  };
  j["records"] = nlohmann::ordered_json::array();
  for (const SweepRecord& rec : result.records) {
    nlohmann::ordered_json row;
    for (const RecordField& f : kRecordFields) row[f.name] = rec.*f.member;
    j["records"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

// ------------------------------------------------------------------ SVG

namespace {

struct Rgb {
  double r, g, b;
};

std::string color_at(double t) {
  static constexpr std::array<Rgb, 5> stops{{{68, 1, 84},
                                             {59, 82, 139},
                                             {33, 145, 140},
                                             {94, 201, 98},
                                             {253, 231, 37}}};
  t = std::min(1.0, std::max(0.0, t));
  const double x = t * (stops.size() - 1);
  const int lo = std::min(static_cast<int>(x), static_cast<int>(stops.size()) - 2);
  const double f = x - lo;
  const auto mix = [&](double a, double b) { return a + (b - a) * f; };
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(mix(stops[lo].r, stops[lo + 1].r) + 0.5),
                static_cast<int>(mix(stops[lo].g, stops[lo + 1].g) + 0.5),
                static_cast<int>(mix(stops[lo].b, stops[lo + 1].b) + 0.5));
  return buf;
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fmt6g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double SweepRecord::* field_member(const std::string& field) {
  for (const RecordField& f : kRecordFields) {
    if (field == f.name) return f.member;
  }
  throw IoError("unknown record field '" + field + "'");
}

constexpr double kWidth = 720.0, kHeight = 560.0;
constexpr double kLeft = 80.0, kRight = 130.0, kTop = 48.0, kBottom = 64.0;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

void svg_open(std::ostringstream& svg, const std::string& title) {
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << fmt2(kLeft + kPlotW / 2) << "\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
}

void svg_axes(std::ostringstream& svg, const std::string& xlabel, const std::string& ylabel) {
  svg << "<rect x=\"" << fmt2(kLeft) << "\" y=\"" << fmt2(kTop) << "\" width=\"" << fmt2(kPlotW)
      << "\" height=\"" << fmt2(kPlotH) << "\" fill=\"none\" stroke=\"black\"/>\n"
      << "<text x=\"" << fmt2(kLeft + kPlotW / 2) << "\" y=\"" << fmt2(kHeight - 14)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << xlabel
      << "</text>\n"
      << "<text x=\"22\" y=\"" << fmt2(kTop + kPlotH / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 22 "
      << fmt2(kTop + kPlotH / 2) << ")\">" << ylabel << "</text>\n";
}

}  // namespace

std::string render_heatmap_svg(const std::vector<SweepRecord>& records,
                               const std::string& field) {
  if (records.empty()) throw IoError("heatmap: no records");
  double SweepRecord::* member = field_member(field);

  std::map<double, int> theta_ix, t_ix;
  for (const SweepRecord& rec : records) {
    theta_ix.emplace(rec.theta_deg, 0);
    t_ix.emplace(rec.T_deg, 0);
  }
  int k = 0;
  for (auto& [v, ix] : theta_ix) ix = k++;
  k = 0;
  for (auto& [v, ix] : t_ix) ix = k++;
  const int n_theta = static_cast<int>(theta_ix.size());
  const int n_t = static_cast<int>(t_ix.size());
  if (static_cast<std::size_t>(n_theta) * n_t != records.size()) {
    throw IoError("heatmap: records do not form a rectangular (theta, T) grid");
  }
  std::vector<char> seen(records.size(), 0);
  std::vector<double> value(records.size(), 0.0);
  double vmax = 0.0;
  for (const SweepRecord& rec : records) {
    const int cell = theta_ix[rec.theta_deg] * n_t + t_ix[rec.T_deg];
    if (seen[cell]) throw IoError("heatmap: duplicate grid point");
    seen[cell] = 1;
    value[cell] = rec.*member;
    vmax = std::max(vmax, value[cell]);
  }
  const double scale = vmax > 0.0 ? vmax : 1.0;

  std::ostringstream svg;
  svg_open(svg, field);
  const double cw = kPlotW / n_theta;
  const double ch = kPlotH / n_t;
  for (int c = 0; c < n_theta; ++c) {
    for (int r = 0; r < n_t; ++r) {
      const double x = kLeft + c * cw;
      const double y = kTop + (n_t - 1 - r) * ch;  // T increases upward
      svg << "<rect x=\"" << fmt2(x) << "\" y=\"" << fmt2(y) << "\" width=\"" << fmt2(cw + 0.5)
          << "\" height=\"" << fmt2(ch + 0.5) << "\" fill=\"" << color_at(value[c * n_t + r] / scale)
          << "\"/>\n";
    }
  }
  svg_axes(svg, "theta (deg)", "T (deg)");

  // ticks: at most ~7 per axis
  const auto tick_step = [](int n) { return std::max(1, (n + 6) / 7); };
  std::vector<double> thetas(n_theta), ts(n_t);
  for (const auto& [v, ix] : theta_ix) thetas[ix] = v;
  for (const auto& [v, ix] : t_ix) ts[ix] = v;
  for (int c = 0; c < n_theta; c += tick_step(n_theta)) {
    const double x = kLeft + (c + 0.5) * cw;
    svg << "<text x=\"" << fmt2(x) << "\" y=\"" << fmt2(kTop + kPlotH + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt6g(thetas[c]) << "</text>\n";
  }
  for (int r = 0; r < n_t; r += tick_step(n_t)) {
    const double y = kTop + (n_t - 1 - r + 0.5) * ch;
    svg << "<text x=\"" << fmt2(kLeft - 6) << "\" y=\"" << fmt2(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt6g(ts[r])
        << "</text>\n";
  }

  // color bar
  const double bx = kLeft + kPlotW + 26;
  const int segs = 64;
  for (int s = 0; s < segs; ++s) {
    const double y = kTop + kPlotH * (1.0 - static_cast<double>(s + 1) / segs);
    svg << "<rect x=\"" << fmt2(bx) << "\" y=\"" << fmt2(y) << "\" width=\"18\" height=\""
        << fmt2(kPlotH / segs + 0.5) << "\" fill=\"" << color_at((s + 0.5) / segs) << "\"/>\n";
  }
  svg << "<rect x=\"" << fmt2(bx) << "\" y=\"" << fmt2(kTop) << "\" width=\"18\" height=\""
      << fmt2(kPlotH) << "\" fill=\"none\" stroke=\"black\"/>\n"
      << "<text x=\"" << fmt2(bx + 24) << "\" y=\"" << fmt2(kTop + 10)
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt6g(vmax) << "</text>\n"
      << "<text x=\"" << fmt2(bx + 24) << "\" y=\"" << fmt2(kTop + kPlotH)
      << "\" font-family=\"sans-serif\" font-size=\"11\">0</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string render_line_svg(const std::vector<SweepRecord>& records,
                            const std::vector<std::string>& fields, double theta_deg) {
  if (fields.empty()) throw IoError("line plot: no fields requested");
  static constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c",
                                                       "#9467bd", "#ff7f0e", "#8c564b"};
  std::vector<double SweepRecord::*> members;
  for (const std::string& f : fields) members.push_back(field_member(f));

  std::vector<const SweepRecord*> row;
  for (const SweepRecord& rec : records) {
    if (std::abs(rec.theta_deg - theta_deg) <= 1e-9) row.push_back(&rec);
  }
  if (row.empty()) {
    throw IoError("line plot: no records at theta = " + fmt6g(theta_deg) + " deg");
  }
  std::stable_sort(row.begin(), row.end(),
                   [](const SweepRecord* a, const SweepRecord* b) { return a->T_deg < b->T_deg; });

  double tmin = row.front()->T_deg, tmax = row.back()->T_deg;
  if (tmax == tmin) tmax = tmin + 1.0;
  double vmax = 0.0;
  for (const SweepRecord* rec : row) {
    for (auto member : members) vmax = std::max(vmax, rec->*member);
  }
  if (vmax <= 0.0) vmax = 1.0;

  std::ostringstream svg;
  std::string title = fields[0];
  for (std::size_t f = 1; f < fields.size(); ++f) title += ", " + fields[f];
  svg_open(svg, title + "  (theta = " + fmt6g(theta_deg) + " deg)");
  svg_axes(svg, "T (deg)", "value");

  const auto xpix = [&](double t) { return kLeft + (t - tmin) / (tmax - tmin) * kPlotW; };
  const auto ypix = [&](double v) { return kTop + (1.0 - v / vmax) * kPlotH; };

  for (int g = 0; g <= 4; ++g) {
    const double tv = tmin + (tmax - tmin) * g / 4.0;
    svg << "<text x=\"" << fmt2(xpix(tv)) << "\" y=\"" << fmt2(kTop + kPlotH + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt6g(tv)
        << "</text>\n";
    const double vv = vmax * g / 4.0;
    svg << "<text x=\"" << fmt2(kLeft - 6) << "\" y=\"" << fmt2(ypix(vv) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt6g(vv)
        << "</text>\n";
  }

  for (std::size_t f = 0; f < members.size(); ++f) {
    svg << "<polyline fill=\"none\" stroke=\"" << kPalette[f % kPalette.size()]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const SweepRecord* rec : row) {
      svg << fmt2(xpix(rec->T_deg)) << ',' << fmt2(ypix(rec->*members[f])) << ' ';
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << fmt2(kLeft + kPlotW + 10) << "\" y=\"" << fmt2(kTop + 16 + 18 * f)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
        << kPalette[f % kPalette.size()] << "\">" << fields[f] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ionsim
