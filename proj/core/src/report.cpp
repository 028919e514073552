#include "fpd/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fpd {

std::string format_decimal(long double value, int digits) {
  if (std::fabs(value) < 0.5L * std::pow(10.0L, -digits)) value = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, value);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string format_bound(long double bound) {
  if (bound == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Le", bound);
  return buf;
}

nlohmann::json spec_to_json(const BoundAlgebraSpec& spec) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : spec.quiver().arrows())
    arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  return {{"vertices", spec.vertex_count()},
          {"arrows", arrows},
          {"loop_counts", spec.loop_counts()},
          {"relations", "rad2"}};
}

nlohmann::json to_json(const SpectralRadius& rho) {
  nlohmann::json j{{"value", format_decimal(rho.value)}, {"bound", format_bound(rho.bound)}};
  if (rho.exact) j["exact"] = rho.exact->to_string();
  return j;
}

namespace {

nlohmann::json matrix_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

std::string value_string(const FpdValue& v) {
  if (std::holds_alternative<NegativeInfinity>(v)) return "-inf";
  const auto& rho = std::get<SpectralRadius>(v);
  return rho.exact ? rho.exact->to_string() : format_decimal(rho.value);
}

}  // namespace

nlohmann::json to_json(const FpdReport& report) {
  nlohmann::json bricks = nlohmann::json::array();
  for (const auto& b : report.bricks)
    bricks.push_back({{"name", b.name}, {"dim_vector", b.dim_vector}});

  nlohmann::json sets = nlohmann::json::array();
  for (const auto& s : report.maximal_sets) {
    nlohmann::json j{{"indices", s.indices},
                     {"adjacency", matrix_json(s.adjacency)},
                     {"rho", format_decimal(s.rho.value)},
                     {"rho_bound", format_bound(s.rho.bound)}};
    if (s.rho.exact) j["rho_exact"] = s.rho.exact->to_string();
    sets.push_back(std::move(j));
  }

  nlohmann::json fpd_n = nlohmann::json::array();
  for (const auto& e : report.fpd_n) fpd_n.push_back({{"n", e.n}, {"value", value_string(e.value)}});

  nlohmann::json j{{"spec", spec_to_json(report.spec)},
                   {"bricks", bricks},
                   {"hom_matrix", report.hom},
                   {"ext_matrix", report.ext},
                   {"maximal_brick_sets", sets},
                   {"fpd", to_json(report.fpd)},
                   {"fpd_n", fpd_n},
                   {"completeness", to_string(report.completeness)}};
  if (report.closed_form) {
    const auto& c = *report.closed_form;
    j["closed_form"] = {{"expected", c.expected.to_string()},
                        {"expected_value", format_decimal(c.expected.to_long_double())},
                        {"match", c.match},
                        {"delta", format_bound(c.delta)}};
  }
  return j;
}

std::string render_json(const FpdReport& report) { return to_json(report).dump(2) + "\n"; }

namespace {

void labelled_matrix(std::ostream& out, const std::vector<std::string>& labels,
                     const DimMatrix& m) {
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  for (const auto& row : m)
    for (auto x : row) width = std::max(width, std::to_string(x).size());
  auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  out << "  " << pad("");
  for (const auto& l : labels) out << ' ' << pad(l);
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << "  " << pad(labels[i]);
    for (auto x : m[i]) out << ' ' << pad(std::to_string(x));
    out << '\n';
  }
}

std::string rho_text(const SpectralRadius& rho) {
  if (rho.exact && rho.exact->is_rational()) return rho.exact->to_string();
  if (rho.exact) return rho.exact->to_string() + " = " + format_decimal(rho.value);
  return format_decimal(rho.value) + " +/- " + format_bound(rho.bound);
}

}  // namespace

std::string render_text(const FpdReport& report) {
  std::ostringstream out;
  const auto& spec = report.spec;
  out << "algebra: " << spec.vertex_count() << " vertices, " << spec.arrow_count()
      << " arrows, relations rad2\n";
  out << "loop counts:";
  for (auto c : spec.loop_counts()) out << ' ' << c;
  out << "\n\nbricks (" << report.bricks.size() << ", " << to_string(report.completeness)
      << "):\n";
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < report.bricks.size(); ++i) {
    const auto& b = report.bricks[i];
    labels.push_back(b.name);
    out << "  [" << i << "] " << b.name << "  dim";
    for (auto d : b.dim_vector) out << ' ' << d;
    out << '\n';
  }
  out << "\nHom dimensions (row X, column Y: dim Hom(X, Y)):\n";
  labelled_matrix(out, labels, report.hom);
  out << "\nExt^1 dimensions (row X, column Y: dim Ext^1(X, Y)):\n";
  labelled_matrix(out, labels, report.ext);

  out << "\nmaximal brick sets (" << report.maximal_sets.size() << "):\n";
  for (const auto& s : report.maximal_sets) {
    out << "  {";
    for (std::size_t k = 0; k < s.indices.size(); ++k)
      out << (k ? ", " : "") << labels[s.indices[k]];
    out << "}  rho = " << rho_text(s.rho) << "\n    adjacency " << s.adjacency << '\n';
  }

  out << "\nfpd = " << rho_text(report.fpd) << '\n';
  out << "fpd^n:";
  for (const auto& e : report.fpd_n) out << "  n=" << e.n << ": " << value_string(e.value);
  out << '\n';
  if (report.closed_form) {
    const auto& c = *report.closed_form;
    out << "closed form: " << c.expected.to_string();
    if (!c.expected.is_rational()) out << " = " << format_decimal(c.expected.to_long_double());
    out << "  match: "
        << (c.match ? "true" : "false") << "  |delta| = " << format_bound(c.delta) << '\n';
  }
  return out.str();
}

}  // namespace fpd
