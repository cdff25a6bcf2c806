#include "pentaperiod/report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pentaperiod/errors.hpp"

namespace pentaperiod {

nlohmann::json to_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

namespace {

nlohmann::json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["test"] = r.name;
  j["samples"] = r.samples;
  j["pass"] = r.pass;
  j["tolerance"] = r.tolerance;
  j["max_deviation"] = finite_or_null(r.max_deviation);
  nlohmann::json dev = nlohmann::json::array();
  for (double d : r.deviations) dev.push_back(finite_or_null(d));
  j["deviations"] = dev;
  j["metadata"] = r.metadata;
  j["details"] = r.details;
  if (r.matrix.size() > 0) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index k = 0; k < r.matrix.cols(); ++k) row.push_back(finite_or_null(r.matrix(i, k)));
      rows.push_back(row);
    }
    j["matrix"] = {{"rows", r.row_labels}, {"cols", r.col_labels}, {"values", rows}};
  }
  return j;
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os.precision(17);
  if (r.matrix.size() > 0) {
    os << "label";
    for (Eigen::Index k = 0; k < r.matrix.cols(); ++k)
      os << "," << (static_cast<std::size_t>(k) < r.col_labels.size() ? r.col_labels[static_cast<std::size_t>(k)] : "c" + std::to_string(k));
    os << "\n";
    for (Eigen::Index i = 0; i < r.matrix.rows(); ++i) {
      os << (static_cast<std::size_t>(i) < r.row_labels.size() ? r.row_labels[static_cast<std::size_t>(i)] : "r" + std::to_string(i));
      for (Eigen::Index k = 0; k < r.matrix.cols(); ++k) os << "," << r.matrix(i, k);
      os << "\n";
    }
  } else {
    os << "sample,deviation\n";
    for (std::size_t i = 0; i < r.deviations.size(); ++i) os << i << "," << r.deviations[i] << "\n";
  }
  return os.str();
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw InvalidInput("unknown format: " + s);
}

void emit(const std::string& text, const std::string& path, std::ostream& os) {
  if (path.empty()) {
    os << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open output file: " + path);
  f << text;
  if (!f) throw InvalidInput("write failed: " + path);
}

void write_report(const VerificationReport& r, OutputFormat f, const std::string& path, std::ostream& os) {
  emit(f == OutputFormat::json ? to_json(r).dump(2) + "\n" : to_csv(r), path, os);
}

}  // namespace pentaperiod
