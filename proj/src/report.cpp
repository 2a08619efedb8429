#include "cutpoly/report.hpp"

#include <sstream>
#include <stdexcept>

namespace cutpoly {

nlohmann::ordered_json big_value(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::ordered_json polynomial_value(const IntPolynomial& p) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(big_value(c));
  nlohmann::ordered_json j;
  j["coefficients"] = std::move(coeffs);
  j["pretty"] = p.to_string();
  return j;
}

RunReport::RunReport(std::string command, std::string input)
    : command_(std::move(command)), input_(std::move(input)) {}

void RunReport::add(std::string key, std::string route, nlohmann::ordered_json value) {
  entries_.push_back({std::move(key), std::move(route), std::move(value)});
}

void RunReport::add_polynomial(std::string key, std::string route, const IntPolynomial& p) {
  add(std::move(key), std::move(route), polynomial_value(p));
}

void RunReport::verdict(std::string key, std::string route, bool ok) {
  add(std::move(key), std::move(route), ok ? "PASS" : "FAIL");
  if (!ok) exit_code_ = 4;
}

const nlohmann::ordered_json& RunReport::value(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.key == key) return e.value;
  throw std::out_of_range("RunReport: no entry " + key);
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["input"] = input_;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json r;
    r["key"] = e.key;
    r["route"] = e.route;
    r["value"] = e.value;
    results.push_back(std::move(r));
  }
  j["results"] = std::move(results);
  j["exit_code"] = exit_code_;
  return j.dump(2) + "\n";
}

namespace {

std::string render(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("pretty") && v.contains("coefficients"))
    return v["pretty"].get<std::string>() + "  coefficients " + v["coefficients"].dump();
  return v.dump();
}

}  // namespace

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command_ << '\n' << "input: " << input_ << '\n';
  for (const auto& e : entries_) {
    // Matrices and lists of records print one row per line.
    if (e.value.is_array() && !e.value.empty() && e.value.front().is_structured()) {
      os << e.key << " [" << e.route << "]: " << e.value.size() << " rows\n";
      for (const auto& row : e.value) os << "  " << render(row) << '\n';
      continue;
    }
    os << e.key << " [" << e.route << "]: " << render(e.value) << '\n';
  }
  os << "exit_code: " << exit_code_ << '\n';
  return os.str();
}

}  // namespace cutpoly
