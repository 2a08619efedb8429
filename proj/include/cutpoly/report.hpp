#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "cutpoly/polynomial.hpp"

namespace cutpoly {

/// Outcome of one CLI command. Every entry names the route that produced it
/// ("semigroup", "lp", "closed-form", "gb-f-vector", ...). The JSON and text
/// renderings are generated from the same entries.
class RunReport {
public:
  struct Entry {
    std::string key;
    std::string route;
    nlohmann::ordered_json value;
  };

  RunReport(std::string command, std::string input);

  void add(std::string key, std::string route, nlohmann::ordered_json value);
  void add_polynomial(std::string key, std::string route, const IntPolynomial& p);
  /// Records a PASS/FAIL verdict; a FAIL sets the exit code to 4.
  void verdict(std::string key, std::string route, bool ok);

  void set_command(std::string command) { command_ = std::move(command); }

  const std::vector<Entry>& entries() const { return entries_; }
  const nlohmann::ordered_json& value(const std::string& key) const;
  int exit_code() const { return exit_code_; }

  std::string to_json() const;
  std::string to_text() const;

private:
  std::string command_;
  std::string input_;
  std::vector<Entry> entries_;
  int exit_code_ = 0;
};

nlohmann::ordered_json polynomial_value(const IntPolynomial& p);
nlohmann::ordered_json big_value(const BigInt& v);

}  // namespace cutpoly
