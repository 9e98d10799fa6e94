#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ospbi {

/// One named verification. `residual_terms` is the number of surviving terms
/// of the residual (0 means the identity holds exactly); `detail` carries a
/// term dump for failures.
struct Check {
  std::string name;
  bool passed = false;
  std::size_t residual_terms = 0;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool all_passed() const;
  std::size_t failures() const;
  const Check* find(const std::string& name) const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other, const std::string& prefix = {});

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

} // namespace ospbi
