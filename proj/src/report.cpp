#include "ospbi/report.hpp"

#include <algorithm>
#include <sstream>

namespace ospbi {

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Check c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "# " << title << '\n';
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) os << "  (residual terms: " << c.residual_terms << ")";
    os << '\n';
    if (!c.passed && !c.detail.empty()) os << "     residual: " << c.detail << '\n';
  }
  os << (all_passed() ? "all " : "") << (checks.size() - failures()) << "/" << checks.size()
     << " checks passed\n";
  return os.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["report"] = title;
  j["passed"] = all_passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = c.passed ? "pass" : "fail";
    e["residual_terms"] = c.residual_terms;
    if (!c.detail.empty()) e["residual"] = c.detail;
    arr.push_back(std::move(e));
  }
  return j;
}

} // namespace ospbi
