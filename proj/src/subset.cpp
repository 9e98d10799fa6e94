#include "ospbi/subset.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "ospbi/errors.hpp"

namespace ospbi {

namespace {

void check_same_n(const SubsetIndex& a, const SubsetIndex& b) {
  if (a.n() != b.n())
    throw ArityError("subsets of [" + std::to_string(a.n()) + "] and [" + std::to_string(b.n()) +
                     "] cannot be combined");
}

} // namespace

SubsetIndex::SubsetIndex(std::size_t n, std::vector<std::size_t> elements) : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (auto e : elements_)
    if (e < 1 || e > n_)
      throw IndexError("subset element " + std::to_string(e) + " outside [1, " + std::to_string(n_) + "]");
}

SubsetIndex SubsetIndex::range(std::size_t n, std::size_t first, std::size_t last) {
  std::vector<std::size_t> e;
  for (std::size_t i = first; i <= last; ++i) e.push_back(i);
  return SubsetIndex(n, std::move(e));
}

std::vector<SubsetIndex> SubsetIndex::all(std::size_t n) {
  std::vector<SubsetIndex> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> e;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) e.push_back(i + 1);
    out.emplace_back(n, std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const SubsetIndex& a, const SubsetIndex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return out;
}

bool SubsetIndex::contains(std::size_t i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

bool SubsetIndex::contiguous() const {
  return elements_.empty() || elements_.back() - elements_.front() + 1 == elements_.size();
}

SubsetIndex SubsetIndex::operator|(const SubsetIndex& o) const {
  check_same_n(*this, o);
  std::vector<std::size_t> r;
  std::set_union(elements_.begin(), elements_.end(), o.elements_.begin(), o.elements_.end(), std::back_inserter(r));
  return SubsetIndex(n_, std::move(r));
}

SubsetIndex SubsetIndex::operator&(const SubsetIndex& o) const {
  check_same_n(*this, o);
  std::vector<std::size_t> r;
  std::set_intersection(elements_.begin(), elements_.end(), o.elements_.begin(), o.elements_.end(),
                        std::back_inserter(r));
  return SubsetIndex(n_, std::move(r));
}

SubsetIndex SubsetIndex::operator-(const SubsetIndex& o) const {
  check_same_n(*this, o);
  std::vector<std::size_t> r;
  std::set_difference(elements_.begin(), elements_.end(), o.elements_.begin(), o.elements_.end(),
                      std::back_inserter(r));
  return SubsetIndex(n_, std::move(r));
}

SubsetIndex SubsetIndex::operator^(const SubsetIndex& o) const {
  check_same_n(*this, o);
  std::vector<std::size_t> r;
  std::set_symmetric_difference(elements_.begin(), elements_.end(), o.elements_.begin(), o.elements_.end(),
                                std::back_inserter(r));
  return SubsetIndex(n_, std::move(r));
}

std::string SubsetIndex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elements_[i]);
  }
  return s + "}";
}

SubsetIndex SubsetIndex::parse(std::size_t n, const std::string& text) {
  std::vector<std::size_t> e;
  std::string digits;
  const auto flush = [&] {
    if (!digits.empty()) e.push_back(std::stoul(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',' || c == ' ') {
      flush();
    } else if (c != '{' && c != '}') {
      throw ContractError("invalid character '" + std::string(1, c) + "' in subset \"" + text + "\"");
    }
  }
  flush();
  return SubsetIndex(n, std::move(e));
}

} // namespace ospbi
