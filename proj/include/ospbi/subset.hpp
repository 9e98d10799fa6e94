#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ospbi {

/// Sorted subset A of [n] = {1, ..., n}. The empty subset labels the unit.
class SubsetIndex {
public:
  SubsetIndex() = default;
  /// Sorts and deduplicates; throws IndexError for elements outside [1, n].
  SubsetIndex(std::size_t n, std::vector<std::size_t> elements);

  static SubsetIndex range(std::size_t n, std::size_t first, std::size_t last);
  static SubsetIndex full(std::size_t n) { return range(n, 1, n); }
  /// All subsets of [n] including the empty one, ordered by size then lexicographically.
  static std::vector<SubsetIndex> all(std::size_t n);

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(std::size_t i) const;
  /// Consecutive integers (the empty set counts as contiguous).
  bool contiguous() const;
  std::size_t front() const { return elements_.front(); }
  std::size_t back() const { return elements_.back(); }

  SubsetIndex operator|(const SubsetIndex& o) const;
  SubsetIndex operator&(const SubsetIndex& o) const;
  /// Set difference.
  SubsetIndex operator-(const SubsetIndex& o) const;
  /// Symmetric difference.
  SubsetIndex operator^(const SubsetIndex& o) const;

  /// "{1,3}", or "{}" for the empty set.
  std::string to_string() const;
  /// Parses "1,3" (braces optional); empty string gives the empty set.
  static SubsetIndex parse(std::size_t n, const std::string& text);

  friend auto operator<=>(const SubsetIndex&, const SubsetIndex&) = default;
  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::size_t> elements_;
};

} // namespace ospbi
