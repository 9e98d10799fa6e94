#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ospbi {

class SubsetIndex;

/// Element of S_n written as a word s_{i1} s_{i2} ... s_{ip} in adjacent
/// transpositions. As a map on points the rightmost letter acts first, so
/// s(j) = s_{i1}(s_{i2}(...s_{ip}(j))).
class Permutation {
public:
  explicit Permutation(std::size_t n, std::vector<std::size_t> word = {});

  /// Canonical reduced word for a permutation given in one-line notation
  /// (images[j-1] = s(j)). Repeatedly peels off the smallest s_i whose values
  /// i, i+1 are inverted.
  static Permutation from_images(const std::vector<std::size_t>& images);

  /// Minimal-length permutation sending the sorted elements of `from` to the
  /// sorted elements of `to` (and the complements likewise, order preserved).
  static Permutation shuffle(const SubsetIndex& from, const SubsetIndex& to);

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }

  /// s(j) for 1 <= j <= n.
  std::size_t operator()(std::size_t j) const;
  std::vector<std::size_t> images() const;
  SubsetIndex apply(const SubsetIndex& a) const;

  /// Word concatenation: (this * other)(j) = this(other(j)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  /// True when both words represent the same permutation.
  bool same_permutation(const Permutation& other) const { return images() == other.images(); }

  std::string to_string() const;

private:
  std::size_t n_;
  std::vector<std::size_t> word_;
};

} // namespace ospbi
