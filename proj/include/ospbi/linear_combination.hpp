#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "ospbi/rational.hpp"

namespace ospbi {

/// Finite formal sum of keys with rational coefficients. Zero coefficients are
/// never stored, so two combinations are equal iff their maps are equal.
/// Iteration follows the key ordering, which gives deterministic printing.
template <class Key>
class LinearCombination {
public:
  using Map = std::map<Key, Rational>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;
  LinearCombination(const Key& key, Rational coeff = 1) { add(key, std::move(coeff)); }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  LinearCombination& operator+=(const LinearCombination& o) { add(o); return *this; }
  LinearCombination& operator-=(const LinearCombination& o) { add(o, Rational(-1)); return *this; }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }

  /// Coefficient of `key`, zero when absent.
  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
  Map terms_;
};

} // namespace ospbi
