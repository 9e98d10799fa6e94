#include "ospbi/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ospbi/errors.hpp"
#include "ospbi/subset.hpp"

namespace ospbi {

Permutation::Permutation(std::size_t n, std::vector<std::size_t> word) : n_(n), word_(std::move(word)) {
  for (auto i : word_)
    if (i < 1 || i + 1 > n_)
      throw IndexError("transposition s_" + std::to_string(i) + " is not defined in S_" + std::to_string(n_));
}

Permutation Permutation::from_images(const std::vector<std::size_t>& images) {
  const std::size_t n = images.size();
  {
    std::vector<std::size_t> sorted = images, iota(n);
    std::sort(sorted.begin(), sorted.end());
    std::iota(iota.begin(), iota.end(), std::size_t{1});
    if (sorted != iota) throw ContractError("one-line notation is not a permutation of [n]");
  }
  // position[v] = j with images[j-1] = v
  std::vector<std::size_t> cur = images, word;
  for (;;) {
    std::vector<std::size_t> position(n + 1);
    for (std::size_t j = 0; j < n; ++j) position[cur[j]] = j;
    std::size_t i = 1;
    while (i < n && position[i] < position[i + 1]) ++i;
    if (i >= n) break;
    // cur = s_i o rest  =>  rest = s_i o cur (swap values i and i+1)
    word.push_back(i);
    std::swap(cur[position[i]], cur[position[i + 1]]);
  }
  return Permutation(n, std::move(word));
}

Permutation Permutation::shuffle(const SubsetIndex& from, const SubsetIndex& to) {
  if (from.n() != to.n()) throw ArityError("shuffle between subsets of different ambient sets");
  if (from.size() != to.size()) throw ContractError("shuffle between subsets of different sizes");
  const std::size_t n = from.n();
  std::vector<std::size_t> images(n);
  for (std::size_t j = 0; j < from.size(); ++j) images[from.elements()[j] - 1] = to.elements()[j];
  std::vector<std::size_t> rest_from, rest_to;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!from.contains(i)) rest_from.push_back(i);
    if (!to.contains(i)) rest_to.push_back(i);
  }
  for (std::size_t j = 0; j < rest_from.size(); ++j) images[rest_from[j] - 1] = rest_to[j];
  return from_images(images);
}

std::size_t Permutation::operator()(std::size_t j) const {
  if (j < 1 || j > n_) throw IndexError("point " + std::to_string(j) + " outside [1, " + std::to_string(n_) + "]");
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    if (j == *it)
      j = *it + 1;
    else if (j == *it + 1)
      j = *it;
  }
  return j;
}

std::vector<std::size_t> Permutation::images() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t j = 1; j <= n_; ++j) out[j - 1] = (*this)(j);
  return out;
}

SubsetIndex Permutation::apply(const SubsetIndex& a) const {
  if (a.n() != n_) throw ArityError("permutation and subset live on different ambient sets");
  std::vector<std::size_t> e;
  for (auto j : a.elements()) e.push_back((*this)(j));
  return SubsetIndex(n_, std::move(e));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.n_ != n_) throw ArityError("composing permutations of different degree");
  std::vector<std::size_t> w = word_;
  w.insert(w.end(), other.word_.begin(), other.word_.end());
  return Permutation(n_, std::move(w));
}

Permutation Permutation::inverse() const {
  return Permutation(n_, std::vector<std::size_t>(word_.rbegin(), word_.rend()));
}

std::string Permutation::to_string() const {
  if (word_.empty()) return "id";
  std::string s;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) s += ' ';
    s += "s" + std::to_string(word_[k]);
  }
  return s;
}

} // namespace ospbi
