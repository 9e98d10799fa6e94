#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ospbi/linear_combination.hpp"
#include "ospbi/pbw.hpp"

namespace ospbi {

class Permutation;

/// One PBW monomial per leg. Leg 1 is the leftmost tensor factor.
struct TensorMonomial {
  std::vector<PBWMonomial> legs;

  std::size_t arity() const { return legs.size(); }
  friend auto operator<=>(const TensorMonomial&, const TensorMonomial&) = default;
  friend bool operator==(const TensorMonomial&, const TensorMonomial&) = default;
};

/// Element of U^{(x)n} for the ordinary (unsigned) tensor product.
///
/// There are no Koszul signs anywhere: (a(x)b)(c(x)d) = ac (x) bd. The
/// Z2-grading is carried by the grade involution P itself, which the coproduct
/// inserts explicitly (Delta(F) = F(x)P + 1(x)F). Every formula in this library
/// relies on that convention.
class TensorElement {
public:
  using Terms = LinearCombination<TensorMonomial>;

  /// Zero element of the given arity.
  explicit TensorElement(std::size_t arity = 1);
  TensorElement(std::size_t arity, Terms terms);

  /// Arity-1 element identified with x.
  static TensorElement from_pbw(const PBWElement& x);
  /// Unit 1(x)...(x)1.
  static TensorElement unit(std::size_t arity);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  void add(const TensorMonomial& m, const Rational& c);

  /// Arity-1 elements only; throws ArityError otherwise.
  PBWElement to_pbw() const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& s);

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

private:
  std::size_t arity_;
  Terms terms_;
};

/// Factor-wise product; throws ArityError on mismatch.
TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y);

/// x (x) y, arity adds up.
TensorElement outer(const TensorElement& x, const TensorElement& y);

/// x placed on leg i (1-based) of an arity-n unit.
TensorElement embed(const PBWElement& x, std::size_t i, std::size_t n);
inline TensorElement embed(Generator g, std::size_t i, std::size_t n) { return embed(generator(g), i, n); }

/// Coproduct; with `opposite` the two legs are swapped.
TensorElement coproduct(const PBWElement& x, bool opposite = false);
TensorElement coproduct(const PBWMonomial& m);

/// Iterated coproduct, Delta^(0) = id and Delta^(k) = (id (x) Delta^(k-1)) Delta.
TensorElement coproduct_iter(std::size_t k, const PBWElement& x);
TensorElement coproduct_iter(std::size_t k, const PBWMonomial& m);

/// Entry of a positional plan: Delta^(k) on one leg (k = 0 is the identity).
struct LegMap {
  std::size_t k = 0;
  static LegMap identity() { return {0}; }
  static LegMap delta(std::size_t k = 1) { return {k}; }
};

/// Applies plan[i] to leg i; output arity is the sum of (k_i + 1).
TensorElement apply_positional(const TensorElement& x, const std::vector<LegMap>& plan);

/// Replaces every leg monomial m on leg `leg` by f(m), which may have any arity.
TensorElement map_leg(const TensorElement& x, std::size_t leg,
                      const std::function<TensorElement(const PBWMonomial&)>& f);

/// Moves the content of leg i to leg s(i). No signs.
TensorElement permute_factors(const TensorElement& x, const Permutation& s);
/// Same, with s given in one-line notation (images[i-1] = s(i)).
TensorElement permute_factors(const TensorElement& x, const std::vector<std::size_t>& images);

/// Inserts a unit leg so that it becomes leg `pos` (1 <= pos <= n+1).
TensorElement insert_unit(const TensorElement& x, std::size_t pos);

TensorElement commutator(const TensorElement& a, const TensorElement& b);
TensorElement anticommutator(const TensorElement& a, const TensorElement& b);

std::string to_string(const TensorMonomial& m);
std::string to_string(const TensorElement& x);

inline TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
inline TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
inline TensorElement operator-(TensorElement a) { return a *= Rational(-1); }
inline TensorElement operator*(const TensorElement& a, const TensorElement& b) { return tensor_multiply(a, b); }
inline TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }
inline TensorElement operator*(TensorElement a, const Rational& s) { return a *= s; }

} // namespace ospbi
