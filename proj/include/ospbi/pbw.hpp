#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ospbi/linear_combination.hpp"
#include "ospbi/rational.hpp"
#include "ospbi/report.hpp"

namespace ospbi {

/// Letters of U(osp(1|2)) extended by the grade involution, listed in PBW
/// order: Em < Fm < H < Fp < Ep < P.
enum class Generator : std::uint8_t { Em, Fm, H, Fp, Ep, P };

inline constexpr std::array<Generator, 6> all_generators{
    Generator::Em, Generator::Fm, Generator::H, Generator::Fp, Generator::Ep, Generator::P};

constexpr bool is_odd(Generator g) { return g == Generator::Fm || g == Generator::Fp; }

/// Short ASCII name used by the parser and printer ("Em", "Fm", "H", ...).
std::string_view name(Generator g);
std::optional<Generator> generator_from_name(std::string_view s);

/// Ordered word Em^a Fm^dm H^b Fp^dp Ep^c P^e. The odd letters and P never
/// exceed exponent 1 because Fp^2 = Ep/4, Fm^2 = -Em/4 and P^2 = 1.
struct PBWMonomial {
  std::uint16_t em = 0;
  std::uint8_t fm = 0;
  std::uint16_t h = 0;
  std::uint8_t fp = 0;
  std::uint16_t ep = 0;
  std::uint8_t p = 0;

  static PBWMonomial unit() { return {}; }
  static PBWMonomial of(Generator g);

  /// Exponent of letter g.
  unsigned exponent(Generator g) const;
  unsigned degree() const { return em + fm + h + fp + ep; }
  unsigned parity() const { return (fm + fp) % 2u; }
  bool is_unit() const { return *this == PBWMonomial{}; }

  /// The monomial spelled out as a word in PBW order.
  std::vector<Generator> word() const;

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

using PBWElement = LinearCombination<PBWMonomial>;

PBWElement one();
PBWElement scalar(const Rational& q);
PBWElement generator(Generator g);

/// Product of two PBW monomials brought to normal form.
PBWElement multiply(const PBWMonomial& x, const PBWMonomial& y);
PBWElement multiply(const PBWElement& x, const PBWElement& y);

/// Normal form of an arbitrary word of letters (left to right).
PBWElement normal_form(const std::vector<Generator>& word);

/// Sum of c_i * x_i.
PBWElement linear_combine(const std::vector<std::pair<Rational, PBWElement>>& terms);

enum class BracketKind { commutator, anticommutator };

/// xy - yx or xy + yx.
PBWElement bracket(const PBWElement& x, const PBWElement& y, BracketKind kind);

/// C = 8[Fp,Fm]P + P in normal form.
const PBWElement& casimir();

/// Residual of every defining relation of the algebra (each entry must be the
/// zero element).
Report check_defining_relations();

/// Elementwise relation residuals, exposed so the report and callers agree on
/// what each relation says.
struct Relation {
  std::string name;
  PBWElement residual;
};
std::vector<Relation> defining_relation_residuals();

std::string to_string(const PBWMonomial& m);
std::string to_string(const PBWElement& x);

inline PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
inline PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
inline PBWElement operator-(PBWElement a) { return a *= Rational(-1); }
inline PBWElement operator*(const PBWElement& a, const PBWElement& b) { return multiply(a, b); }
inline PBWElement operator*(const Rational& s, PBWElement a) { return a *= s; }
inline PBWElement operator*(PBWElement a, const Rational& s) { return a *= s; }

inline PBWElement commutator(const PBWElement& a, const PBWElement& b) {
  return bracket(a, b, BracketKind::commutator);
}
inline PBWElement anticommutator(const PBWElement& a, const PBWElement& b) {
  return bracket(a, b, BracketKind::anticommutator);
}

} // namespace ospbi
