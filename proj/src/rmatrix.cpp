#include "ospbi/rmatrix.hpp"

#include <random>
#include <string>

#include "ospbi/errors.hpp"
#include "ospbi/random.hpp"

namespace ospbi {

namespace {

std::string leg_pair(std::size_t i, std::size_t j) { return std::to_string(i) + std::to_string(j); }

void check_zero(Report& r, std::string name, const TensorElement& residual) {
  r.add({std::move(name), residual.is_zero(), residual.size(), residual.is_zero() ? "" : to_string(residual)});
}

void check_equal(Report& r, std::string name, const TensorElement& lhs, const TensorElement& rhs) {
  if (lhs.arity() != rhs.arity()) {
    r.add({std::move(name), false, 0, "arity mismatch"});
    return;
  }
  check_zero(r, std::move(name), lhs - rhs);
}

std::string gname(Generator g) { return std::string(name(g)); }

} // namespace

TensorElement universal_R(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw IndexError("R_" + leg_pair(i, j) + " is not defined in arity " + std::to_string(n));
  const TensorElement Pi = embed(Generator::P, i, n), Pj = embed(Generator::P, j, n);
  TensorElement r = TensorElement::unit(n) + Pi + Pj - Pi * Pj;
  r *= Rational(1, 2);
  return r;
}

TensorElement universal_R_inverse(std::size_t n, std::size_t i, std::size_t j) {
  // R^2 = 1 (verified in verify_r_properties).
  return universal_R(n, i, j);
}

TensorElement braided_conjugate(std::size_t i, const TensorElement& x) {
  const std::size_t n = x.arity();
  if (i < 1 || i + 1 > n) throw IndexError("braided R_" + std::to_string(i) + " needs arity > " + std::to_string(i));
  return universal_R(n, i, i + 1) * permute_factors(x, Permutation(n, {i})) * universal_R_inverse(n, i, i + 1);
}

TensorElement gamma(const Permutation& s, const TensorElement& x) {
  if (s.n() != x.arity())
    throw ArityError("gamma: permutation of degree " + std::to_string(s.n()) + " on arity " +
                     std::to_string(x.arity()));
  TensorElement out = x;
  for (auto it = s.word().rbegin(); it != s.word().rend(); ++it) out = braided_conjugate(*it, out);
  return out;
}

TensorElement coaction(const PBWElement& x, CoactionSide side) {
  const TensorElement placed = side == CoactionSide::hat ? embed(x, 2, 2) : embed(x, 1, 2);
  return universal_R_inverse(2, 1, 2) * placed * universal_R(2, 1, 2);
}

TensorElement apply_coaction(const TensorElement& x, std::size_t leg, CoactionSide side) {
  return map_leg(x, leg, [side](const PBWMonomial& m) { return coaction(PBWElement(m), side); });
}

Report verify_r_properties(std::size_t n) {
  if (n < 2 || n > 4) throw ContractError("verify_r_properties supports arity 2..4, got " + std::to_string(n));
  Report r{"R-matrix properties (n=" + std::to_string(n) + ")", {}};

  // Delta(x) R = R Delta^op(x)
  const TensorElement R = universal_R(2, 1, 2);
  for (Generator g : all_generators)
    check_equal(r, "Delta(" + gname(g) + ") R = R Delta^op(" + gname(g) + ")", coproduct(generator(g)) * R,
                R * coproduct(generator(g), true));
  check_equal(r, "Delta(C) R = R Delta^op(C)", coproduct(casimir()) * R, R * coproduct(casimir(), true));

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const TensorElement Rij = universal_R(n, i, j);
      check_equal(r, "R" + leg_pair(i, j) + "^2 = 1", Rij * Rij, TensorElement::unit(n));
      check_equal(r, "R" + leg_pair(i, j) + " R" + leg_pair(i, j) + "^-1 = 1", Rij * universal_R_inverse(n, i, j),
                  TensorElement::unit(n));
      check_equal(r, "R" + leg_pair(j, i) + " = R" + leg_pair(i, j), universal_R(n, j, i), Rij);
    }
  }

  if (n >= 3) {
    check_equal(r, "(id x Delta) R = R12 R13", apply_positional(R, {LegMap::identity(), LegMap::delta()}),
                universal_R(3, 1, 2) * universal_R(3, 1, 3));
    check_equal(r, "(Delta x id) R = R23 R13", apply_positional(R, {LegMap::delta(), LegMap::identity()}),
                universal_R(3, 2, 3) * universal_R(3, 1, 3));
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        for (std::size_t k = j + 1; k <= n; ++k) {
          const TensorElement Rij = universal_R(n, i, j), Rik = universal_R(n, i, k), Rjk = universal_R(n, j, k);
          const std::string tag = std::to_string(i) + std::to_string(j) + std::to_string(k);
          check_equal(r, "Yang-Baxter (" + tag + ")", Rij * Rik * Rjk, Rjk * Rik * Rij);
          check_zero(r, "[R" + leg_pair(i, j) + ",R" + leg_pair(i, k) + "] = 0", commutator(Rij, Rik));
        }
      }
    }
  }

  // Braided R commutes with the diagonal action; braided Yang-Baxter as word
  // equivalence of gamma; Rc_i^2 = 1.
  std::mt19937_64 rng(0x05B1u + n);
  for (std::size_t i = 1; i < n; ++i) {
    for (Generator g : all_generators) {
      const TensorElement d = coproduct_iter(n - 1, generator(g));
      check_equal(r, "gamma_s" + std::to_string(i) + "(Delta^(n-1)(" + gname(g) + ")) = Delta^(n-1)(" + gname(g) + ")",
                  gamma(Permutation(n, {i}), d), d);
    }
    const TensorElement x = random_tensor(rng, n, {4, 2, 5});
    check_equal(r, "gamma_s" + std::to_string(i) + "s" + std::to_string(i) + " = id on random X",
                gamma(Permutation(n, {i, i}), x), x);
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (int sample = 0; sample < 3; ++sample) {
      const TensorElement x = random_tensor(rng, n, {4, 2, 5});
      check_equal(r,
                  "braided Yang-Baxter s" + std::to_string(i) + "s" + std::to_string(i + 1) + "s" + std::to_string(i) +
                      " ~ s" + std::to_string(i + 1) + "s" + std::to_string(i) + "s" + std::to_string(i + 1) +
                      " (sample " + std::to_string(sample + 1) + ")",
                  gamma(Permutation(n, {i, i + 1, i}), x), gamma(Permutation(n, {i + 1, i, i + 1}), x));
    }
  }

  // Coaction laws.
  std::vector<std::pair<std::string, PBWElement>> probes;
  for (Generator g : all_generators) probes.emplace_back(gname(g), generator(g));
  probes.emplace_back("C", casimir());
  for (const auto& [label, x] : probes) {
    const TensorElement th = coaction(x, CoactionSide::hat);
    check_equal(r, "(id x tau_hat) tau_hat(" + label + ") = (Delta x id) tau_hat(" + label + ")",
                apply_coaction(th, 2, CoactionSide::hat),
                apply_positional(th, {LegMap::delta(), LegMap::identity()}));
    const TensorElement tc = coaction(x, CoactionSide::check);
    check_equal(r, "(tau_check x id) tau_check(" + label + ") = (id x Delta) tau_check(" + label + ")",
                apply_coaction(tc, 1, CoactionSide::check),
                apply_positional(tc, {LegMap::identity(), LegMap::delta()}));
  }
  return r;
}

} // namespace ospbi
