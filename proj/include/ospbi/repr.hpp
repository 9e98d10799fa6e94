#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "ospbi/errors.hpp"
#include "ospbi/pbw.hpp"
#include "ospbi/permutation.hpp"
#include "ospbi/rational.hpp"
#include "ospbi/report.hpp"
#include "ospbi/subset.hpp"
#include "ospbi/tensor.hpp"

namespace ospbi {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Default residual tolerance: exact for rationals, 1e-12 for floating point.
template <class Scalar>
constexpr double default_tolerance() {
  return std::is_floating_point_v<Scalar> ? 1e-12 : 0.0;
}

template <class Scalar>
double to_double(const Scalar& x) {
  if constexpr (std::is_floating_point_v<Scalar>)
    return static_cast<double>(x);
  else
    return x.template convert_to<double>();
}

/// Largest |entry|; zero for an empty matrix.
template <class Derived>
typename Derived::Scalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  S best(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const S a = m(i, j) < S(0) ? S(-m(i, j)) : S(m(i, j));
      if (a > best) best = a;
    }
  return best;
}

template <class Scalar>
bool within_tolerance(const Scalar& norm, double tolerance) {
  if (tolerance == 0.0) return norm == Scalar(0);
  return to_double(norm) <= tolerance;
}

/// Finite-dimensional representation of osp(1|2) with grade involution.
/// Matrices are indexed by Generator; P must equal diag(grading).
template <class Scalar>
struct MatrixRep {
  std::size_t dim = 0;
  std::vector<int> grading;
  std::array<Matrix<Scalar>, 6> matrices;

  const Matrix<Scalar>& operator[](Generator g) const { return matrices[static_cast<std::size_t>(g)]; }
  Matrix<Scalar>& operator[](Generator g) { return matrices[static_cast<std::size_t>(g)]; }

  template <class Other>
  MatrixRep<Other> cast() const {
    MatrixRep<Other> out{dim, grading, {}};
    for (std::size_t k = 0; k < 6; ++k) {
      out.matrices[k].resize(matrices[k].rows(), matrices[k].cols());
      for (Eigen::Index i = 0; i < matrices[k].rows(); ++i)
        for (Eigen::Index j = 0; j < matrices[k].cols(); ++j) {
          if constexpr (std::is_floating_point_v<Other>)
            out.matrices[k](i, j) = to_double(matrices[k](i, j));
          else
            out.matrices[k](i, j) = Other(matrices[k](i, j));
        }
    }
    return out;
  }
};

/// Three-dimensional representation: basis (v+, v0, v-) with H-weights
/// (1/2, 0, -1/2), grading (+1, -1, +1). All entries are rational:
///   Fp v- = v0, Fp v0 = v+;   Fm v+ = 1/4 v0, Fm v0 = -1/4 v-;
///   Ep v- = 4 v+;             Em v+ = 1/4 v-.
/// The Casimir acts as 3 * identity.
MatrixRep<Rational> fundamental_rep();

/// Casimir eigenvalue on fundamental_rep().
inline Rational fundamental_casimir_value() { return Rational(3); }

/// Memory ceiling (bytes) for dense evaluations: BI_MEMORY_BUDGET if set,
/// otherwise 1 GiB.
std::size_t memory_budget();

namespace detail {

template <class Scalar>
Matrix<Scalar> identity(std::size_t d) {
  return Matrix<Scalar>::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
}

template <class Scalar>
Matrix<Scalar> kron(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

template <class Scalar>
void require_dims(const MatrixRep<Scalar>& rep) {
  if (rep.grading.size() != rep.dim) throw ContractError("grading length does not match the dimension");
  for (const auto& m : rep.matrices)
    if (m.rows() != static_cast<Eigen::Index>(rep.dim) || m.cols() != static_cast<Eigen::Index>(rep.dim))
      throw ContractError("dimension mismatch among representation matrices");
}

template <class Scalar>
std::size_t approx_entry_bytes() {
  return std::is_floating_point_v<Scalar> ? sizeof(Scalar) : sizeof(Scalar) + 32;
}

} // namespace detail

/// Residual norm per defining relation, plus the grading checks.
template <class Scalar>
Report check_rep(const MatrixRep<Scalar>& rep, double tolerance = default_tolerance<Scalar>()) {
  detail::require_dims(rep);
  using G = Generator;
  using M = Matrix<Scalar>;
  const auto comm = [](const M& a, const M& b) -> M { return a * b - b * a; };
  const auto anti = [](const M& a, const M& b) -> M { return a * b + b * a; };
  const Scalar half = Scalar(1) / Scalar(2);
  const M I = detail::identity<Scalar>(rep.dim);
  const M &Em = rep[G::Em], &Fm = rep[G::Fm], &H = rep[G::H], &Fp = rep[G::Fp], &Ep = rep[G::Ep], &P = rep[G::P];

  M diag = M::Zero(rep.dim, rep.dim);
  for (std::size_t i = 0; i < rep.dim; ++i) diag(i, i) = Scalar(rep.grading[i]);

  const std::vector<std::pair<std::string, M>> residuals{
      {"[H,Ep] = Ep", comm(H, Ep) - Ep},
      {"[H,Em] = -Em", comm(H, Em) + Em},
      {"[Ep,Em] = 2H", comm(Ep, Em) - Scalar(2) * H},
      {"[H,Fp] = 1/2 Fp", comm(H, Fp) - half * Fp},
      {"[H,Fm] = -1/2 Fm", comm(H, Fm) + half * Fm},
      {"{Fp,Fm} = 1/2 H", anti(Fp, Fm) - half * H},
      {"[Ep,Fm] = -Fp", comm(Ep, Fm) + Fp},
      {"[Em,Fp] = -Fm", comm(Em, Fp) + Fm},
      {"{Fp,Fp} = 1/2 Ep", anti(Fp, Fp) - half * Ep},
      {"{Fm,Fm} = -1/2 Em", anti(Fm, Fm) + half * Em},
      {"[P,Ep] = 0", comm(P, Ep)},
      {"[P,Em] = 0", comm(P, Em)},
      {"[P,H] = 0", comm(P, H)},
      {"{P,Fp} = 0", anti(P, Fp)},
      {"{P,Fm} = 0", anti(P, Fm)},
      {"P^2 = 1", P * P - I},
      {"P = diag(grading)", P - diag},
  };
  Report r{"representation check (dim=" + std::to_string(rep.dim) + ")", {}};
  for (const auto& [label, m] : residuals) {
    const Scalar norm = max_abs(m);
    const bool ok = within_tolerance(norm, tolerance);
    r.add({label, ok, ok ? 0u : static_cast<std::size_t>((m.array() != Scalar(0)).count()),
           ok ? "" : "max |entry| = " + std::to_string(to_double(norm))});
  }
  for (int g : rep.grading)
    if (g != 1 && g != -1) {
      r.add({"grading entries are +-1", false, 0, "found " + std::to_string(g)});
      break;
    }
  return r;
}

/// rho(m) for a PBW monomial.
template <class Scalar>
Matrix<Scalar> evaluate(const PBWMonomial& m, const MatrixRep<Scalar>& rep) {
  Matrix<Scalar> out = detail::identity<Scalar>(rep.dim);
  for (Generator g : m.word()) out = out * rep[g];
  return out;
}

template <class Scalar>
Matrix<Scalar> evaluate(const PBWElement& x, const MatrixRep<Scalar>& rep) {
  Matrix<Scalar> out = Matrix<Scalar>::Zero(rep.dim, rep.dim);
  for (const auto& [m, c] : x) out += Scalar(c) * evaluate(m, rep);
  return out;
}

/// rho^{(x)n}(X); leg 1 is the most significant Kronecker block. Throws
/// BudgetError when dim^n x dim^n exceeds `budget` bytes.
template <class Scalar>
Matrix<Scalar> evaluate(const TensorElement& x, const MatrixRep<Scalar>& rep, std::size_t budget = memory_budget()) {
  detail::require_dims(rep);
  std::size_t side = 1;
  for (std::size_t i = 0; i < x.arity(); ++i) side *= rep.dim;
  const long double bytes = static_cast<long double>(side) * side * detail::approx_entry_bytes<Scalar>() * 3;
  if (bytes > static_cast<long double>(budget))
    throw BudgetError("dense evaluation of arity " + std::to_string(x.arity()) + " needs about " +
                      std::to_string(static_cast<unsigned long long>(bytes)) + " bytes, budget is " +
                      std::to_string(budget));
  std::map<PBWMonomial, Matrix<Scalar>> cache;
  const auto leg = [&](const PBWMonomial& m) -> const Matrix<Scalar>& {
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, evaluate(m, rep)).first;
    return it->second;
  };
  Matrix<Scalar> out = Matrix<Scalar>::Zero(side, side);
  for (const auto& [m, c] : x) {
    Matrix<Scalar> k = leg(m.legs[0]);
    for (std::size_t i = 1; i < m.legs.size(); ++i) k = detail::kron(k, leg(m.legs[i]));
    out += Scalar(c) * k;
  }
  return out;
}

/// Max-entry norm of rho^{(x)n}(X).
template <class Scalar>
Scalar numeric_residual(const TensorElement& x, const MatrixRep<Scalar>& rep, std::size_t budget = memory_budget()) {
  return max_abs(evaluate(x, rep, budget));
}

/// Matrix-level constructions that never touch the symbolic engine: coproducts,
/// R-matrices and braided conjugations are built directly from Kronecker
/// products of the representation matrices.
namespace numeric {

/// rho(x) on leg i of n, identity elsewhere.
template <class Scalar>
Matrix<Scalar> on_leg(const Matrix<Scalar>& x, std::size_t i, std::size_t n, std::size_t dim) {
  Matrix<Scalar> out = i == 1 ? x : detail::identity<Scalar>(dim);
  for (std::size_t k = 2; k <= n; ++k) out = detail::kron(out, k == i ? x : detail::identity<Scalar>(dim));
  return out;
}

/// rho^{(x)k}(Delta^(k-1)(g)), via Delta(F) = F (x) P + 1 (x) F, Delta(P) = P (x) P,
/// Delta(g) = g (x) 1 + 1 (x) g otherwise.
template <class Scalar>
Matrix<Scalar> diagonal(Generator g, std::size_t k, const MatrixRep<Scalar>& rep) {
  const Matrix<Scalar>& x = rep[g];
  if (k == 1) return x;
  const Matrix<Scalar> tail = diagonal(g, k - 1, rep);
  if (g == Generator::P) return detail::kron(x, tail);
  const Matrix<Scalar> I = detail::identity<Scalar>(rep.dim);
  std::size_t tail_dim = static_cast<std::size_t>(tail.rows());
  if (is_odd(g)) return detail::kron(x, diagonal(Generator::P, k - 1, rep)) + detail::kron(I, tail);
  return detail::kron(x, detail::identity<Scalar>(tail_dim)) + detail::kron(I, tail);
}

/// (8[Fp, Fm] + 1) P for given images of Fp, Fm, P.
template <class Scalar>
Matrix<Scalar> casimir_of(const Matrix<Scalar>& fp, const Matrix<Scalar>& fm, const Matrix<Scalar>& p) {
  const Matrix<Scalar> I = detail::identity<Scalar>(static_cast<std::size_t>(p.rows()));
  return (Scalar(8) * (fp * fm - fm * fp) + I) * p;
}

/// rho(C_{k..l}) in arity n.
template <class Scalar>
Matrix<Scalar> contiguous_casimir(std::size_t k, std::size_t l, std::size_t n, const MatrixRep<Scalar>& rep) {
  const std::size_t m = l - k + 1;
  Matrix<Scalar> block = casimir_of(diagonal(Generator::Fp, m, rep), diagonal(Generator::Fm, m, rep),
                                    diagonal(Generator::P, m, rep));
  for (std::size_t i = 1; i < k; ++i) block = detail::kron(detail::identity<Scalar>(rep.dim), block);
  for (std::size_t i = l; i < n; ++i) block = detail::kron(block, detail::identity<Scalar>(rep.dim));
  return block;
}

/// rho(R_ij) = 1/2 (1 + P_i + P_j - P_i P_j).
template <class Scalar>
Matrix<Scalar> r_matrix(std::size_t n, std::size_t i, std::size_t j, const MatrixRep<Scalar>& rep) {
  const Matrix<Scalar> Pi = on_leg(rep[Generator::P], i, n, rep.dim), Pj = on_leg(rep[Generator::P], j, n, rep.dim);
  const Matrix<Scalar> I = Matrix<Scalar>::Identity(Pi.rows(), Pi.cols());
  return (I + Pi + Pj - Pi * Pj) / Scalar(2);
}

/// Permutation matrix exchanging legs i and i+1.
template <class Scalar>
Matrix<Scalar> swap_matrix(std::size_t n, std::size_t i, std::size_t dim) {
  std::size_t side = 1;
  for (std::size_t k = 0; k < n; ++k) side *= dim;
  Matrix<Scalar> s = Matrix<Scalar>::Zero(side, side);
  std::vector<std::size_t> digits(n);
  for (std::size_t idx = 0; idx < side; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = n; k-- > 0;) {
      digits[k] = rest % dim;
      rest /= dim;
    }
    std::swap(digits[i - 1], digits[i]);
    std::size_t target = 0;
    for (std::size_t k = 0; k < n; ++k) target = target * dim + digits[k];
    s(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(idx)) = Scalar(1);
  }
  return s;
}

/// Matrix image of gamma_s(X): letters act rightmost first, each as
/// X -> R sigma X sigma^{-1} R^{-1}. For this R, R^{-1} = R and sigma^{-1} = sigma^T.
template <class Scalar>
Matrix<Scalar> gamma(const Permutation& s, Matrix<Scalar> x, const MatrixRep<Scalar>& rep) {
  const std::size_t n = s.n();
  for (auto it = s.word().rbegin(); it != s.word().rend(); ++it) {
    const Matrix<Scalar> r = r_matrix(n, *it, *it + 1, rep);
    const Matrix<Scalar> sw = swap_matrix<Scalar>(n, *it, rep.dim);
    x = r * (sw * x * sw.transpose()) * r;
  }
  return x;
}

/// rho(C_A) by the canonical path K = {1..|A|}; identity for the empty set.
template <class Scalar>
Matrix<Scalar> intermediate_casimir(const SubsetIndex& a, const MatrixRep<Scalar>& rep) {
  if (a.empty()) {
    std::size_t side = 1;
    for (std::size_t k = 0; k < a.n(); ++k) side *= rep.dim;
    return detail::identity<Scalar>(side);
  }
  const SubsetIndex k = SubsetIndex::range(a.n(), 1, a.size());
  return gamma(Permutation::shuffle(k, a), contiguous_casimir(1, a.size(), a.n(), rep), rep);
}

/// rho of the naive (non-centralizing) embedding of C onto legs 1 and 3 of 3:
/// sigma_{23} (rho(Delta(C)) (x) 1) sigma_{23}.
template <class Scalar>
Matrix<Scalar> naive_casimir_13(const MatrixRep<Scalar>& rep) {
  const Matrix<Scalar> sw = swap_matrix<Scalar>(3, 2, rep.dim);
  return sw * contiguous_casimir(1, 2, 3, rep) * sw.transpose();
}

} // namespace numeric

/// Representation file contents; float entries select the double variant.
using LoadedRep = std::variant<MatrixRep<Rational>, MatrixRep<double>>;

/// Reads a fixture {version, dim, grading, matrices: {Em, Fm, H, Fp, Ep, P}}
/// with row-major arrays of "p/q" strings or decimal numbers. Throws
/// ContractError on malformed content.
LoadedRep load_rep(const std::filesystem::path& path);
LoadedRep parse_rep(const std::string& text);
std::string serialize_rep(const MatrixRep<Rational>& rep);

/// Rows of "p/q" entries, one row per line.
std::string format_matrix(const Matrix<Rational>& m);
std::string format_matrix(const Matrix<double>& m);

} // namespace ospbi
