#pragma once

#include <cstddef>
#include <vector>

#include "ospbi/permutation.hpp"
#include "ospbi/report.hpp"
#include "ospbi/tensor.hpp"

namespace ospbi {

/// R_ij = 1/2 (1 + P_i + P_j - P_i P_j) in arity n. Throws IndexError on
/// i == j or legs outside [1, n].
TensorElement universal_R(std::size_t n, std::size_t i, std::size_t j);

/// R_ij^{-1}. For osp(1|2) this coincides with R_ij, but conjugations are
/// always written with an explicit inverse so the call sites stay correct for
/// other quasi-triangular R.
TensorElement universal_R_inverse(std::size_t n, std::size_t i, std::size_t j);

/// Single braided conjugation X -> R_{i,i+1} sigma_{i,i+1}(X) R_{i,i+1}^{-1}.
TensorElement braided_conjugate(std::size_t i, const TensorElement& x);

/// gamma_s(X) = Rc_{i1} ... Rc_{ip} X (Rc_{i1} ... Rc_{ip})^{-1} with
/// Rc_i = R_{i,i+1} sigma_{i,i+1}; the rightmost letter conjugates first.
TensorElement gamma(const Permutation& s, const TensorElement& x);

enum class CoactionSide { hat, check };

/// hat:   R^{-1} (1 (x) x) R
/// check: R^{-1} (x (x) 1) R
TensorElement coaction(const PBWElement& x, CoactionSide side);

/// Applies a coaction to one leg of x (arity grows by one).
TensorElement apply_coaction(const TensorElement& x, std::size_t leg, CoactionSide side);

/// Runs the R-matrix identity suite in arity n (2 <= n <= 4). Checks that need
/// three legs are skipped for n = 2.
Report verify_r_properties(std::size_t n);

} // namespace ospbi
