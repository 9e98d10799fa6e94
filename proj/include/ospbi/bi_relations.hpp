#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "ospbi/casimir.hpp"
#include "ospbi/rational.hpp"
#include "ospbi/subset.hpp"
#include "ospbi/tensor.hpp"

namespace ospbi {

/// Residual of {C_A, C_B} - 2(-C_{A^B} + C_{A-B} C_{B-A} + C_{A&B} C_{A|B}).
struct BIRelationResidual {
  SubsetIndex a;
  SubsetIndex b;
  TensorElement residual;

  bool is_zero() const { return residual.is_zero(); }
};

BIRelationResidual bi_residual(const SubsetIndex& a, const SubsetIndex& b);
BIRelationResidual bi_residual(const SubsetIndex& a, const SubsetIndex& b, const CasimirCache& cache);

/// The same relation evaluated on rescaled generators scale * C_A (C_empty = 1
/// is not rescaled). Any scale other than 1 breaks it; used as a control
/// against silent normalization drift.
BIRelationResidual bi_residual_rescaled(const SubsetIndex& a, const SubsetIndex& b, const Rational& scale,
                                        const CasimirCache& cache);

struct BIVerification {
  std::size_t n = 0;
  std::vector<BIRelationResidual> relations; ///< unordered pairs, sorted by (A, B)
  std::chrono::duration<double> elapsed{};

  bool all_zero() const;
  std::size_t failures() const;
};

/// Checks every unordered pair (A, B) of nonempty subsets of [n], A == B
/// included (28 pairs for n = 3, 120 for n = 4). Pairs involving the empty
/// set reduce to {1, C_B} = 2 C_B and are left to bi_residual. Runs on `jobs`
/// worker threads; results are ordered independently of completion order.
BIVerification verify_bi(std::size_t n, std::size_t jobs = 1);
BIVerification verify_bi(const CasimirCache& cache, std::size_t jobs = 1);

struct StructureReportOptions {
  std::size_t jobs = 1;
  bool timings = false;    ///< include wall-clock timings (breaks byte stability)
  bool diagnostics = false; ///< add the naive C̄13 embedding as a non-centralizing diagnostic (n >= 3)
};

/// Machine-readable report: {n, casimirs, relations, diagnostics?, meta}.
nlohmann::ordered_json structure_report(std::size_t n, const StructureReportOptions& options = {});

/// Runs f(0..count-1) on `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& f);

} // namespace ospbi
