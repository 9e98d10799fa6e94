#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <vector>

#include "ospbi/permutation.hpp"
#include "ospbi/report.hpp"
#include "ospbi/subset.hpp"
#include "ospbi/tensor.hpp"

namespace ospbi {

/// C_{k..l} = 1^{(x)(k-1)} (x) Delta^(l-k)(C) (x) 1^{(x)(n-l)}.
TensorElement contiguous_casimir(std::size_t k, std::size_t l, std::size_t n);
TensorElement contiguous_casimir(const SubsetIndex& k);

/// C_A = gamma_s(C_K) with K = {1..|A|} and s the minimal shuffle word with
/// s(K) = A. The empty subset gives the unit.
TensorElement intermediate_casimir(const SubsetIndex& a);

/// Direct embedding formula (8[Fp_A, Fm_A] + 1) P_A, where
///   F_A = sum_{i in A} F_i P_{i+1} P_{i+2} ... P_{max A}
/// runs over every leg between i and max A, including legs outside A, and
/// P_A = prod_{i in A} P_i.
///
/// The general-A form extrapolates the pair and triple formulas; it is only
/// trusted because the tests prove it equal to intermediate_casimir for n <= 4.
TensorElement explicit_casimir(const SubsetIndex& a);

/// F_A^+ (sign = +1) or F_A^- (sign = -1) of the embedding above.
TensorElement embedded_odd_generator(const SubsetIndex& a, Generator f);

/// C̄ for a subset: Delta^(|A|-1)(C) spread onto the legs of A with units
/// elsewhere (the naive, non-centralizing embedding).
TensorElement naive_casimir(const SubsetIndex& a);

/// [Delta^(n-1)(g), X] for each of the six generators.
Report centralizer_residuals(const TensorElement& x, std::size_t n);

/// One way of reaching C_A: start at a contiguous K and conjugate by s.
struct CasimirPath {
  SubsetIndex k;
  Permutation s;
};

/// gamma_s(C_K); throws ContractError when K is not contiguous.
TensorElement casimir_along(const CasimirPath& path);

/// Pairwise exact equality of the elements produced by every path. Throws
/// ContractError if some path does not map K onto A.
Report path_consistency(const SubsetIndex& a, const std::vector<CasimirPath>& paths);

/// Every contiguous K with |K| = |A| paired with its shuffle word, plus for
/// each |K| >= 2 a variant whose word first permutes inside K.
std::vector<CasimirPath> generate_paths(const SubsetIndex& a);

/// Thread-safe memo of intermediate Casimirs for one ambient arity. Concurrent
/// readers share a lock; a racing duplicate computation inserts an identical
/// value, so callers never observe nondeterminism.
class CasimirCache {
public:
  explicit CasimirCache(std::size_t n) : n_(n) {}
  std::size_t n() const { return n_; }
  TensorElement get(const SubsetIndex& a) const;

private:
  std::size_t n_;
  mutable std::shared_mutex mutex_;
  mutable std::map<SubsetIndex, TensorElement> memo_;
};

} // namespace ospbi
