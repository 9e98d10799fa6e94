#pragma once

#include <cstddef>
#include <random>

#include "ospbi/pbw.hpp"
#include "ospbi/tensor.hpp"

namespace ospbi {

/// Bounds for random sample elements used in property checks.
struct SampleShape {
  std::size_t terms = 3;
  unsigned max_degree = 3;
  int max_coeff = 5;
};

/// Random PBW monomial of total degree (excluding P) at most max_degree.
PBWMonomial random_monomial(std::mt19937_64& rng, unsigned max_degree);
PBWElement random_element(std::mt19937_64& rng, const SampleShape& shape = {});
TensorElement random_tensor(std::mt19937_64& rng, std::size_t arity, const SampleShape& shape = {});

} // namespace ospbi
