#include "ospbi/random.hpp"

namespace ospbi {

PBWMonomial random_monomial(std::mt19937_64& rng, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree), bit(0, 1), letter(0, 4);
  PBWMonomial m;
  const unsigned d = deg(rng);
  for (unsigned k = 0; k < d; ++k) {
    switch (letter(rng)) {
    case 0: ++m.em; break;
    case 1: m.fm = 1; break;
    case 2: ++m.h; break;
    case 3: m.fp = 1; break;
    default: ++m.ep; break;
    }
  }
  m.p = static_cast<std::uint8_t>(bit(rng));
  return m;
}

PBWElement random_element(std::mt19937_64& rng, const SampleShape& shape) {
  std::uniform_int_distribution<int> num(-shape.max_coeff, shape.max_coeff), den(1, 3);
  PBWElement x;
  for (std::size_t t = 0; t < shape.terms; ++t) {
    int a = num(rng);
    if (a == 0) a = 1;
    x.add(random_monomial(rng, shape.max_degree), Rational(a, den(rng)));
  }
  return x;
}

TensorElement random_tensor(std::mt19937_64& rng, std::size_t arity, const SampleShape& shape) {
  std::uniform_int_distribution<int> num(-shape.max_coeff, shape.max_coeff), den(1, 3);
  TensorElement x(arity);
  for (std::size_t t = 0; t < shape.terms; ++t) {
    TensorMonomial m;
    for (std::size_t i = 0; i < arity; ++i) m.legs.push_back(random_monomial(rng, shape.max_degree));
    int a = num(rng);
    if (a == 0) a = 1;
    x.add(m, Rational(a, den(rng)));
  }
  return x;
}

} // namespace ospbi
