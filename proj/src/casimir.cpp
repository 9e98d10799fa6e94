#include "ospbi/casimir.hpp"

#include <mutex>

#include "ospbi/errors.hpp"
#include "ospbi/rmatrix.hpp"

namespace ospbi {

TensorElement contiguous_casimir(std::size_t k, std::size_t l, std::size_t n) {
  if (k < 1 || k > l || l > n)
    throw IndexError("contiguous Casimir needs 1 <= k <= l <= n, got k=" + std::to_string(k) +
                     " l=" + std::to_string(l) + " n=" + std::to_string(n));
  TensorElement out = coproduct_iter(l - k, casimir());
  if (k > 1) out = outer(TensorElement::unit(k - 1), out);
  if (l < n) out = outer(out, TensorElement::unit(n - l));
  return out;
}

TensorElement contiguous_casimir(const SubsetIndex& k) {
  if (k.empty()) return TensorElement::unit(k.n());
  if (!k.contiguous()) throw ContractError("subset " + k.to_string() + " is not contiguous");
  return contiguous_casimir(k.front(), k.back(), k.n());
}

TensorElement intermediate_casimir(const SubsetIndex& a) {
  if (a.n() == 0) throw IndexError("ambient arity must be positive");
  if (a.empty()) return TensorElement::unit(a.n());
  const SubsetIndex k = SubsetIndex::range(a.n(), 1, a.size());
  return gamma(Permutation::shuffle(k, a), contiguous_casimir(k));
}

TensorElement embedded_odd_generator(const SubsetIndex& a, Generator f) {
  if (!is_odd(f)) throw ContractError("embedded_odd_generator expects Fp or Fm");
  if (a.empty()) throw ContractError("the empty subset has no embedding");
  const std::size_t n = a.n();
  TensorElement out(n);
  for (auto i : a.elements()) {
    TensorElement term = embed(f, i, n);
    for (std::size_t j = i + 1; j <= a.back(); ++j) term = term * embed(Generator::P, j, n);
    out += term;
  }
  return out;
}

TensorElement explicit_casimir(const SubsetIndex& a) {
  if (a.empty()) throw ContractError("explicit_casimir is undefined for the empty subset");
  const std::size_t n = a.n();
  TensorElement pa = TensorElement::unit(n);
  for (auto i : a.elements()) pa = pa * embed(Generator::P, i, n);
  TensorElement inner = commutator(embedded_odd_generator(a, Generator::Fp), embedded_odd_generator(a, Generator::Fm));
  inner *= Rational(8);
  inner += TensorElement::unit(n);
  return inner * pa;
}

TensorElement naive_casimir(const SubsetIndex& a) {
  if (a.empty()) return TensorElement::unit(a.n());
  const TensorElement d = coproduct_iter(a.size() - 1, casimir());
  TensorElement out(a.n());
  for (const auto& [m, c] : d) {
    TensorMonomial t{std::vector<PBWMonomial>(a.n())};
    for (std::size_t j = 0; j < a.size(); ++j) t.legs[a.elements()[j] - 1] = m.legs[j];
    out.add(t, c);
  }
  return out;
}

Report centralizer_residuals(const TensorElement& x, std::size_t n) {
  if (x.arity() != n)
    throw ArityError("centralizer check in arity " + std::to_string(n) + " for an element of arity " +
                     std::to_string(x.arity()));
  Report r{"centralizer residuals (n=" + std::to_string(n) + ")", {}};
  for (Generator g : all_generators) {
    const TensorElement res = commutator(coproduct_iter(n - 1, generator(g)), x);
    r.add({"[Delta^(n-1)(" + std::string(name(g)) + "), X] = 0", res.is_zero(), res.size(),
           res.is_zero() ? "" : to_string(res)});
  }
  return r;
}

TensorElement casimir_along(const CasimirPath& path) {
  if (!path.k.contiguous()) throw ContractError("path start " + path.k.to_string() + " is not contiguous");
  return gamma(path.s, contiguous_casimir(path.k));
}

Report path_consistency(const SubsetIndex& a, const std::vector<CasimirPath>& paths) {
  for (const auto& p : paths) {
    if (p.k.n() != a.n() || p.s.n() != a.n()) throw ArityError("path lives in a different arity than " + a.to_string());
    if (p.s.apply(p.k) != a)
      throw ContractError("path (" + p.k.to_string() + ", " + p.s.to_string() + ") maps to " +
                          p.s.apply(p.k).to_string() + ", not " + a.to_string());
  }
  Report r{"path consistency for C" + a.to_string() + " (n=" + std::to_string(a.n()) + ")", {}};
  std::vector<TensorElement> values;
  values.reserve(paths.size());
  for (const auto& p : paths) values.push_back(casimir_along(p));
  const auto label = [&](std::size_t i) { return "(" + paths[i].k.to_string() + ", " + paths[i].s.to_string() + ")"; };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const TensorElement diff = values[i] - values[j];
      r.add({label(i) + " == " + label(j), diff.is_zero(), diff.size(), diff.is_zero() ? "" : to_string(diff)});
    }
  }
  return r;
}

std::vector<CasimirPath> generate_paths(const SubsetIndex& a) {
  std::vector<CasimirPath> out;
  if (a.empty()) return out;
  const std::size_t n = a.n(), m = a.size();
  for (std::size_t start = 1; start + m - 1 <= n; ++start) {
    const SubsetIndex k = SubsetIndex::range(n, start, start + m - 1);
    const Permutation s = Permutation::shuffle(k, a);
    out.push_back({k, s});
    if (m >= 2) out.push_back({k, s * Permutation(n, {start})});
  }
  return out;
}

TensorElement CasimirCache::get(const SubsetIndex& a) const {
  if (a.n() != n_) throw ArityError("Casimir cache for arity " + std::to_string(n_) + " queried with " + a.to_string());
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
  }
  TensorElement value = intermediate_casimir(a);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(a, std::move(value)).first->second;
}

} // namespace ospbi
