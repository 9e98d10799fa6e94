#include "ospbi/tensor.hpp"

#include <map>
#include <sstream>

#include "ospbi/errors.hpp"
#include "ospbi/permutation.hpp"

namespace ospbi {

namespace {

void require_same_arity(const TensorElement& a, const TensorElement& b, const char* op) {
  if (a.arity() != b.arity())
    throw ArityError(std::string(op) + ": arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
}

void require_leg(std::size_t i, std::size_t n, const char* op) {
  if (i < 1 || i > n)
    throw IndexError(std::string(op) + ": leg " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
}

/// Accumulates the tensor product of per-leg expansions into `out`.
void expand_legs(TensorElement& out, const std::vector<const TensorElement*>& parts, const Rational& coeff) {
  // Cartesian product over the per-leg pieces, concatenating legs.
  std::vector<std::pair<TensorMonomial, Rational>> acc{{TensorMonomial{}, coeff}};
  for (const TensorElement* part : parts) {
    std::vector<std::pair<TensorMonomial, Rational>> next;
    next.reserve(acc.size() * part->size());
    for (const auto& [m, c] : acc) {
      for (const auto& [pm, pc] : *part) {
        TensorMonomial t = m;
        t.legs.insert(t.legs.end(), pm.legs.begin(), pm.legs.end());
        next.emplace_back(std::move(t), c * pc);
      }
    }
    acc = std::move(next);
  }
  for (const auto& [m, c] : acc) out.add(m, c);
}

} // namespace

TensorElement::TensorElement(std::size_t arity) : arity_(arity) {
  if (arity_ == 0) throw ArityError("tensor arity must be at least 1");
}

TensorElement::TensorElement(std::size_t arity, Terms terms) : arity_(arity), terms_(std::move(terms)) {
  if (arity_ == 0) throw ArityError("tensor arity must be at least 1");
  for (const auto& [m, c] : terms_)
    if (m.arity() != arity_) throw ArityError("tensor monomial arity does not match element arity");
}

TensorElement TensorElement::from_pbw(const PBWElement& x) {
  TensorElement out(1);
  for (const auto& [m, c] : x) out.add(TensorMonomial{{m}}, c);
  return out;
}

TensorElement TensorElement::unit(std::size_t arity) {
  TensorElement out(arity);
  out.add(TensorMonomial{std::vector<PBWMonomial>(arity)}, Rational(1));
  return out;
}

void TensorElement::add(const TensorMonomial& m, const Rational& c) {
  if (m.arity() != arity_) throw ArityError("adding a monomial of arity " + std::to_string(m.arity()) +
                                            " to an element of arity " + std::to_string(arity_));
  terms_.add(m, c);
}

PBWElement TensorElement::to_pbw() const {
  if (arity_ != 1) throw ArityError("expected an arity-1 element, got arity " + std::to_string(arity_));
  PBWElement out;
  for (const auto& [m, c] : terms_) out.add(m.legs[0], c);
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_same_arity(*this, o, "+");
  terms_ += o.terms_;
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_same_arity(*this, o, "-");
  terms_ -= o.terms_;
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& s) {
  terms_ *= s;
  return *this;
}

TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) {
  require_same_arity(x, y, "*");
  const std::size_t n = x.arity();
  TensorElement out(n);
  std::vector<PBWElement> leg_products(n);
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      bool zero = false;
      for (std::size_t i = 0; i < n && !zero; ++i) {
        leg_products[i] = multiply(mx.legs[i], my.legs[i]);
        zero = leg_products[i].empty();
      }
      if (zero) continue;
      // Cartesian product of leg expansions.
      std::vector<std::pair<TensorMonomial, Rational>> acc{{TensorMonomial{}, cx * cy}};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<TensorMonomial, Rational>> next;
        next.reserve(acc.size() * leg_products[i].size());
        for (const auto& [m, c] : acc) {
          for (const auto& [pm, pc] : leg_products[i]) {
            TensorMonomial t = m;
            t.legs.push_back(pm);
            next.emplace_back(std::move(t), c * pc);
          }
        }
        acc = std::move(next);
      }
      for (const auto& [m, c] : acc) out.add(m, c);
    }
  }
  return out;
}

TensorElement outer(const TensorElement& x, const TensorElement& y) {
  TensorElement out(x.arity() + y.arity());
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) {
      TensorMonomial t = mx;
      t.legs.insert(t.legs.end(), my.legs.begin(), my.legs.end());
      out.add(t, cx * cy);
    }
  }
  return out;
}

TensorElement embed(const PBWElement& x, std::size_t i, std::size_t n) {
  require_leg(i, n, "embed");
  TensorElement out(n);
  for (const auto& [m, c] : x) {
    TensorMonomial t{std::vector<PBWMonomial>(n)};
    t.legs[i - 1] = m;
    out.add(t, c);
  }
  return out;
}

TensorElement coproduct(const PBWMonomial& m) {
  thread_local std::map<PBWMonomial, TensorElement> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  const auto gen_image = [](Generator g) {
    const TensorElement g1 = embed(g, 1, 2), g2 = embed(g, 2, 2);
    if (g == Generator::P) return tensor_multiply(g1, g2);
    if (is_odd(g)) return tensor_multiply(g1, embed(Generator::P, 2, 2)) + g2;
    return g1 + g2;
  };
  TensorElement acc = TensorElement::unit(2);
  for (Generator g : m.word()) acc = tensor_multiply(acc, gen_image(g));
  cache.emplace(m, acc);
  return acc;
}

TensorElement coproduct(const PBWElement& x, bool opposite) {
  TensorElement out(2);
  for (const auto& [m, c] : x) {
    for (const auto& [t, tc] : coproduct(m)) {
      if (opposite)
        out.add(TensorMonomial{{t.legs[1], t.legs[0]}}, c * tc);
      else
        out.add(t, c * tc);
    }
  }
  return out;
}

TensorElement coproduct_iter(std::size_t k, const PBWMonomial& m) {
  if (k == 0) return TensorElement::from_pbw(PBWElement(m));
  thread_local std::map<std::pair<std::size_t, PBWMonomial>, TensorElement> cache;
  const auto key = std::make_pair(k, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // (id (x) Delta^(k-1)) Delta
  TensorElement out(k + 1);
  for (const auto& [t, c] : coproduct(m)) {
    const TensorElement left = TensorElement::from_pbw(PBWElement(t.legs[0]));
    const TensorElement right = coproduct_iter(k - 1, t.legs[1]);
    expand_legs(out, {&left, &right}, c);
  }
  cache.emplace(key, out);
  return out;
}

TensorElement coproduct_iter(std::size_t k, const PBWElement& x) {
  TensorElement out(k + 1);
  for (const auto& [m, c] : x) {
    TensorElement part = coproduct_iter(k, m);
    part *= c;
    out += part;
  }
  return out;
}

TensorElement apply_positional(const TensorElement& x, const std::vector<LegMap>& plan) {
  if (plan.size() != x.arity())
    throw ArityError("positional plan has " + std::to_string(plan.size()) + " entries for arity " +
                     std::to_string(x.arity()));
  std::size_t out_arity = 0;
  for (const auto& p : plan) out_arity += p.k + 1;
  TensorElement out(out_arity);
  std::vector<TensorElement> images(plan.size());
  std::vector<const TensorElement*> parts(plan.size());
  for (const auto& [m, c] : x) {
    for (std::size_t i = 0; i < plan.size(); ++i) {
      images[i] = coproduct_iter(plan[i].k, m.legs[i]);
      parts[i] = &images[i];
    }
    expand_legs(out, parts, c);
  }
  return out;
}

TensorElement map_leg(const TensorElement& x, std::size_t leg,
                      const std::function<TensorElement(const PBWMonomial&)>& f) {
  require_leg(leg, x.arity(), "map_leg");
  std::map<PBWMonomial, TensorElement> images;
  std::size_t out_arity = 0;
  for (const auto& [m, c] : x) {
    auto it = images.find(m.legs[leg - 1]);
    if (it == images.end()) it = images.emplace(m.legs[leg - 1], f(m.legs[leg - 1])).first;
    out_arity = x.arity() - 1 + it->second.arity();
  }
  if (images.empty()) return TensorElement(x.arity() - 1 + f(PBWMonomial::unit()).arity());
  TensorElement out(out_arity);
  for (const auto& [m, c] : x) {
    const TensorElement& img = images.at(m.legs[leg - 1]);
    if (x.arity() - 1 + img.arity() != out_arity) throw ArityError("map_leg: leg images of different arity");
    for (const auto& [im, ic] : img) {
      TensorMonomial t;
      t.legs.assign(m.legs.begin(), m.legs.begin() + static_cast<std::ptrdiff_t>(leg - 1));
      t.legs.insert(t.legs.end(), im.legs.begin(), im.legs.end());
      t.legs.insert(t.legs.end(), m.legs.begin() + static_cast<std::ptrdiff_t>(leg), m.legs.end());
      out.add(t, c * ic);
    }
  }
  return out;
}

TensorElement permute_factors(const TensorElement& x, const std::vector<std::size_t>& images) {
  const std::size_t n = x.arity();
  if (images.size() != n)
    throw ArityError("permutation of degree " + std::to_string(images.size()) + " applied to arity " +
                     std::to_string(n));
  TensorElement out(n);
  for (const auto& [m, c] : x) {
    TensorMonomial t{std::vector<PBWMonomial>(n)};
    for (std::size_t i = 0; i < n; ++i) t.legs[images[i] - 1] = m.legs[i];
    out.add(t, c);
  }
  return out;
}

TensorElement permute_factors(const TensorElement& x, const Permutation& s) {
  if (s.n() != x.arity())
    throw ArityError("permutation of degree " + std::to_string(s.n()) + " applied to arity " +
                     std::to_string(x.arity()));
  return permute_factors(x, s.images());
}

TensorElement insert_unit(const TensorElement& x, std::size_t pos) {
  require_leg(pos, x.arity() + 1, "insert_unit");
  TensorElement out(x.arity() + 1);
  for (const auto& [m, c] : x) {
    TensorMonomial t = m;
    t.legs.insert(t.legs.begin() + static_cast<std::ptrdiff_t>(pos - 1), PBWMonomial::unit());
    out.add(t, c);
  }
  return out;
}

TensorElement commutator(const TensorElement& a, const TensorElement& b) { return a * b - b * a; }
TensorElement anticommutator(const TensorElement& a, const TensorElement& b) { return a * b + b * a; }

std::string to_string(const TensorMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.legs.size(); ++i) {
    if (i) s += " # ";
    s += to_string(m.legs[i]);
  }
  return s;
}

std::string to_string(const TensorElement& x) {
  if (x.is_zero()) return "0";
  if (x.arity() == 1) return to_string(x.to_pbw());
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (a != 1) os << to_string(a) << '*';
    os << '(' << to_string(m) << ')';
  }
  return os.str();
}

} // namespace ospbi
