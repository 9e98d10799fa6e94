#include "ospbi/pbw.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace ospbi {

namespace {

constexpr int rank(Generator g) { return static_cast<int>(g); }

std::uint16_t& slot16(PBWMonomial& m, Generator g) {
  switch (g) {
  case Generator::Em: return m.em;
  case Generator::H: return m.h;
  default: return m.ep;
  }
}

/// Straightening rule for an out-of-order pair x > g (both different from P):
/// x g = sign * g x + linear.
struct Swap {
  int sign;
  std::vector<std::pair<Generator, Rational>> linear;
};

Swap swap_rule(Generator x, Generator g) {
  using G = Generator;
  const Rational half(1, 2);
  switch (rank(x) * 8 + rank(g)) {
  case rank(G::Fm) * 8 + rank(G::Em): return {1, {}};
  case rank(G::H) * 8 + rank(G::Em): return {1, {{G::Em, Rational(-1)}}};
  case rank(G::H) * 8 + rank(G::Fm): return {1, {{G::Fm, -half}}};
  case rank(G::Fp) * 8 + rank(G::Em): return {1, {{G::Fm, Rational(1)}}};
  case rank(G::Fp) * 8 + rank(G::Fm): return {-1, {{G::H, half}}};
  case rank(G::Fp) * 8 + rank(G::H): return {1, {{G::Fp, -half}}};
  case rank(G::Ep) * 8 + rank(G::Em): return {1, {{G::H, Rational(2)}}};
  case rank(G::Ep) * 8 + rank(G::Fm): return {1, {{G::Fp, Rational(-1)}}};
  case rank(G::Ep) * 8 + rank(G::H): return {1, {{G::Ep, Rational(-1)}}};
  case rank(G::Ep) * 8 + rank(G::Fp): return {1, {}};
  default: throw std::logic_error("swap_rule: pair is not out of order");
  }
}

/// Highest letter (excluding P) present in m.
std::optional<Generator> last_letter(const PBWMonomial& m) {
  if (m.ep) return Generator::Ep;
  if (m.fp) return Generator::Fp;
  if (m.h) return Generator::H;
  if (m.fm) return Generator::Fm;
  if (m.em) return Generator::Em;
  return std::nullopt;
}

void drop_one(PBWMonomial& m, Generator x) {
  switch (x) {
  case Generator::Fm: m.fm = 0; break;
  case Generator::Fp: m.fp = 0; break;
  default: --slot16(m, x); break;
  }
}

PBWElement times_letter(const PBWMonomial& m, Generator g);

PBWElement times_letter(const PBWElement& x, Generator g) {
  PBWElement out;
  for (const auto& [m, c] : x) out.add(times_letter(m, g), c);
  return out;
}

/// m * g where m contains no P and g is not P.
PBWElement times_letter(const PBWMonomial& m, Generator g) {
  const auto x = last_letter(m);
  if (!x || rank(*x) < rank(g)) {
    PBWMonomial r = m;
    switch (g) {
    case Generator::Fm: r.fm = 1; break;
    case Generator::Fp: r.fp = 1; break;
    default: ++slot16(r, g); break;
    }
    return PBWElement(r);
  }
  PBWMonomial rest = m;
  drop_one(rest, *x);
  if (*x == g) {
    if (g == Generator::Fp) return times_letter(rest, Generator::Ep) *= Rational(1, 4);
    if (g == Generator::Fm) return times_letter(rest, Generator::Em) *= Rational(-1, 4);
    PBWMonomial r = m;
    ++slot16(r, g);
    return PBWElement(r);
  }
  // rest * x * g = sign * (rest * g) * x + rest * linear
  const Swap rule = swap_rule(*x, g);
  PBWElement out = times_letter(times_letter(rest, g), *x);
  out *= Rational(rule.sign);
  for (const auto& [h, c] : rule.linear) out.add(times_letter(rest, h), c);
  return out;
}

/// m * g for a normal monomial m (P allowed) and any letter g.
PBWElement times_generator(PBWMonomial m, Generator g) {
  if (g == Generator::P) {
    m.p ^= 1u;
    return PBWElement(m);
  }
  const bool had_p = m.p != 0;
  m.p = 0;
  PBWElement core = times_letter(m, g);
  if (!had_p) return core;
  // P g = -g P for odd g, g P otherwise.
  const Rational sign = is_odd(g) ? Rational(-1) : Rational(1);
  PBWElement out;
  for (const auto& [mono, c] : core) {
    PBWMonomial with_p = mono;
    with_p.p = 1;
    out.add(with_p, c * sign);
  }
  return out;
}

std::uint64_t pack(const PBWMonomial& m) {
  return std::uint64_t(m.em) | (std::uint64_t(m.fm) << 16) | (std::uint64_t(m.h) << 17) |
         (std::uint64_t(m.fp) << 33) | (std::uint64_t(m.ep) << 34) | (std::uint64_t(m.p) << 50);
}

struct PairKey {
  std::uint64_t a, b;
  bool operator==(const PairKey&) const = default;
};
struct PairHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.a * 0x9E3779B97F4A7C15ull ^ k.b);
  }
};

} // namespace

std::string_view name(Generator g) {
  switch (g) {
  case Generator::Em: return "Em";
  case Generator::Fm: return "Fm";
  case Generator::H: return "H";
  case Generator::Fp: return "Fp";
  case Generator::Ep: return "Ep";
  case Generator::P: return "P";
  }
  return "?";
}

std::optional<Generator> generator_from_name(std::string_view s) {
  for (Generator g : all_generators)
    if (name(g) == s) return g;
  return std::nullopt;
}

PBWMonomial PBWMonomial::of(Generator g) {
  PBWMonomial m;
  switch (g) {
  case Generator::Em: m.em = 1; break;
  case Generator::Fm: m.fm = 1; break;
  case Generator::H: m.h = 1; break;
  case Generator::Fp: m.fp = 1; break;
  case Generator::Ep: m.ep = 1; break;
  case Generator::P: m.p = 1; break;
  }
  return m;
}

unsigned PBWMonomial::exponent(Generator g) const {
  switch (g) {
  case Generator::Em: return em;
  case Generator::Fm: return fm;
  case Generator::H: return h;
  case Generator::Fp: return fp;
  case Generator::Ep: return ep;
  case Generator::P: return p;
  }
  return 0;
}

std::vector<Generator> PBWMonomial::word() const {
  std::vector<Generator> w;
  for (Generator g : all_generators) w.insert(w.end(), exponent(g), g);
  return w;
}

PBWElement one() { return PBWElement(PBWMonomial::unit()); }
PBWElement scalar(const Rational& q) { return PBWElement(PBWMonomial::unit(), q); }
PBWElement generator(Generator g) { return PBWElement(PBWMonomial::of(g)); }

PBWElement multiply(const PBWMonomial& x, const PBWMonomial& y) {
  if (y.is_unit()) return PBWElement(x);
  if (x.is_unit()) return PBWElement(y);
  thread_local std::unordered_map<PairKey, PBWElement, PairHash> cache;
  const PairKey key{pack(x), pack(y)};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  PBWElement acc(x);
  for (Generator g : y.word()) {
    PBWElement next;
    for (const auto& [m, c] : acc) next.add(times_generator(m, g), c);
    acc = std::move(next);
  }
  cache.emplace(key, acc);
  return acc;
}

PBWElement multiply(const PBWElement& x, const PBWElement& y) {
  PBWElement out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) out.add(multiply(mx, my), cx * cy);
  return out;
}

PBWElement normal_form(const std::vector<Generator>& word) {
  PBWElement acc = one();
  for (Generator g : word) {
    PBWElement next;
    for (const auto& [m, c] : acc) next.add(times_generator(m, g), c);
    acc = std::move(next);
  }
  return acc;
}

PBWElement linear_combine(const std::vector<std::pair<Rational, PBWElement>>& terms) {
  PBWElement out;
  for (const auto& [c, x] : terms) out.add(x, c);
  return out;
}

PBWElement bracket(const PBWElement& x, const PBWElement& y, BracketKind kind) {
  PBWElement out = multiply(x, y);
  out.add(multiply(y, x), kind == BracketKind::commutator ? Rational(-1) : Rational(1));
  return out;
}

const PBWElement& casimir() {
  static const PBWElement c = [] {
    const PBWElement P = generator(Generator::P);
    return linear_combine({{Rational(8), commutator(generator(Generator::Fp), generator(Generator::Fm)) * P},
                           {Rational(1), P}});
  }();
  return c;
}

std::vector<Relation> defining_relation_residuals() {
  using G = Generator;
  const auto g = [](G x) { return generator(x); };
  const Rational half(1, 2);
  std::vector<Relation> rel;
  rel.push_back({"[H,Ep] = Ep", commutator(g(G::H), g(G::Ep)) - g(G::Ep)});
  rel.push_back({"[H,Em] = -Em", commutator(g(G::H), g(G::Em)) + g(G::Em)});
  rel.push_back({"[Ep,Em] = 2H", commutator(g(G::Ep), g(G::Em)) - Rational(2) * g(G::H)});
  rel.push_back({"[H,Fp] = 1/2 Fp", commutator(g(G::H), g(G::Fp)) - half * g(G::Fp)});
  rel.push_back({"[H,Fm] = -1/2 Fm", commutator(g(G::H), g(G::Fm)) + half * g(G::Fm)});
  rel.push_back({"{Fp,Fm} = 1/2 H", anticommutator(g(G::Fp), g(G::Fm)) - half * g(G::H)});
  rel.push_back({"[Ep,Fm] = -Fp", commutator(g(G::Ep), g(G::Fm)) + g(G::Fp)});
  rel.push_back({"[Em,Fp] = -Fm", commutator(g(G::Em), g(G::Fp)) + g(G::Fm)});
  rel.push_back({"{Fp,Fp} = 1/2 Ep", anticommutator(g(G::Fp), g(G::Fp)) - half * g(G::Ep)});
  rel.push_back({"{Fm,Fm} = -1/2 Em", anticommutator(g(G::Fm), g(G::Fm)) + half * g(G::Em)});
  rel.push_back({"[P,Ep] = 0", commutator(g(G::P), g(G::Ep))});
  rel.push_back({"[P,Em] = 0", commutator(g(G::P), g(G::Em))});
  rel.push_back({"[P,H] = 0", commutator(g(G::P), g(G::H))});
  rel.push_back({"{P,Fp} = 0", anticommutator(g(G::P), g(G::Fp))});
  rel.push_back({"{P,Fm} = 0", anticommutator(g(G::P), g(G::Fm))});
  rel.push_back({"P^2 = 1", g(G::P) * g(G::P) - one()});
  return rel;
}

Report check_defining_relations() {
  Report r{"defining relations", {}};
  for (const auto& [n, res] : defining_relation_residuals())
    r.add({n, res.empty(), res.size(), res.empty() ? "" : to_string(res)});
  return r;
}

std::string to_string(const PBWMonomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (Generator g : all_generators) {
    const unsigned e = m.exponent(g);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += name(g);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::string to_string(const PBWElement& x) {
  if (x.empty()) return "0";
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
    if (m.is_unit()) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << '*';
      os << to_string(m);
    }
  }
  return os.str();
}

} // namespace ospbi
