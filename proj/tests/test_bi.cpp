#include <doctest.h>

#include "ospbi/bi_relations.hpp"
#include "ospbi/errors.hpp"
#include "ospbi/rmatrix.hpp"

using namespace ospbi;

namespace {

SubsetIndex S(std::size_t n, std::vector<std::size_t> e) { return SubsetIndex(n, std::move(e)); }

} // namespace

TEST_CASE("BI relation examples") {
  const auto r = bi_residual(S(3, {1, 2}), S(3, {2, 3}));
  CHECK(r.is_zero());
  // {C12, C23} = 2(-C13 + C1 C3 + C2 C123), written out
  const CasimirCache cache(3);
  const auto C = [&](std::vector<std::size_t> e) { return cache.get(S(3, std::move(e))); };
  CHECK(anticommutator(C({1, 2}), C({2, 3})) ==
        Rational(2) * (C({1, 3}) * Rational(-1) + C({1}) * C({3}) + C({2}) * C({1, 2, 3})));

  CHECK(bi_residual(S(3, {1}), S(3, {2})).is_zero());
  CHECK(anticommutator(C({1}), C({2})) == Rational(2) * C({1}) * C({2}));
  for (const auto& a : SubsetIndex::all(3)) {
    INFO(a.to_string());
    CHECK(bi_residual(a, a).is_zero());
    CHECK(bi_residual(S(3, {}), a).is_zero());
    CHECK(bi_residual(a, S(3, {})).is_zero());
  }
  CHECK_THROWS_AS(bi_residual(S(3, {1}), S(4, {1})), ArityError);
}

TEST_CASE("verify_bi for n = 2 and 3") {
  const BIVerification v2 = verify_bi(2);
  CHECK(v2.relations.size() == 6);
  CHECK(v2.all_zero());
  const BIVerification v3 = verify_bi(3, 2);
  CHECK(v3.relations.size() == 28);
  CHECK(v3.all_zero());
  CHECK(v3.failures() == 0);
  // ordering does not depend on the number of workers
  const BIVerification v3s = verify_bi(3, 1);
  for (std::size_t i = 0; i < v3.relations.size(); ++i) {
    CHECK(v3.relations[i].a == v3s.relations[i].a);
    CHECK(v3.relations[i].b == v3s.relations[i].b);
  }
}

TEST_CASE("verify_bi for n = 4") {
  const BIVerification v4 = verify_bi(4, 4);
  CHECK(v4.relations.size() == 120);
  CHECK(v4.all_zero());
}

TEST_CASE("a wrong normalization breaks the relation") {
  const CasimirCache cache(3);
  // generators differing by a factor -2 from the ones used here
  const auto wrong = bi_residual_rescaled(S(3, {1, 2}), S(3, {2, 3}), Rational(-1, 2), cache);
  CHECK_FALSE(wrong.is_zero());
  CHECK(bi_residual_rescaled(S(3, {1, 2}), S(3, {2, 3}), Rational(1), cache).is_zero());
  CHECK_FALSE(bi_residual_rescaled(S(3, {1, 2}), S(3, {2, 3}), Rational(-2), cache).is_zero());
}

TEST_CASE("conjugating the first relation gives the others") {
  const CasimirCache cache(3);
  const TensorElement res = bi_residual(S(3, {1, 2}), S(3, {2, 3}), cache).residual;
  CHECK(gamma(Permutation(3, {1}), res).is_zero());
  CHECK(gamma(Permutation(3, {2}), res).is_zero());
  // gamma_s1 carries C12 to itself and C23 to C13
  const Permutation s1(3, {1});
  CHECK(gamma(s1, cache.get(S(3, {1, 2}))) == cache.get(S(3, {1, 2})));
  CHECK(gamma(s1, cache.get(S(3, {2, 3}))) == cache.get(S(3, {1, 3})));
  CHECK(gamma(s1, cache.get(S(3, {1}))) == cache.get(S(3, {2})));
  // sides mapped separately: {C12, C13} = 2(-C23 + C2 C3 + C1 C123)
  const auto C = [&](std::vector<std::size_t> e) { return cache.get(S(3, std::move(e))); };
  const TensorElement lhs = gamma(s1, anticommutator(C({1, 2}), C({2, 3})));
  const TensorElement rhs = gamma(s1, Rational(2) * (C({1}) * C({3}) + C({2}) * C({1, 2, 3}) - C({1, 3})));
  CHECK(lhs == anticommutator(C({1, 2}), C({1, 3})));
  CHECK(rhs == Rational(2) * (C({2}) * C({3}) + C({1}) * C({1, 2, 3}) - C({2, 3})));
  CHECK(lhs == rhs);
}

TEST_CASE("structure report") {
  const auto j3 = structure_report(3, {2, false, true});
  CHECK(j3["n"] == 3);
  CHECK(j3["casimirs"].size() == 7);
  CHECK(j3["relations"].size() == 28);
  CHECK(j3["passed"] == true);
  CHECK(j3["diagnostics"].size() == 1);
  CHECK(j3["diagnostics"][0]["centralizing"] == false);
  CHECK_FALSE(j3["meta"].contains("timings"));
  for (const auto& c : j3["casimirs"]) CHECK(c["centralizing"] == true);
  CHECK(structure_report(3).dump() == structure_report(3, {3, false, false}).dump());

  const auto timed = structure_report(2, {1, true, false});
  CHECK(timed["meta"].contains("timings"));
}

TEST_CASE("structure report for n = 4") {
  const auto j4 = structure_report(4, {4, false, false});
  CHECK(j4["casimirs"].size() == 15);
  CHECK(j4["relations"].size() == 120);
  CHECK(j4["passed"] == true);
}
