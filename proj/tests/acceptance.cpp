// Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "ospbi/bi_relations.hpp"
#include "ospbi/casimir.hpp"
#include "ospbi/pbw.hpp"
#include "ospbi/repr.hpp"
#include "ospbi/rmatrix.hpp"

#ifndef OSPBI_CLI
#error "OSPBI_CLI must point at the ospbi executable"
#endif
#ifndef OSPBI_FIXTURE_DIR
#error "OSPBI_FIXTURE_DIR must be defined"
#endif

using namespace ospbi;
using G = Generator;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

TensorElement T(const PBWElement& x) { return TensorElement::from_pbw(x); }
PBWElement g(G x) { return generator(x); }

std::vector<SubsetIndex> nonempty_subsets(std::size_t n) {
  std::vector<SubsetIndex> out;
  for (const auto& a : SubsetIndex::all(n))
    if (!a.empty()) out.push_back(a);
  return out;
}

Outcome relations() {
  Outcome o;
  const Report r = check_defining_relations();
  o.require(r.checks.size() >= 13, "fewer than 13 relations checked");
  o.require(r.all_passed(), std::to_string(r.failures()) + " relation(s) with nonzero residual");
  o.note = o.ok ? std::to_string(r.checks.size()) + " relations, all residuals zero" : o.note;
  return o;
}

Outcome r_matrix_suite() {
  Outcome o;
  const Report r = verify_r_properties(3);
  o.require(r.all_passed(), std::to_string(r.failures()) + " failing R-matrix check(s)");
  for (const char* needle : {"Delta(Fp) R = R Delta^op(Fp)", "R12^2 = 1", "R21 = R12", "(id x Delta) R = R12 R13",
                             "(Delta x id) R = R23 R13", "Yang-Baxter (123)", "[R12,R13] = 0"})
    o.require(r.find(needle) != nullptr, std::string("missing check: ") + needle);
  if (o.ok) o.note = std::to_string(r.checks.size()) + " identities, all exact";
  return o;
}

Outcome c13_agreement() {
  Outcome o;
  const SubsetIndex a(3, {1, 3});
  const TensorElement bar = naive_casimir(a);
  const TensorElement via_r32 = universal_R_inverse(3, 3, 2) * bar * universal_R(3, 3, 2);
  const TensorElement via_r12 = universal_R(3, 1, 2) * bar * universal_R_inverse(3, 1, 2);
  // (8[Fp P P + 1 1 Fp, Fm P P + 1 1 Fm] + 1) P 1 P
  const auto f = [](G x) { return outer(outer(T(g(x)), T(g(G::P))), T(g(G::P))) + embed(x, 3, 3); };
  const TensorElement p13 = outer(outer(T(g(G::P)), T(one())), T(g(G::P)));
  const TensorElement direct = (Rational(8) * commutator(f(G::Fp), f(G::Fm)) + TensorElement::unit(3)) * p13;
  o.require(via_r32 == via_r12, "R32 and R12 conjugations differ");
  o.require(via_r12 == direct, "conjugation differs from the explicit element");
  o.require(intermediate_casimir(a) == direct, "intermediate_casimir differs from the explicit element");
  o.require(centralizer_residuals(direct, 3).all_passed(), "C13 is not centralizing");
  o.require(!centralizer_residuals(bar, 3).all_passed(), "naive C13 unexpectedly centralizing");
  if (o.ok) o.note = "three constructions equal; C13 centralizes, naive C13 does not";
  return o;
}

Outcome coproduct_of_casimir() {
  Outcome o;
  const auto leg2 = [](const PBWElement& x, const PBWElement& y) { return outer(T(x), T(y)); };
  const TensorElement closed = Rational(16) * (leg2(g(G::Fm), g(G::Fp)) - leg2(g(G::Fp), g(G::Fm))) *
                                   leg2(g(G::P), one()) +
                               leg2(casimir(), g(G::P)) + leg2(g(G::P), casimir()) - leg2(g(G::P), g(G::P));
  const TensorElement d = coproduct(casimir());
  o.require(d == closed, "Delta(C) differs from the closed form");
  const TensorElement with_eight = closed + Rational(7) * leg2(casimir(), g(G::P));
  o.require(!(d == with_eight), "coefficient 8 on C(x)P also matched");
  if (o.ok) o.note = "closed form holds with coefficient 1 on C(x)P (8 is rejected)";
  return o;
}

Outcome centralizers() {
  Outcome o;
  std::size_t checks = 0;
  for (std::size_t n : {3u, 4u})
    for (const auto& a : nonempty_subsets(n)) {
      const Report r = centralizer_residuals(intermediate_casimir(a), n);
      checks += r.checks.size();
      o.require(r.all_passed(), "C" + a.to_string() + " fails to centralize at n=" + std::to_string(n));
    }
  o.require(checks == (7 + 15) * 6, "unexpected number of checks: " + std::to_string(checks));
  if (o.ok) o.note = std::to_string(checks) + " commutators, all zero";
  return o;
}

Outcome bannai_ito() {
  Outcome o;
  const BIVerification v3 = verify_bi(3);
  const CasimirCache cache4(4);
  const BIVerification v4 = verify_bi(cache4, 2);
  o.require(v3.relations.size() == 28, "n=3 did not check 28 pairs");
  o.require(v4.relations.size() == 120, "n=4 did not check 120 pairs");
  o.require(v3.all_zero(), std::to_string(v3.failures()) + " nonzero residual(s) at n=3");
  o.require(v4.all_zero(), std::to_string(v4.failures()) + " nonzero residual(s) at n=4");
  for (const auto& a : SubsetIndex::all(3)) o.require(bi_residual(SubsetIndex(3, {}), a).is_zero(), "empty-set pair fails");
  const auto control =
      bi_residual_rescaled(SubsetIndex(4, {1, 2}), SubsetIndex(4, {2, 3}), Rational(-1, 2), cache4);
  o.require(!control.is_zero(), "wrong-normalization control did not fail");
  if (o.ok) o.note = "28 + 120 pairs zero; rescaled-generator control fails as intended";
  return o;
}

Outcome path_independence() {
  Outcome o;
  for (const auto& a : {SubsetIndex(4, {1, 3}), SubsetIndex(4, {1, 4}), SubsetIndex(4, {2, 4}),
                        SubsetIndex(4, {1, 3, 4}), SubsetIndex(4, {1, 2, 4})}) {
    const auto paths = generate_paths(a);
    std::map<SubsetIndex, int> starts;
    for (const auto& p : paths) ++starts[p.k];
    o.require(starts.size() >= 2, "fewer than two distinct starting sets for " + a.to_string());
    o.require(path_consistency(a, paths).all_passed(), "paths disagree for " + a.to_string());
  }
  const SubsetIndex k(4, {2, 3, 4});
  const TensorElement ck = contiguous_casimir(k);
  for (const auto& word : std::vector<std::vector<std::size_t>>{{2}, {3}, {2, 3, 2}})
    o.require(gamma(Permutation(4, word), ck) == ck, "gamma inside K moved C_K");
  if (o.ok) o.note = "5 subsets, all generated paths equal; gamma_s(C_K) = C_K inside K";
  return o;
}

Outcome explicit_embedding() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& a : nonempty_subsets(4)) {
    o.require(explicit_casimir(a) == intermediate_casimir(a), "mismatch for " + a.to_string());
    ++count;
  }
  if (o.ok) o.note = std::to_string(count) + " subsets of [4] agree";
  return o;
}

Outcome numeric_oracle() {
  Outcome o;
  const MatrixRep<Rational> rho = fundamental_rep();
  const MatrixRep<double> rho_f = rho.cast<double>();
  o.require(check_rep(rho).all_passed(), "exact representation fails check_rep");
  o.require(check_rep(rho_f).all_passed(), "float representation fails check_rep");
  const CasimirCache cache(3);
  const auto zero_exact = [&](const TensorElement& x, const std::string& what) {
    o.require(numeric_residual(x, rho) == 0, what + " is not numerically zero");
    o.require(numeric_residual(x, rho_f) <= 1e-9, what + " exceeds 1e-9 in floating point");
  };
  for (const auto& r : verify_bi(cache).relations)
    zero_exact(r.residual, "BI residual {C" + r.a.to_string() + ", C" + r.b.to_string() + "}");
  for (const auto& a : SubsetIndex::all(3))
    for (G x : all_generators)
      zero_exact(commutator(coproduct_iter(2, g(x)), cache.get(a)), "centralizer residual of C" + a.to_string());
  const TensorElement r12 = universal_R(3, 1, 2), r13 = universal_R(3, 1, 3), r23 = universal_R(3, 2, 3);
  zero_exact(r12 * r13 * r23 - r23 * r13 * r12, "Yang-Baxter residual");
  zero_exact(coproduct(casimir()) * universal_R(2, 1, 2) - universal_R(2, 1, 2) * coproduct(casimir(), true),
             "intertwining residual for C");
  // matrices alone, no symbolic engine
  for (const auto& a : SubsetIndex::all(3))
    o.require(evaluate(cache.get(a), rho) == numeric::intermediate_casimir(a, rho),
              "numeric C" + a.to_string() + " differs from the symbolic one");

  const TensorElement bad = commutator(coproduct_iter(2, g(G::Fp)), naive_casimir(SubsetIndex(3, {1, 3})));
  o.require(to_double(numeric_residual(bad, rho)) > 1e-3, "naive C13 counterexample too small");
  const auto wrong = bi_residual_rescaled(SubsetIndex(3, {1, 2}), SubsetIndex(3, {2, 3}), Rational(-1, 2), cache);
  o.require(to_double(numeric_residual(wrong.residual, rho)) > 1e-3, "wrong-normalization counterexample too small");
  if (o.ok) o.note = "exact zeros match; counterexamples exceed 1e-3";
  return o;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(OSPBI_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int st = ::pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Outcome cli_contract() {
  Outcome o;
  for (const char* args : {"verify-bi --n 3", "r-properties --n 3", "paths --n 4 --subset 1,3"}) {
    const Run a = run_cli(args), b = run_cli(std::string(args) + " --jobs 1");
    o.require(a.status == 0, std::string("'") + args + "' exited with " + std::to_string(a.status));
    o.require(b.status == 0 && a.out == b.out && !a.out.empty(), std::string("'") + args + "' output not byte-stable");
  }
  const std::string fixture = std::string(OSPBI_FIXTURE_DIR) + "/fundamental_rep.json";
  const Run good = run_cli("eval --rep " + fixture + " --expr C");
  o.require(good.status == 0, "eval on the shipped fixture failed");

  const auto dir = std::filesystem::temp_directory_path();
  const auto truncated = dir / "ospbi_truncated_rep.json";
  const auto wrong = dir / "ospbi_wrong_rep.json";
  {
    std::ifstream in(fixture);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    std::ofstream(truncated) << text.substr(0, text.size() / 2);
    std::string broken = text;
    const auto pos = broken.find("\"1/2\"");
    if (pos != std::string::npos) broken.replace(pos, 5, "\"1/3\"");
    std::ofstream(wrong) << broken;
  }
  o.require(run_cli("eval --rep " + truncated.string() + " --expr C").status != 0, "truncated fixture accepted");
  o.require(run_cli("eval --rep " + wrong.string() + " --expr C").status != 0, "fixture with wrong entries accepted");
  std::filesystem::remove(truncated);
  std::filesystem::remove(wrong);
  if (o.ok) o.note = "exit 0 and byte-identical reports; corrupted fixtures rejected";
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "defining relations", 1, relations},
      {2, "R-matrix suite at n=3", 10, r_matrix_suite},
      {3, "C13 triple agreement", 10, c13_agreement},
      {4, "coproduct of the Casimir", 1, coproduct_of_casimir},
      {5, "centralizer certification n=3,4", 300, centralizers},
      {6, "BI(n) certification n=3,4", 600, bannai_ito},
      {7, "path independence", 120, path_independence},
      {8, "explicit embedding equivalence", 120, explicit_embedding},
      {9, "numeric oracle", 60, numeric_oracle},
      {10, "CLI contract", 600, cli_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s > c.limit_s) {
      o.ok = false;
      o.note = "over the " + std::to_string(c.limit_s) + " s limit";
    }
    failed += !o.ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", s, c.limit_s);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << timing << "] - "
              << o.note << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
