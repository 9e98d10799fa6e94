// Command-line front end: ospbi <verb> [options]
//
//   relations                               defining relations of U(osp(1|2))
//   r-properties --n N                      R-matrix identity suite
//   casimir      --n N --subset 1,3 [--explicit]
//   verify-bi    --n N [--diagnostics] [--timings]
//   paths        --n N --subset 1,3
//   eval         --rep FILE --expr EXPR
//
// Exit status: 0 when every executed check passed, 1 when a check failed,
// 2 on invalid input (message as JSON on stderr).

#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ospbi/bi_relations.hpp"
#include "ospbi/casimir.hpp"
#include "ospbi/errors.hpp"
#include "ospbi/expression.hpp"
#include "ospbi/pbw.hpp"
#include "ospbi/repr.hpp"
#include "ospbi/rmatrix.hpp"

namespace {

using namespace ospbi;
using json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::size_t> budget;
  std::size_t n = 0;
  std::string subset;
  bool explicit_form = false;
  bool diagnostics = false;
  bool timings = false;
  std::string rep_file;
  std::string expr;
};

int fail_input(const std::string& message, const std::string& kind) {
  std::cerr << json{{"error", message}, {"kind", kind}}.dump() << '\n';
  return 2;
}

void require_n(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.n < lo || o.n > hi)
    throw ContractError("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                        std::to_string(o.n));
}

int emit(const Report& r, const Options& o) {
  if (o.format == "json")
    std::cout << r.to_json().dump(2) << '\n';
  else
    std::cout << r.to_text();
  return r.all_passed() ? 0 : 1;
}

int run_relations(const Options& o) { return emit(check_defining_relations(), o); }

int run_r_properties(const Options& o) {
  require_n(o, 2, 4);
  return emit(verify_r_properties(o.n), o);
}

int run_casimir(const Options& o) {
  require_n(o, 1, 6);
  const SubsetIndex a = SubsetIndex::parse(o.n, o.subset);
  if (o.explicit_form && a.empty()) throw ContractError("--explicit needs a nonempty subset");
  const TensorElement c = intermediate_casimir(a);
  std::optional<TensorElement> e;
  if (o.explicit_form) e = explicit_casimir(a);
  const bool equal = !e || *e == c;
  if (o.format == "json") {
    json j;
    j["n"] = o.n;
    j["subset"] = a.elements();
    j["terms"] = c.size();
    j["intermediate"] = to_string(c);
    if (e) {
      j["explicit"] = to_string(*e);
      j["equal"] = equal;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "C" << a.to_string() << " (n=" << o.n << ", " << c.size() << " terms)\n";
    std::cout << "intermediate: " << to_string(c) << '\n';
    if (e) {
      std::cout << "explicit:     " << to_string(*e) << '\n';
      std::cout << (equal ? "PASS" : "FAIL") << " intermediate == explicit\n";
    }
  }
  return equal ? 0 : 1;
}

int run_verify_bi(const Options& o) {
  require_n(o, 2, 5);
  const json j = structure_report(o.n, {o.jobs, o.timings, o.diagnostics});
  if (o.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    const auto subset = [](const json& s) {
      std::string out = "{";
      for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i].get<std::size_t>());
      return out + "}";
    };
    std::cout << "# BI(" << o.n << ") in U(osp(1|2))^(x)" << o.n << '\n';
    for (const auto& c : j["casimirs"])
      std::cout << (c["centralizing"].get<bool>() ? "PASS" : "FAIL") << " C" << subset(c["subset"])
                << " centralizes (" << c["terms"].get<std::size_t>() << " terms)\n";
    std::size_t good = 0;
    for (const auto& r : j["relations"]) {
      const bool ok = r["status"] == "pass";
      good += ok;
      std::cout << (ok ? "PASS" : "FAIL") << " {C" << subset(r["A"]) << ", C" << subset(r["B"]) << "}";
      if (!ok) std::cout << "  (residual terms: " << r["residual_terms"].get<std::size_t>() << ")";
      std::cout << '\n';
    }
    if (j.contains("diagnostics"))
      for (const auto& d : j["diagnostics"])
        std::cout << "NOTE " << d["name"].get<std::string>() << " is "
                  << (d["centralizing"].get<bool>() ? "centralizing" : "not centralizing") << '\n';
    std::cout << good << "/" << j["relations"].size() << " relations hold\n";
    if (j["meta"].contains("timings"))
      std::cout << "timings: " << j["meta"]["timings"].dump() << '\n';
  }
  return j["passed"].get<bool>() ? 0 : 1;
}

int run_paths(const Options& o) {
  require_n(o, 1, 6);
  const SubsetIndex a = SubsetIndex::parse(o.n, o.subset);
  if (a.empty()) throw ContractError("--subset must be nonempty");
  const auto paths = generate_paths(a);
  const Report r = path_consistency(a, paths);
  if (o.format == "json") {
    json j = r.to_json();
    auto& arr = j["paths"] = json::array();
    for (const auto& p : paths) arr.push_back({{"K", p.k.elements()}, {"word", p.s.to_string()}});
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& p : paths) std::cout << "path K=" << p.k.to_string() << " s=" << p.s.to_string() << '\n';
    std::cout << r.to_text();
  }
  return r.all_passed() ? 0 : 1;
}

template <class Scalar>
int eval_with(const MatrixRep<Scalar>& rep, const TensorElement& x, const Options& o) {
  const Report check = check_rep(rep);
  const std::size_t budget = o.budget ? *o.budget : memory_budget();
  std::optional<Matrix<Scalar>> m;
  if (check.all_passed()) m = evaluate(x, rep, budget);
  if (o.format == "json") {
    json j;
    j["representation"] = check.to_json();
    j["arity"] = x.arity();
    j["normal_form"] = to_string(x);
    if (m) {
      j["max_abs"] = to_double(max_abs(*m));
      std::istringstream rows(format_matrix(*m));
      auto& arr = j["matrix"] = json::array();
      for (std::string line; std::getline(rows, line);) arr.push_back(line);
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << check.to_text();
    std::cout << "arity: " << x.arity() << '\n' << "normal form: " << to_string(x) << '\n';
    if (m) std::cout << "max |entry|: " << to_double(max_abs(*m)) << '\n' << "matrix:\n" << format_matrix(*m);
  }
  return check.all_passed() ? 0 : 1;
}

int run_eval(const Options& o) {
  const TensorElement x = evaluate(parse_expression(o.expr));
  const LoadedRep rep = load_rep(o.rep_file);
  return std::visit([&](const auto& r) { return eval_with(r, x, o); }, rep);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for U(osp(1|2)) tensor powers and the Bannai-Ito algebra", "ospbi"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--memory-budget", o.budget, "Byte cap for dense evaluations (default: BI_MEMORY_BUDGET or 1 GiB)");

  const auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Number of tensor factors")->required(); };
  const auto subset_opt = [&](CLI::App* sub) {
    sub->add_option("--subset", o.subset, "Subset of [n], e.g. 1,3")->required();
  };

  CLI::App* relations = app.add_subcommand("relations", "Check the defining relations");
  CLI::App* rprops = app.add_subcommand("r-properties", "Check R-matrix identities");
  n_opt(rprops);
  CLI::App* casimir_cmd = app.add_subcommand("casimir", "Print an intermediate Casimir in normal form");
  n_opt(casimir_cmd);
  subset_opt(casimir_cmd);
  casimir_cmd->add_flag("--explicit", o.explicit_form, "Also build the explicit formula and compare");
  CLI::App* bi = app.add_subcommand("verify-bi", "Check every Bannai-Ito relation");
  n_opt(bi);
  bi->add_flag("--diagnostics", o.diagnostics, "Include the naive C13 embedding as a diagnostic");
  bi->add_flag("--timings", o.timings, "Include wall-clock timings (output is then not byte-stable)");
  CLI::App* paths = app.add_subcommand("paths", "Compare the Casimir reached along different paths");
  n_opt(paths);
  subset_opt(paths);
  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression in a matrix representation");
  eval->add_option("--rep", o.rep_file, "Representation file")->required();
  eval->add_option("--expr", o.expr, "Expression, e.g. '8*[Fp,Fm]*P + P'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail_input(e.what(), "usage");
  }

  try {
    if (*relations) return run_relations(o);
    if (*rprops) return run_r_properties(o);
    if (*casimir_cmd) return run_casimir(o);
    if (*bi) return run_verify_bi(o);
    if (*paths) return run_paths(o);
    if (*eval) return run_eval(o);
  } catch (const Error& e) {
    return fail_input(e.what(), e.kind());
  } catch (const std::exception& e) {
    return fail_input(e.what(), "internal");
  }
  return 2;
}
