#include "ospbi/bi_relations.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "ospbi/errors.hpp"
#include "ospbi/version.hpp"

namespace ospbi {

namespace {

nlohmann::ordered_json subset_json(const SubsetIndex& s) { return s.elements(); }

/// Leg-parity pattern of each term ("0110": odd on legs 2 and 3) -> count.
nlohmann::ordered_json parity_profile(const TensorElement& x) {
  std::map<std::string, std::size_t> counts;
  for (const auto& [m, c] : x) {
    std::string key;
    for (const auto& leg : m.legs) key += leg.parity() ? '1' : '0';
    ++counts[key];
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : counts) j[k] = v;
  return j;
}

} // namespace

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& f) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

BIRelationResidual bi_residual_rescaled(const SubsetIndex& a, const SubsetIndex& b, const Rational& scale,
                                        const CasimirCache& cache) {
  if (a.n() != b.n() || a.n() != cache.n())
    throw ArityError("BI relation between subsets of different ambient sets");
  const auto c = [&](const SubsetIndex& s) {
    TensorElement v = cache.get(s);
    if (!s.empty()) v *= scale;
    return v;
  };
  const TensorElement ca = c(a), cb = c(b);
  TensorElement rhs = c((a - b)) * c((b - a)) + c(a & b) * c(a | b) - c(a ^ b);
  rhs *= Rational(2);
  return {a, b, anticommutator(ca, cb) - rhs};
}

BIRelationResidual bi_residual(const SubsetIndex& a, const SubsetIndex& b, const CasimirCache& cache) {
  return bi_residual_rescaled(a, b, Rational(1), cache);
}

BIRelationResidual bi_residual(const SubsetIndex& a, const SubsetIndex& b) {
  if (a.n() != b.n()) throw ArityError("BI relation between subsets of different ambient sets");
  CasimirCache cache(a.n());
  return bi_residual(a, b, cache);
}

bool BIVerification::all_zero() const {
  return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.is_zero(); });
}

std::size_t BIVerification::failures() const {
  return static_cast<std::size_t>(
      std::count_if(relations.begin(), relations.end(), [](const auto& r) { return !r.is_zero(); }));
}

BIVerification verify_bi(const CasimirCache& cache, std::size_t jobs) {
  const std::size_t n = cache.n();
  if (n < 1) throw ContractError("verify_bi needs n >= 1");
  const auto start = std::chrono::steady_clock::now();
  std::vector<SubsetIndex> subsets;
  for (const auto& s : SubsetIndex::all(n))
    if (!s.empty()) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end());
  std::vector<std::pair<SubsetIndex, SubsetIndex>> pairs;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i; j < subsets.size(); ++j) pairs.emplace_back(subsets[i], subsets[j]);

  // Warm the cache in parallel first so the pair loop mostly reads.
  parallel_for(subsets.size(), jobs, [&](std::size_t i) { (void)cache.get(subsets[i]); });

  std::vector<BIRelationResidual> results(pairs.size(), BIRelationResidual{{}, {}, TensorElement(n)});
  parallel_for(pairs.size(), jobs,
               [&](std::size_t i) { results[i] = bi_residual(pairs[i].first, pairs[i].second, cache); });

  BIVerification v;
  v.n = n;
  v.relations = std::move(results);
  v.elapsed = std::chrono::steady_clock::now() - start;
  return v;
}

BIVerification verify_bi(std::size_t n, std::size_t jobs) {
  CasimirCache cache(n);
  return verify_bi(cache, jobs);
}

nlohmann::ordered_json structure_report(std::size_t n, const StructureReportOptions& options) {
  CasimirCache cache(n);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<SubsetIndex> subsets;
  for (const auto& s : SubsetIndex::all(n))
    if (!s.empty()) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end());

  std::vector<nlohmann::ordered_json> entries(subsets.size());
  parallel_for(subsets.size(), options.jobs, [&](std::size_t i) {
    const TensorElement c = cache.get(subsets[i]);
    const bool central = centralizer_residuals(c, n).all_passed();
    nlohmann::ordered_json e;
    e["subset"] = subset_json(subsets[i]);
    e["terms"] = c.size();
    e["parity_profile"] = parity_profile(c);
    e["centralizing"] = central;
    entries[i] = std::move(e);
  });
  const auto t1 = std::chrono::steady_clock::now();
  const BIVerification bi = verify_bi(cache, options.jobs);

  nlohmann::ordered_json j;
  j["n"] = n;
  j["casimirs"] = entries;
  auto& rel = j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : bi.relations) {
    nlohmann::ordered_json e;
    e["A"] = subset_json(r.a);
    e["B"] = subset_json(r.b);
    e["status"] = r.is_zero() ? "pass" : "fail";
    e["residual_terms"] = r.residual.size();
    rel.push_back(std::move(e));
  }
  if (options.diagnostics && n >= 3) {
    const SubsetIndex a(n, {1, 3});
    const TensorElement bar = naive_casimir(a);
    nlohmann::ordered_json d;
    d["name"] = "naive embedding of C" + a.to_string();
    d["subset"] = subset_json(a);
    d["terms"] = bar.size();
    d["centralizing"] = centralizer_residuals(bar, n).all_passed();
    j["diagnostics"] = nlohmann::ordered_json::array({d});
  }
  bool ok = bi.all_zero();
  for (const auto& e : entries) ok = ok && e["centralizing"].get<bool>();
  j["passed"] = ok;
  auto& meta = j["meta"];
  meta["versions"] = {{"ospbi", version_string}, {"report_schema", report_schema_version}};
  if (options.timings) {
    const auto t2 = std::chrono::steady_clock::now();
    meta["timings"] = {{"casimirs_s", std::chrono::duration<double>(t1 - t0).count()},
                       {"relations_s", std::chrono::duration<double>(t2 - t1).count()}};
  }
  return j;
}

} // namespace ospbi
