#include "ospbi/repr.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ospbi/version.hpp"

namespace ospbi {

MatrixRep<Rational> fundamental_rep() {
  using G = Generator;
  MatrixRep<Rational> rep;
  rep.dim = 3;
  rep.grading = {1, -1, 1};
  for (auto& m : rep.matrices) m = Matrix<Rational>::Zero(3, 3);
  // basis index: 0 = v+, 1 = v0, 2 = v-
  rep[G::H](0, 0) = Rational(1, 2);
  rep[G::H](2, 2) = Rational(-1, 2);
  rep[G::Fp](1, 2) = 1;
  rep[G::Fp](0, 1) = 1;
  rep[G::Fm](1, 0) = Rational(1, 4);
  rep[G::Fm](2, 1) = Rational(-1, 4);
  rep[G::Ep](0, 2) = 4;
  rep[G::Em](2, 0) = Rational(1, 4);
  for (std::size_t i = 0; i < 3; ++i) rep[G::P](i, i) = rep.grading[i];
  return rep;
}

std::size_t memory_budget() {
  if (const char* env = std::getenv("BI_MEMORY_BUDGET")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ContractError(std::string("BI_MEMORY_BUDGET is not a byte count: '") + env + "'");
  }
  return std::size_t{1} << 30;
}

namespace {

template <class Scalar>
MatrixRep<Scalar> build(const nlohmann::json& j, std::size_t dim, std::vector<int> grading) {
  MatrixRep<Scalar> rep;
  rep.dim = dim;
  rep.grading = std::move(grading);
  const auto& mats = j.at("matrices");
  for (Generator g : all_generators) {
    const std::string key(name(g));
    if (!mats.contains(key)) throw ContractError("representation file lacks matrix '" + key + "'");
    const auto& rows = mats.at(key);
    if (!rows.is_array() || rows.size() != dim)
      throw ContractError("matrix '" + key + "' does not have " + std::to_string(dim) + " rows");
    Matrix<Scalar> m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!rows[i].is_array() || rows[i].size() != dim)
        throw ContractError("row " + std::to_string(i) + " of '" + key + "' does not have " + std::to_string(dim) +
                            " entries");
      for (std::size_t k = 0; k < dim; ++k) {
        const auto& e = rows[i][k];
        Rational q;
        if (e.is_string()) {
          try {
            q = parse_rational(e.get<std::string>());
          } catch (const std::invalid_argument& ex) {
            throw ContractError("matrix '" + key + "': " + ex.what());
          }
          if constexpr (std::is_floating_point_v<Scalar>)
            m(i, k) = q.convert_to<double>();
          else
            m(i, k) = q;
        } else if (e.is_number()) {
          if constexpr (std::is_floating_point_v<Scalar>)
            m(i, k) = e.get<double>();
          else
            m(i, k) = Rational(e.get<double>());
        } else {
          throw ContractError("matrix '" + key + "' has a non-numeric entry");
        }
      }
    }
    rep[g] = std::move(m);
  }
  return rep;
}

bool has_float_entries(const nlohmann::json& mats) {
  for (const auto& [k, rows] : mats.items())
    for (const auto& row : rows)
      for (const auto& e : row)
        if (e.is_number_float()) return true;
  return false;
}

} // namespace

LoadedRep parse_rep(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("representation file is not valid JSON: ") + e.what());
  }
  try {
    if (j.contains("version") && j.at("version").get<int>() != rep_fixture_version)
      throw ContractError("unsupported representation file version " + j.at("version").dump());
    const auto dim = j.at("dim").get<std::size_t>();
    if (dim == 0) throw ContractError("representation dimension must be positive");
    auto grading = j.at("grading").get<std::vector<int>>();
    if (grading.size() != dim) throw ContractError("grading length does not match the dimension");
    if (!j.at("matrices").is_object()) throw ContractError("'matrices' must be an object");
    if (has_float_entries(j.at("matrices"))) return build<double>(j, dim, std::move(grading));
    return build<Rational>(j, dim, std::move(grading));
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed representation file: ") + e.what());
  }
}

LoadedRep load_rep(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open representation file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_rep(ss.str());
}

std::string serialize_rep(const MatrixRep<Rational>& rep) {
  nlohmann::ordered_json j;
  j["version"] = rep_fixture_version;
  j["dim"] = rep.dim;
  j["grading"] = rep.grading;
  auto& mats = j["matrices"];
  for (Generator g : all_generators) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    const auto& m = rep[g];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
      rows.push_back(std::move(row));
    }
    mats[std::string(name(g))] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

std::string format_matrix(const Matrix<Rational>& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) os << (k ? " " : "") << to_string(m(i, k));
    os << '\n';
  }
  return os.str();
}

std::string format_matrix(const Matrix<double>& m) {
  std::ostringstream os;
  os.precision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) os << (k ? " " : "") << m(i, k);
    os << '\n';
  }
  return os.str();
}

} // namespace ospbi
