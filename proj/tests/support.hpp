#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <string>

#include "ppdp/matrix.hpp"
#include "ppdp/oracle_support.hpp"

namespace ppdp::testing {

inline std::filesystem::path golden_dir() { return PPDP_GOLDEN_DIR; }

inline oracle::GoldenRecord load_golden(const std::string& id) {
  std::ifstream in(golden_dir() / (id + ".json"));
  if (!in) throw std::runtime_error("missing golden record " + id);
  return oracle::golden_from_json(nlohmann::json::parse(in));
}

inline double fraction(const nlohmann::json& s) {
  rational::Rational r(s.get<std::string>());
  r.canonicalize();
  return r.get_d();
}

inline Vector fractions(const nlohmann::json& arr) {
  Vector v(static_cast<Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) v(static_cast<Index>(i)) = fraction(arr[i]);
  return v;
}

inline Eigen::MatrixXd fraction_matrix(const nlohmann::json& rows) {
  Eigen::MatrixXd m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Index>(i), static_cast<Index>(j)) = fraction(rows[i][j]);
    }
  }
  return m;
}

inline Matrix integer_matrix(const nlohmann::json& rows) {
  Eigen::MatrixXd m(static_cast<Index>(rows.size()), static_cast<Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j].get<double>();
    }
  }
  return Matrix(std::move(m), true);
}

inline Matrix random_integer_matrix(std::mt19937_64& rng, Index m, Index n, int bound) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  Eigen::MatrixXd a(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) a(i, j) = pick(rng);
  }
  return Matrix(std::move(a), true);
}

inline IndexSet to_index_set(const nlohmann::json& arr) {
  IndexSet s;
  for (const auto& v : arr) s.push_back(v.get<Index>());
  return s;
}

}  // namespace ppdp::testing
