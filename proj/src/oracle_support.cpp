#include "ppdp/oracle_support.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>

#include "ppdp/error.hpp"

namespace ppdp::oracle {

using rational::Rational;
using rational::RationalMatrix;
using rational::RationalVector;

namespace {

Eigen::MatrixXd to_double(const RationalMatrix& a) {
  Eigen::MatrixXd out(static_cast<Index>(a.rows()), static_cast<Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(static_cast<Index>(i), static_cast<Index>(j)) = a(i, j).get_d();
    }
  }
  return out;
}

// Orthonormal basis of the row space in long double, modified Gram-Schmidt
// with one reorthogonalization pass.
using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

LongMatrix row_space_basis(const Eigen::MatrixXd& a) {
  const Index n = a.cols();
  std::vector<Eigen::Matrix<long double, Eigen::Dynamic, 1>> basis;
  const long double scale = std::max<long double>(a.cwiseAbs().maxCoeff(), 1.0L);
  for (Index i = 0; i < a.rows(); ++i) {
    Eigen::Matrix<long double, Eigen::Dynamic, 1> w = a.row(i).transpose().cast<long double>();
    const long double original = w.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) w -= b.dot(w) * b;
    }
    const long double norm = w.norm();
    if (norm <= 1e-15L * std::max(original, scale)) continue;
    basis.push_back(w / norm);
  }
  LongMatrix out(n, static_cast<Index>(basis.size()));
  for (std::size_t t = 0; t < basis.size(); ++t) out.col(static_cast<Index>(t)) = basis[t];
  return out;
}

}  // namespace

ExplicitProjections materialize_projections(const Matrix& a) {
  const Index n = a.cols();
  if (n > 64) throw Error(ErrorCode::InstanceTooLarge, "explicit projections limited to n <= 64");
  ExplicitProjections out;
  if (a.integer_source() && a.rows() <= 12) {
    const RationalMatrix ra = RationalMatrix::from_eigen(a.entries());
    const RationalMatrix rat = ra.transpose();
    if (auto inv = rational::inverse(ra * rat)) {
      const RationalMatrix q = rat * (*inv) * ra;
      out.q = to_double(q);
      RationalMatrix p(q.rows(), q.cols());
      for (std::size_t i = 0; i < q.rows(); ++i) {
        for (std::size_t j = 0; j < q.cols(); ++j) p(i, j) = (i == j ? 1 : 0) - q(i, j);
      }
      out.p = to_double(p);
      out.exact = true;
      return out;
    }
  }
  const LongMatrix b = row_space_basis(a.entries());
  const LongMatrix q = b * b.transpose();
  out.q = q.cast<double>();
  out.p = (LongMatrix::Identity(n, n) - q).cast<double>();
  return out;
}

std::vector<Matrix> enumerate_tiny_family(Index m, Index n, const std::vector<long long>& entries) {
  if (m < 1 || n < 1 || entries.empty()) {
    throw Error(ErrorCode::InvalidArgument, "family needs m, n >= 1 and a nonempty entry set");
  }
  const double total = std::pow(static_cast<double>(entries.size()), static_cast<double>(m * n));
  if (total > 1e6) throw Error(ErrorCode::InstanceTooLarge, "family exceeds 10^6 matrices");
  const auto count = static_cast<std::size_t>(std::llround(total));
  const std::size_t base = entries.size();
  std::vector<Matrix> out;
  out.reserve(count);
  std::vector<std::size_t> digits(static_cast<std::size_t>(m * n), 0);
  for (std::size_t k = 0; k < count; ++k) {
    Eigen::MatrixXd a(m, n);
    for (Index t = 0; t < m * n; ++t) {
      a(t / n, t % n) = static_cast<double>(entries[digits[static_cast<std::size_t>(t)]]);
    }
    out.emplace_back(std::move(a), true);
    // Last entry varies fastest.
    for (std::size_t t = digits.size(); t-- > 0;) {
      if (++digits[t] < base) break;
      digits[t] = 0;
    }
  }
  return out;
}

namespace {

// Max of every coordinate over the vertices of {B x = 0, 0 <= x <= 1}.
std::vector<Rational> box_maxima(const RationalMatrix& b, std::size_t n) {
  std::vector<Rational> best(n, Rational(0));
  std::vector<int> state(n, 0);  // 0: at zero, 1: at one, 2: free
  const std::size_t rows = b.rows();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i) {
      state[i] = static_cast<int>(c % 3);
      c /= 3;
      if (state[i] == 2) free.push_back(i);
    }
    if (free.size() > rows) continue;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (state[i] == 1) x[i] = 1;
    }
    if (!free.empty()) {
      RationalVector rhs(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
          if (state[i] == 1) rhs[r] -= b(r, i);
        }
      }
      const auto sol = rational::solve_unique(b.columns(free), rhs);
      if (!sol) continue;
      bool inside = true;
      for (std::size_t t = 0; t < free.size(); ++t) {
        inside = inside && (*sol)[t] >= 0 && (*sol)[t] <= 1;
        x[free[t]] = (*sol)[t];
      }
      if (!inside) continue;
    } else {
      bool zero = true;
      for (std::size_t r = 0; r < rows && zero; ++r) {
        Rational sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += b(r, i) * x[i];
        zero = sum == 0;
      }
      if (!zero) continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] > best[i]) best[i] = x[i];
    }
  }
  return best;
}

}  // namespace

std::vector<Rational> normalized_primal_maxima(const Eigen::MatrixXd& a) {
  if (a.cols() > 10) throw Error(ErrorCode::InstanceTooLarge, "vertex enumeration limited to n <= 10");
  return box_maxima(RationalMatrix::from_eigen(a), static_cast<std::size_t>(a.cols()));
}

bool dual_feasible_exact(const Eigen::MatrixXd& a) {
  // Gordan: A^T u > 0 is solvable iff A x = 0, x >= 0 has only x = 0.
  return !rational::max_support(RationalMatrix::from_eigen(a)).feasible;
}

std::optional<std::vector<Rational>> normalized_dual_maxima(const Eigen::MatrixXd& a) {
  if (a.cols() > 10) throw Error(ErrorCode::InstanceTooLarge, "vertex enumeration limited to n <= 10");
  if (!dual_feasible_exact(a)) return std::nullopt;
  const auto n = static_cast<std::size_t>(a.cols());
  // row(A) = {x : N^T x = 0} for a basis N of null(A).
  const std::vector<RationalVector> kernel = rational::null_space(RationalMatrix::from_eigen(a));
  RationalMatrix b(kernel.size(), n);
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i) b(r, i) = kernel[r][i];
  }
  return box_maxima(b, n);
}

std::string digest(const nlohmann::json& value) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : value.dump()) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

nlohmann::json to_json(const GoldenRecord& record) {
  return {{"id", record.id},
          {"operation", record.operation},
          {"input", record.input},
          {"input_digest", record.input_digest},
          {"expected", record.expected},
          {"expected_digest", record.expected_digest},
          {"provenance", record.provenance},
          {"oracle_version", record.oracle_version}};
}

GoldenRecord golden_from_json(const nlohmann::json& j) {
  GoldenRecord r;
  r.id = j.at("id").get<std::string>();
  r.operation = j.at("operation").get<std::string>();
  r.input = j.at("input");
  r.input_digest = j.at("input_digest").get<std::string>();
  r.expected = j.at("expected");
  r.expected_digest = j.at("expected_digest").get<std::string>();
  r.provenance = j.at("provenance").get<std::string>();
  r.oracle_version = j.at("oracle_version").get<std::string>();
  return r;
}

namespace {

using Rows = std::vector<std::vector<long long>>;

Eigen::MatrixXd from_rows(const Rows& rows) {
  Eigen::MatrixXd a(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      a(static_cast<Index>(i), static_cast<Index>(j)) = static_cast<double>(rows[i][j]);
    }
  }
  return a;
}

nlohmann::json rows_json(const Eigen::MatrixXd& a) {
  nlohmann::json out = nlohmann::json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < a.cols(); ++j) row.push_back(static_cast<long long>(a(i, j)));
    out.push_back(row);
  }
  return out;
}

nlohmann::json rational_json(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& r : v) out.push_back(r.get_str());
  return out;
}

nlohmann::json rational_json(const RationalMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(row);
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& text) {
  std::vector<Rational> out;
  for (const std::string& s : text) {
    Rational r(s);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

RationalMatrix exact_q(const RationalMatrix& a) {
  const RationalMatrix at = a.transpose();
  const auto inv = rational::inverse(a * at);
  if (!inv) throw Error(ErrorCode::InvalidArgument, "golden matrices need full row rank");
  return at * (*inv) * a;
}

RationalMatrix identity_minus(const RationalMatrix& q) {
  RationalMatrix p(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) p(i, j) = (i == j ? 1 : 0) - q(i, j);
  }
  return p;
}

std::vector<Rational> times(const RationalMatrix& m, const std::vector<Rational>& y) {
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * y[j];
  }
  return out;
}

// 1^T [w / (-w_j)]^+ in exact arithmetic.
Rational exact_bound(const std::vector<Rational>& w, std::size_t j) {
  Rational sum = 0;
  for (const Rational& wi : w) {
    const Rational ratio = wi / (-w[j]);
    if (ratio > 0) sum += ratio;
  }
  return sum;
}

GoldenRecord make(std::string id, std::string operation, nlohmann::json input,
                  nlohmann::json expected, std::string provenance) {
  GoldenRecord r;
  r.id = std::move(id);
  r.operation = std::move(operation);
  r.input = std::move(input);
  r.input_digest = digest(r.input);
  r.expected = std::move(expected);
  r.expected_digest = digest(r.expected);
  r.provenance = std::move(provenance);
  return r;
}

}  // namespace

std::vector<GoldenRecord> compute_golden_records() {
  std::vector<GoldenRecord> out;

  const std::vector<std::pair<std::string, Rows>> projection_cases = {
      {"projection_row_1_m1", {{1, -1}}},
      {"projection_identity_2", {{1, 0}, {0, 1}}},
      {"projection_two_rows_3", {{1, 0, -1}, {0, 1, -1}}},
      {"projection_ones_2", {{1, 1}}},
      {"projection_i_minus_i_2", {{1, 0, -1, 0}, {0, 1, 0, -1}}},
  };
  for (const auto& [id, rows] : projection_cases) {
    const Eigen::MatrixXd a = from_rows(rows);
    const RationalMatrix q = exact_q(RationalMatrix::from_eigen(a));
    out.push_back(make(id, "projection", {{"a", rows_json(a)}},
                       {{"q", rational_json(q)}, {"p", rational_json(identity_minus(q))}},
                       "exact rational A^T (A A^T)^-1 A"));
  }

  struct ApplyCase {
    std::string id;
    Rows a;
    std::vector<std::string> y;
  };
  const std::vector<ApplyCase> apply_cases = {
      {"apply_row_1_m1_half", {{1, -1}}, {"1/2", "1/2"}},
      {"apply_two_rows_e1", {{1, 0, -1}, {0, 1, -1}}, {"1", "0", "0"}},
      {"apply_ones_initial", {{1, 1}}, {"1/2", "1/2"}},
      {"apply_i_minus_i_initial", {{1, 0, -1, 0}, {0, 1, 0, -1}}, {"1/4", "1/4", "1/4", "1/4"}},
      {"apply_identity_initial", {{1, 0}, {0, 1}}, {"1/2", "1/2"}},
  };
  for (const ApplyCase& c : apply_cases) {
    const Eigen::MatrixXd a = from_rows(c.a);
    const RationalMatrix ra = RationalMatrix::from_eigen(a);
    const RationalMatrix q = exact_q(ra);
    const std::vector<Rational> y = parse_rationals(c.y);
    out.push_back(make(c.id, "apply_projections", {{"a", rows_json(a)}, {"y", c.y}},
                       {{"v", rational_json(times(q, y))},
                        {"z", rational_json(times(identity_minus(q), y))}},
                       "exact rational Q_A y and y - Q_A y"));
  }

  struct IndicatorCase {
    std::string id;
    Rows a;
    std::vector<std::size_t> k;
    std::string space;
  };
  const std::vector<IndicatorCase> indicator_cases = {
      {"indicator_row_1_m1_first", {{1, -1}}, {0}, "row"},
      {"indicator_identity_all", {{1, 0}, {0, 1}}, {0, 1}, "row"},
      {"indicator_two_rows_null_all", {{1, 0, -1}, {0, 1, -1}}, {0, 1, 2}, "null"},
  };
  for (const IndicatorCase& c : indicator_cases) {
    const Eigen::MatrixXd a = from_rows(c.a);
    const RationalMatrix q = exact_q(RationalMatrix::from_eigen(a));
    const RationalMatrix m = c.space == "row" ? q : identity_minus(q);
    std::vector<Rational> ind(static_cast<std::size_t>(a.cols()), Rational(0));
    for (std::size_t k : c.k) ind[k] = 1;
    out.push_back(make(c.id, "indicator_sum",
                       {{"a", rows_json(a)}, {"k", c.k}, {"space", c.space}},
                       {{"w", rational_json(times(m, ind))}},
                       "exact rational projection of the indicator vector"));
  }

  struct BoundCase {
    std::string id;
    std::vector<std::string> w;
    std::size_t j;
  };
  const std::vector<BoundCase> bound_cases = {
      {"bound_mixed_third", {"1", "-1", "1/2"}, 1},
      {"bound_neg_first", {"-1", "1"}, 0},
      {"bound_two_minus_four", {"2", "-4"}, 1},
      {"bound_scaled_mixed_third", {"7", "-7", "7/2"}, 1},
  };
  for (const BoundCase& c : bound_cases) {
    out.push_back(make(c.id, "bound", {{"w", c.w}, {"j", c.j}},
                       {{"bound", exact_bound(parse_rationals(c.w), c.j).get_str()}},
                       "exact rational 1^T [w / (-w_j)]^+"));
  }

  const std::vector<std::pair<std::string, std::vector<std::string>>> cut_cases = {
      {"cut_one_two_small_negatives", {"1", "-1/10", "-1/10"}},
      {"cut_large_positive_small_negative", {"9/10", "-1/100"}},
      {"cut_balanced_pair", {"1", "-1"}},
  };
  for (const auto& [id, w] : cut_cases) {
    const std::vector<Rational> exact = parse_rationals(w);
    nlohmann::json bounds = nlohmann::json::array();
    std::vector<std::size_t> j;
    for (std::size_t i = 0; i < exact.size(); ++i) {
      const Rational b = exact_bound(exact, i);
      bounds.push_back(b.get_str());
      if (b <= Rational(1, 2)) j.push_back(i);
    }
    out.push_back(make(id, "cut", {{"w", w}}, {{"bounds", bounds}, {"j", j}},
                       "exact rational bounds, J = {j : bound_j <= 1/2}"));
  }

  {
    // u = (A A^T)^-1 A y, so that A^T u = Q_A y.
    const Eigen::MatrixXd a = from_rows({{1, 1}});
    const RationalMatrix ra = RationalMatrix::from_eigen(a);
    const std::vector<Rational> y = parse_rationals({"1/2", "1/2"});
    const auto inv = rational::inverse(ra * ra.transpose());
    out.push_back(make("dual_recovery_ones", "row_space_coefficients",
                       {{"a", rows_json(a)}, {"y", {"1/2", "1/2"}}},
                       {{"u", rational_json(times(*inv, times(ra, y)))}},
                       "exact rational (A A^T)^-1 A y"));
  }

  const std::vector<std::pair<std::string, Rows>> support_cases = {
      {"support_row_1_m1", {{1, -1}}},
      {"support_identity_2", {{1, 0}, {0, 1}}},
      {"support_partial_3", {{1, 1, -1}, {0, 1, 0}}},
      {"support_i_minus_i_2", {{1, 0, -1, 0}, {0, 1, 0, -1}}},
      {"support_ones_2", {{1, 1}}},
  };
  for (const auto& [id, rows] : support_cases) {
    const Eigen::MatrixXd a = from_rows(rows);
    const rational::SupportResult s = rational::max_support(RationalMatrix::from_eigen(a));
    out.push_back(make(id, "max_support", {{"a", rows_json(a)}},
                       {{"feasible", s.feasible}, {"support", s.support}},
                       "exact rational extreme-ray enumeration"));
  }

  {
    // Random 6 x 12 instance used by the primal-dual verdict check.
    std::mt19937_64 engine(42);
    Eigen::MatrixXd a(6, 12);
    for (Index i = 0; i < 6; ++i) {
      for (Index j = 0; j < 12; ++j) {
        // Spelled out rather than via a distribution so the draw is portable.
        a(i, j) = static_cast<double>(static_cast<long long>(engine() % 21) - 10);
      }
    }
    const rational::SupportResult s = rational::max_support(RationalMatrix::from_eigen(a));
    out.push_back(make("verdict_random_6x12", "max_support", {{"a", rows_json(a)}},
                       {{"feasible", s.feasible}, {"support", s.support}},
                       "exact rational extreme-ray enumeration"));
  }

  const std::vector<std::pair<std::string, Rows>> primal_max_cases = {
      {"primal_maxima_partial_3", {{1, 1, -1}, {0, 1, 0}}},
      {"primal_maxima_one_two", {{1, -2}}},
      {"primal_maxima_two_rows_4", {{1, -1, 2, -3}, {0, 1, -1, 1}}},
  };
  for (const auto& [id, rows] : primal_max_cases) {
    const Eigen::MatrixXd a = from_rows(rows);
    out.push_back(make(id, "normalized_primal_maxima", {{"a", rows_json(a)}},
                       {{"maxima", rational_json(normalized_primal_maxima(a))}},
                       "exact rational vertex enumeration of {Ax = 0, 0 <= x <= 1}"));
  }

  const std::vector<std::pair<std::string, Rows>> dual_max_cases = {
      {"dual_maxima_one_two", {{1, 2}}},
      {"dual_maxima_two_rows_3", {{1, 0, 1}, {0, 1, 3}}},
  };
  for (const auto& [id, rows] : dual_max_cases) {
    const Eigen::MatrixXd a = from_rows(rows);
    const auto maxima = normalized_dual_maxima(a);
    out.push_back(make(id, "normalized_dual_maxima", {{"a", rows_json(a)}},
                       {{"maxima", maxima ? rational_json(*maxima) : nlohmann::json(nullptr)}},
                       "exact rational vertex enumeration of {x in row(A), 0 <= x <= 1}"));
  }
  return out;
}

}  // namespace ppdp::oracle
