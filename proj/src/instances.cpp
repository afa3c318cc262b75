#include "ppdp/instances.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "ppdp/error.hpp"

namespace ppdp {

void validate(const GeneratorSpec& spec) {
  if (spec.lo > spec.hi) throw Error(ErrorCode::InvalidSpec, "invalid range");
  if (spec.m < 1 || spec.n < 1 || spec.m > spec.n) {
    throw Error(ErrorCode::InvalidSpec, "need 1 <= m <= n");
  }
  if (spec.count < 1) throw Error(ErrorCode::InvalidSpec, "count must be at least 1");
}

std::vector<Matrix> generate(const GeneratorSpec& spec) {
  validate(spec);
  std::vector<Matrix> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k) {
    std::mt19937_64 engine(spec.seed + k);
    Eigen::MatrixXd a(spec.m, spec.n);
    for (Index i = 0; i < spec.m; ++i) {
      for (Index j = 0; j < spec.n; ++j) {
        a(i, j) = static_cast<double>(uniform_integer(engine, spec.lo, spec.hi));
      }
    }
    out.emplace_back(std::move(a), true);
  }
  return out;
}

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::vector<double> parse_numbers(const std::string& text, std::size_t line_no) {
  std::istringstream in(text);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError(line_no, "not a number: '" + token + "'");
    if (!std::isfinite(value)) throw ParseError(line_no, "non-finite entry");
    values.push_back(value);
  }
  return values;
}

bool all_integer(const std::vector<double>& values) {
  for (double v : values) {
    if (v != std::round(v)) return false;
  }
  return true;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!skippable(line)) return true;
    }
    return false;
  };

  if (!next()) throw ParseError(line_no + 1, "missing header 'm n'");
  const std::vector<double> header = parse_numbers(line, line_no);
  if (header.size() != 2 || !all_integer(header) || header[0] < 1 || header[1] < 1) {
    throw ParseError(line_no, "header must be two positive integers 'm n'");
  }
  const auto m = static_cast<Index>(header[0]);
  const auto n = static_cast<Index>(header[1]);

  Eigen::MatrixXd a(m, n);
  bool integer = true;
  for (Index i = 0; i < m; ++i) {
    if (!next()) throw ParseError(line_no + 1, "expected " + std::to_string(m) + " rows");
    if (line.find("b:") != std::string::npos) {
      throw ParseError(line_no, "expected " + std::to_string(m) + " rows");
    }
    const std::vector<double> row = parse_numbers(line, line_no);
    if (static_cast<Index>(row.size()) != n) {
      throw ParseError(line_no, "row has " + std::to_string(row.size()) + " entries, expected " +
                                    std::to_string(n));
    }
    integer = integer && all_integer(row);
    for (Index j = 0; j < n; ++j) a(i, j) = row[static_cast<std::size_t>(j)];
  }

  Problem problem{Matrix(std::move(a), integer), std::nullopt};
  if (next()) {
    const auto colon = line.find("b:");
    if (colon == std::string::npos || !skippable(line.substr(0, colon))) {
      throw ParseError(line_no, "unexpected content after the matrix");
    }
    const std::vector<double> b = parse_numbers(line.substr(colon + 2), line_no);
    if (static_cast<Index>(b.size()) != m) {
      throw ParseError(line_no, "b has " + std::to_string(b.size()) + " entries, expected " +
                                    std::to_string(m));
    }
    problem.b = Eigen::Map<const Vector>(b.data(), m);
    if (next()) throw ParseError(line_no, "unexpected content after b");
  }
  return problem;
}

Problem read_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

namespace {

std::string format_number(double value) {
  if (value == std::round(value) && std::abs(value) < 9007199254740992.0) {
    return std::to_string(static_cast<long long>(value));
  }
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

}  // namespace

std::string format_problem(const Matrix& a, const std::optional<Vector>& b) {
  std::ostringstream out;
  out << a.rows() << ' ' << a.cols() << '\n';
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_number(a(i, j));
    }
    out << '\n';
  }
  if (b) {
    if (b->size() != a.rows()) {
      throw Error(ErrorCode::DimensionMismatch, "b length differs from the row count of A");
    }
    out << "b:";
    for (Index i = 0; i < b->size(); ++i) out << ' ' << format_number((*b)(i));
    out << '\n';
  }
  return out.str();
}

void write_problem(const std::filesystem::path& path, const Matrix& a,
                   const std::optional<Vector>& b) {
  const std::string text = format_problem(a, b);
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace ppdp
