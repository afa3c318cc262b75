#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "ppdp/matrix.hpp"

namespace ppdp {

struct GeneratorSpec {
  Index m = 1;
  Index n = 1;
  long long lo = -100;
  long long hi = 100;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

/// Throws InvalidSpec unless lo <= hi, 1 <= m <= n and count >= 1.
void validate(const GeneratorSpec& spec);

/// Matrix k is drawn from std::mt19937_64 seeded with seed + k, entries
/// uniform on [lo, hi] by rejection sampling, row-major order.
std::vector<Matrix> generate(const GeneratorSpec& spec);

/// Uniform integer on [lo, hi] from a 64-bit word source, bias-free.
template <typename Engine>
long long uniform_integer(Engine& engine, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) {
    return static_cast<long long>(engine());
  }
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t draw = engine();
  while (draw >= limit) {
    draw = engine();
  }
  return lo + static_cast<long long>(draw % range);
}

struct Problem {
  Matrix a;
  std::optional<Vector> b;
};

/// Text format: "m n", then m rows of n numbers, then optionally
/// "b: b_1 ... b_m". Blank lines and lines starting with '#' are skipped.
Problem read_problem(const std::filesystem::path& path);
Problem parse_problem(const std::string& text);
void write_problem(const std::filesystem::path& path, const Matrix& a,
                   const std::optional<Vector>& b = std::nullopt);
std::string format_problem(const Matrix& a,
                           const std::optional<Vector>& b = std::nullopt);

}  // namespace ppdp
