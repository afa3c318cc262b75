#include "ppdp/solver.hpp"

#include <algorithm>
#include <cmath>

#include "ppdp/error.hpp"

namespace ppdp {

void validate_step_size(double c) {
  if (!(c > 0.0 && c < 2.0)) {
    throw Error(ErrorCode::InvalidArgument, "step size out of (0,2)");
  }
}

int resolve_bit_length(const Matrix& a, const SolverOptions& opts) {
  if (opts.bit_length) {
    if (*opts.bit_length < 1) {
      throw Error(ErrorCode::InvalidArgument, "bit length L must be >= 1");
    }
    return *opts.bit_length;
  }
  return opts.bit_length_rule == BitLengthRule::Encoding ? encoding_length(a)
                                                         : hadamard_bit_length(a);
}

std::size_t default_max_iters(Index r, double c) {
  const double rr = static_cast<double>(std::max<Index>(r, 1));
  // 10 r^3, raised to the potential-function bound 4 r^2 / (2c - c^2) when
  // that is larger (small r with a small step).
  const double potential = 4.0 * rr * rr / (2.0 * c - c * c);
  return static_cast<std::size_t>(std::max(10.0 * rr * rr * rr, std::ceil(potential) + 1.0));
}

}  // namespace ppdp
