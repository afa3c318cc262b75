#include "ppdp/cuts.hpp"

#include <cmath>
#include <limits>

#include "ppdp/error.hpp"

namespace ppdp {

namespace {

struct SignMass {
  double positive = 0.0;  // 1^T w^+
  double negative = 0.0;  // -1^T w^-
};

SignMass sign_mass(const Vector& w) {
  SignMass mass;
  for (Index i = 0; i < w.size(); ++i) {
    if (w(i) > 0.0) {
      mass.positive += w(i);
    } else {
      mass.negative -= w(i);
    }
  }
  return mass;
}

bool is_zero_coordinate(double value, double scale) {
  return std::abs(value) <= kZeroCoordinateRatio * scale;
}

// 1^T [w / (-w_j)]^+: for w_j > 0 only the negative entries contribute,
// for w_j < 0 only the positive ones.
double bound_from_mass(const SignMass& mass, double wj) {
  return wj > 0.0 ? mass.negative / wj : mass.positive / -wj;
}

double bound_impl(const Vector& w, Index j) {
  if (j < 0 || j >= w.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "bound index out of range");
  }
  const double scale = w.cwiseAbs().maxCoeff();
  if (scale == 0.0 || is_zero_coordinate(w(j), scale)) {
    throw Error(ErrorCode::ZeroCoordinate,
                "coordinate " + std::to_string(j) + " is zero; bound undefined");
  }
  return bound_from_mass(sign_mass(w), w(j));
}

}  // namespace

double bound_primal(const Vector& v, Index j) { return bound_impl(v, j); }

double bound_dual(const Vector& z, Index j) { return bound_impl(z, j); }

CutResult evaluate_cut(const Vector& ref) {
  CutResult cut;
  cut.bounds.assign(static_cast<std::size_t>(ref.size()),
                    std::numeric_limits<double>::infinity());
  if (ref.size() == 0) return cut;
  const double scale = ref.cwiseAbs().maxCoeff();
  if (scale == 0.0) return cut;
  const SignMass mass = sign_mass(ref);
  for (Index j = 0; j < ref.size(); ++j) {
    if (is_zero_coordinate(ref(j), scale)) continue;
    const double bound = bound_from_mass(mass, ref(j));
    cut.bounds[static_cast<std::size_t>(j)] = bound;
    if (bound <= cut.threshold) {
      cut.j.push_back(j);
    }
  }
  return cut;
}

CutResult find_cut(const Vector& ref, CutSpace space) {
  CutResult cut = evaluate_cut(ref);
  if (cut.j.empty()) {
    throw Error(ErrorCode::EmptyCut,
                std::string(space == CutSpace::Primal ? "primal" : "dual") +
                    " cut is empty: no coordinate has bound <= 1/2");
  }
  return cut;
}

}  // namespace ppdp
