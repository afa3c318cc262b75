#include "ppdp/certificate.hpp"

#include <cmath>
#include <limits>

#include "ppdp/error.hpp"
#include "ppdp/rational.hpp"

namespace ppdp {

VerificationReport verify_primal(const Matrix& a, const Vector& x, double tol) {
  if (x.size() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "x length differs from the column count of A");
  }
  VerificationReport report;
  report.kind = "primal";
  report.scale = x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
  if (!(report.scale > 0.0) || !x.allFinite()) {
    report.residual = std::numeric_limits<double>::infinity();
    return report;
  }
  const Vector x_hat = x / report.scale;
  const double a_norm = a.inf_norm() > 0.0 ? a.inf_norm() : 1.0;
  report.residual = (a.entries() * x_hat).cwiseAbs().maxCoeff() / a_norm;
  report.min_entry = x_hat.minCoeff();
  report.support = positive_support(x);
  report.pass = report.residual <= tol && report.min_entry >= -tol;
  return report;
}

VerificationReport verify_dual(const Matrix& a, const Vector& u, double tol) {
  if (u.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "u length differs from the row count of A");
  }
  VerificationReport report;
  report.kind = "dual";
  if (!u.allFinite() || u.size() == 0) {
    report.min_entry = -std::numeric_limits<double>::infinity();
    return report;
  }
  const Vector atu = a.entries().transpose() * u;
  const double at_norm = a.entries().cwiseAbs().colwise().sum().maxCoeff();
  report.scale = at_norm * u.cwiseAbs().maxCoeff();
  report.min_entry = atu.minCoeff();
  report.residual = report.scale > 0.0 ? report.min_entry / report.scale : 0.0;
  report.pass = report.scale > 0.0 && report.min_entry > tol * report.scale;
  return report;
}

IndexSet positive_support(const Vector& x) {
  IndexSet s;
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) > 0.0) s.push_back(i);
  }
  return s;
}

OracleVerdict max_support_oracle(const Matrix& a) {
  if (!a.integer_source()) {
    throw Error(ErrorCode::InstanceTooLarge, "support oracle needs an integer matrix");
  }
  if (a.rows() > 4 || a.cols() > 8 || a.entries().cwiseAbs().maxCoeff() > 10.0) {
    throw Error(ErrorCode::InstanceTooLarge,
                "support oracle limited to m <= 4, n <= 8, |a_ij| <= 10");
  }
  const rational::SupportResult exact =
      rational::max_support(rational::RationalMatrix::from_eigen(a.entries()));
  OracleVerdict out;
  out.feasible = exact.feasible;
  for (std::size_t j : exact.support) out.support.push_back(static_cast<Index>(j));
  return out;
}

Matrix reduce_general(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "b length differs from the row count of A");
  }
  Eigen::MatrixXd out(a.rows(), a.cols() + 1);
  out.leftCols(a.cols()) = a.entries();
  out.col(a.cols()) = -b;
  const bool integer = a.integer_source() && b.allFinite() && (b.array() == b.array().round()).all();
  return Matrix(std::move(out), integer);
}

std::optional<Vector> recover_general(const Vector& x_bar) {
  if (x_bar.size() < 1) {
    throw Error(ErrorCode::DimensionMismatch, "x_bar needs the homogenizing coordinate");
  }
  const double last = x_bar(x_bar.size() - 1);
  if (!(last > 0.0)) return std::nullopt;
  return Vector(x_bar.head(x_bar.size() - 1) / last);
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::PrimalFeasible: return "PrimalFeasible";
    case CertificateKind::DualFeasible: return "DualFeasible";
    case CertificateKind::Infeasible: return "Infeasible";
  }
  return "unknown";
}

namespace {

nlohmann::json vector_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
  return {{"kind", report.kind},           {"pass", report.pass},
          {"residual", report.residual},   {"min_entry", report.min_entry},
          {"scale", report.scale},         {"support", report.support}};
}

nlohmann::json to_json(const SolveStats& stats) {
  return {{"bp_calls", stats.bp_calls},
          {"bp_iterations", stats.bp_iterations},
          {"max_bp_iterations", stats.max_bp_iterations},
          {"rescaling_rounds", stats.rescaling_rounds},
          {"factorizations", stats.factorizations},
          {"bit_length", stats.bit_length},
          {"wall_ms", stats.wall_ms},
          {"rank_collapse", stats.rank_collapse}};
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json out = {{"kind", to_string(cert.kind)},
                        {"report", to_json(cert.report)},
                        {"stats", to_json(cert.stats)}};
  if (cert.kind == CertificateKind::Infeasible) {
    out["infeasible_system"] = cert.infeasible_system == System::Primal ? "primal" : "dual";
  }
  if (cert.x.size() > 0) out["x"] = vector_json(cert.x);
  if (cert.u.size() > 0) out["u"] = vector_json(cert.u);
  if (!cert.support.empty() || cert.kind == CertificateKind::PrimalFeasible) {
    out["support"] = cert.support;
  }
  if (cert.ppdp_case != 0) out["ppdp_case"] = cert.ppdp_case;
  if (!cert.note.empty()) out["note"] = cert.note;
  return out;
}

}  // namespace ppdp
