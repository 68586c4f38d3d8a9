#include "thermocap/waves.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>

#include "thermocap/errors.hpp"

namespace thermocap {

void WaveLocus::validate() const {
  if (!std::isfinite(rho) || rho <= 0.0) {
    throw Error(ErrorKind::InvalidState, "wave locus density must be > 0");
  }
  if (!std::isfinite(grad_s_normal) || !std::isfinite(grad_s_tg_sq) || grad_s_tg_sq < 0.0) {
    throw Error(ErrorKind::InvalidState, "tangential entropy gradient must be finite and >= 0");
  }
}

namespace waves {

JumpSystem jump_matrix(const FluidParams& p, const WaveLocus& locus, double v) {
  const double a = locus.grad_s_normal;
  const double g2 = locus.grad_s_tg_sq;
  JumpSystem system;
  system.v = v;
  system.matrix << p.C(), p.D(), 0.0,
                   p.D() * a, p.E() * a, locus.rho,
                   p.D() * g2, p.E() * g2 - locus.rho * v * v, 0.0;
  return system;
}

double jump_determinant(const JumpSystem& system) { return system.matrix.determinant(); }

CelerityResult celerity_general(const FluidParams& p, const WaveLocus& locus) {
  locus.validate();
  CelerityResult result;
  result.locus = locus;
  result.v = std::sqrt(p.gradient_determinant() * locus.grad_s_tg_sq / (p.C() * locus.rho));
  result.lambda = Eigen::Vector3d(-p.D() / p.C(), 1.0,
                                  -(locus.grad_s_normal / locus.rho) * (p.E() - p.D() * p.D() / p.C()));
  return result;
}

CelerityResult celerity_by_determinant(const FluidParams& p, const WaveLocus& locus) {
  locus.validate();
  if (locus.grad_s_tg_sq <= 0.0) {
    throw Error(ErrorKind::InvalidState, "determinant root needs a tangential entropy gradient");
  }
  const double v_closed = celerity_general(p, locus).v;
  const auto det = [&](double v) { return jump_determinant(jump_matrix(p, locus, v)); };

  double lo = 0.0;
  double hi = 10.0 * v_closed;
  const double f_lo = det(lo);
  const double f_hi = det(hi);
  if (!(std::signbit(f_lo) != std::signbit(f_hi)) || f_lo == 0.0 || f_hi == 0.0) {
    throw Error(ErrorKind::RootNotBracketed, "determinant keeps its sign on [0, 10 v]");
  }
  const bool lo_negative = std::signbit(f_lo);
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const double f_mid = det(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (std::signbit(f_mid) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  CelerityResult result;
  result.locus = locus;
  result.v = 0.5 * (lo + hi);

  const JumpSystem system = jump_matrix(p, locus, result.v);
  const Eigen::JacobiSVD<Eigen::Matrix3d> svd(system.matrix, Eigen::ComputeFullV);
  const Eigen::Vector3d sv = svd.singularValues();
  if (!(sv(1) > 1e3 * sv(2))) {
    throw Error(ErrorKind::RankDeficient, "jump matrix at the root is not of rank two");
  }
  Eigen::Vector3d null = svd.matrixV().col(2);
  if (std::abs(null(1)) > 1e-12 * null.norm()) {
    null /= null(1);
  } else {
    null.normalize();
  }
  result.lambda = null;
  return result;
}

double dividing_surface_density_gradient(const FluidParams& p, const BulkConditions& bc) {
  return p.A() * bc.delta_T() / std::sqrt(2.0 * p.B() * p.C());
}

WaveLocus dividing_surface_locus(const FluidParams& p, const BulkConditions& bc) {
  const double grad_rho = dividing_surface_density_gradient(p, bc);
  const double ratio = p.A() * p.A() * bc.delta_T() / (2.0 * p.B() * p.rho_c() * p.rho_c());
  const double grad_s = ratio * grad_rho;
  return WaveLocus{.rho = p.rho_c(), .grad_s_normal = 0.0, .grad_s_tg_sq = grad_s * grad_s};
}

CelerityResult celerity_at_critical_density(const FluidParams& p, const BulkConditions& bc) {
  CelerityResult result = celerity_general(p, dividing_surface_locus(p, bc));
  const double A = p.A();
  const double B = p.B();
  const double C = p.C();
  const double dT2 = bc.delta_T() * bc.delta_T();
  const double v2 = p.gradient_determinant() * std::pow(A, 6) * dT2 * dT2 /
                    (8.0 * C * C * B * B * B * std::pow(p.rho_c(), 5));
  result.v = std::sqrt(v2);
  return result;
}

Eigen::Vector3d tangential_jump(const FluidParams& p, const CelerityResult& wave,
                                const Eigen::Vector3d& grad_tg_s) {
  if (wave.v <= 0.0) {
    return Eigen::Vector3d::Zero();
  }
  const double weight = p.D() * wave.lambda(0) + p.E() * wave.lambda(1);
  return -weight / (wave.locus.rho * wave.v) * grad_tg_s;
}

}  // namespace waves
}  // namespace thermocap
