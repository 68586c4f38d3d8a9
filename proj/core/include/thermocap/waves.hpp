#pragma once

#include <Eigen/Core>

#include "thermocap/eos.hpp"

namespace thermocap {

// Point on an acceleration-wave surface: local density, the normal component
// n.grad s and the squared tangential entropy gradient |grad_tg s|^2.
struct WaveLocus {
  double rho = 0.0;
  double grad_s_normal = 0.0;
  double grad_s_tg_sq = 0.0;

  // Throws InvalidState unless rho > 0 and grad_s_tg_sq >= 0.
  void validate() const;
};

// Linear system acting on (lambda1, lambda2, lambda3) for a trial celerity v.
struct JumpSystem {
  Eigen::Matrix3d matrix;
  double v = 0.0;
};

// Celerity v >= 0 (the mirror wave travels at -v) and the jump amplitudes
// lambda1 = [Laplacian rho], lambda2 = [Laplacian s], normalised to lambda2 = 1.
struct CelerityResult {
  double v = 0.0;
  Eigen::Vector3d lambda = Eigen::Vector3d::Zero();
  WaveLocus locus;

  double v_squared() const noexcept { return v * v; }
};

namespace waves {

// Rows [C, D, 0], [D a, E a, rho], [D g2, E g2 - rho v^2, 0] with
// a = n.grad s and g2 = |grad_tg s|^2.
JumpSystem jump_matrix(const FluidParams& p, const WaveLocus& locus, double v);

// Numeric determinant of the assembled matrix.
double jump_determinant(const JumpSystem& system);

// rho v^2 = (CE - D^2) |grad_tg s|^2 / C, lambda = (-D/C, 1, -(a/rho)(E - D^2/C)).
CelerityResult celerity_general(const FluidParams& p, const WaveLocus& locus);

// Bisection root of v -> det(jump_matrix(v)) on [0, 10 v_closed], followed by
// null-space extraction along the smallest singular direction. Requires
// grad_s_tg_sq > 0. Throws RootNotBracketed when the determinant does not
// change sign and RankDeficient when the matrix at the root is not clearly
// of rank two.
CelerityResult celerity_by_determinant(const FluidParams& p, const WaveLocus& locus);

// |grad rho| on the dividing surface rho = rho_c: A dT / sqrt(2 B C).
double dividing_surface_density_gradient(const FluidParams& p, const BulkConditions& bc);

// Locus at rho = rho_c with the wave normal orthogonal to grad rho, so that the
// whole of grad s = (A^2 dT / (2 B rho_c^2)) grad rho is tangential.
WaveLocus dividing_surface_locus(const FluidParams& p, const BulkConditions& bc);

// v^2 = (CE - D^2) A^6 dT^4 / (8 C^2 B^3 rho_c^5), amplitudes at the
// dividing-surface locus.
CelerityResult celerity_at_critical_density(const FluidParams& p, const BulkConditions& bc);

// Tangential acceleration jump H from rho v H = -(D lambda1 + E lambda2) grad_tg s.
// grad_tg_s must be orthogonal to the wave normal; returns zero when v = 0.
Eigen::Vector3d tangential_jump(const FluidParams& p, const CelerityResult& wave,
                                const Eigen::Vector3d& grad_tg_s);

}  // namespace waves
}  // namespace thermocap
