#include "thermocap/stress.hpp"

#include <algorithm>
#include <cmath>

#include "finite_difference.hpp"

namespace thermocap::equilibrium {

Eigen::Matrix3d stress_tensor(const FluidParams& p, const ThermoState& st, const Eigen::Vector3d& grad_rho,
                              const Eigen::Vector3d& grad_s, double lap_rho, double lap_s) {
  const Eigen::Vector3d phi = p.C() * grad_rho + p.D() * grad_s;
  const Eigen::Vector3d psi = p.D() * grad_rho + p.E() * grad_s;
  const double div_phi = p.C() * lap_rho + p.D() * lap_s;
  const double gradient_energy = 0.5 * (p.C() * grad_rho.squaredNorm() + 2.0 * p.D() * grad_rho.dot(grad_s) +
                                        p.E() * grad_s.squaredNorm());
  const double P = eos::pressure(p, st) - gradient_energy;
  return -(P - st.rho * div_phi) * Eigen::Matrix3d::Identity() - grad_rho * phi.transpose() -
         grad_s * psi.transpose();
}

std::vector<double> normal_stress(const FluidParams& p, const Profile& prof) {
  const double h = prof.spacing();
  const std::vector<double> d_rho = detail::first_derivative(prof.rho, h);
  const std::vector<double> d_s = detail::first_derivative(prof.s, h);
  const std::vector<double> dd_rho = detail::second_derivative(prof.rho, h);
  const std::vector<double> dd_s = detail::second_derivative(prof.s, h);

  std::vector<double> syy(prof.size());
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const Eigen::Vector3d grad_rho(0.0, d_rho[i], 0.0);
    const Eigen::Vector3d grad_s(0.0, d_s[i], 0.0);
    const Eigen::Matrix3d sigma =
        stress_tensor(p, ThermoState{prof.rho[i], prof.s[i]}, grad_rho, grad_s, dd_rho[i], dd_s[i]);
    syy[i] = sigma(1, 1);
  }
  return syy;
}

double equilibrium_stress_residual(const FluidParams& p, const Profile& prof) {
  if (prof.size() < 9) {
    throw Error(ErrorKind::InvalidProfile, "stress residual needs at least 9 nodes");
  }
  const std::vector<double> syy = normal_stress(p, prof);
  const std::vector<double> slope = detail::first_derivative(syy, prof.spacing());
  double worst = 0.0;
  for (std::size_t i = 4; i + 4 < prof.size(); ++i) {
    worst = std::max(worst, std::abs(slope[i]));
  }
  return worst;
}

}  // namespace thermocap::equilibrium
