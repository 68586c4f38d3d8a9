#pragma once

#include <Eigen/Core>
#include <vector>

#include "thermocap/eos.hpp"
#include "thermocap/equilibrium.hpp"

namespace thermocap::equilibrium {

// Korteweg stress of the thermocapillary fluid,
//   sigma_ij = -(P - rho div Phi) delta_ij - Phi_j rho_,i - Psi_j s_,i
// with Phi = C grad rho + D grad s, Psi = D grad rho + E grad s, and
// P = rho eps_rho - eps evaluated on the full energy (bulk + gradient part).
// Row index i, column index j.
Eigen::Matrix3d stress_tensor(const FluidParams& p, const ThermoState& st, const Eigen::Vector3d& grad_rho,
                              const Eigen::Vector3d& grad_s, double lap_rho, double lap_s);

// Normal component sigma_yy of a planar profile at every node (fourth-order
// differences in the interior).
std::vector<double> normal_stress(const FluidParams& p, const Profile& prof);

// max |d sigma_yy / dy| over the nodes where every stencil is fourth order.
// Zero for a profile at mechanical equilibrium.
double equilibrium_stress_residual(const FluidParams& p, const Profile& prof);

}  // namespace thermocap::equilibrium
