#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "thermocap/equilibrium.hpp"
#include "thermocap/json_value.hpp"
#include "thermocap/scaling.hpp"
#include "thermocap/waves.hpp"

namespace thermocap::io {

// "y,rho,s" header, one row per node, 17 significant digits.
std::string profile_csv(const Profile& prof);

// Keys zeta, rho_l, rho_v, sigma_closed, sigma_quad, f0, delta_T.
JsonValue observables_json(const InterfaceObservables& obs);

JsonValue newton_json(const NewtonReport& report);

// Keys v, v_negative, v_squared, lambda1, lambda2, lambda3 and
// locus {rho, grad_s_normal, grad_s_tg_sq}.
JsonValue celerity_json(const CelerityResult& result);

// One row per temperature gap, header
// delta_T,amp_rho,amp_s,zeta_measured,sigma_quad,v,full_vs_reduced_deviation
std::string sweep_csv(const ScalingReport& report);

// Rows, fits and verdicts.
JsonValue scaling_json(const ScalingReport& report, const VerificationSummary& summary);

// Writes to a sibling temporary file and renames it into place, so readers
// never see a partially written artifact.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace thermocap::io
