#include "thermocap/export.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace thermocap::io {
namespace {

std::string number(double x) { return std::isfinite(x) ? fmt::format("{:.17g}", x) : std::string("nan"); }

}  // namespace

std::string profile_csv(const Profile& prof) {
  std::string out = "y,rho,s\n";
  for (std::size_t i = 0; i < prof.size(); ++i) {
    out += fmt::format("{:.17g},{:.17g},{:.17g}\n", prof.y[i], prof.rho[i], prof.s[i]);
  }
  return out;
}

JsonValue observables_json(const InterfaceObservables& obs) {
  JsonValue j = JsonValue::object();
  j.set("zeta", obs.zeta);
  j.set("rho_l", obs.rho_l);
  j.set("rho_v", obs.rho_v);
  j.set("sigma_closed", obs.sigma_closed);
  j.set("sigma_quad", obs.sigma_quad);
  j.set("f0", obs.f0);
  j.set("delta_T", obs.delta_T);
  return j;
}

JsonValue newton_json(const NewtonReport& report) {
  JsonValue j = JsonValue::object();
  j.set("converged", report.converged);
  j.set("iterations", report.iterations);
  j.set("residual_norm", report.residual_norm);
  j.set("tolerance", report.tolerance);
  j.set("residual_history", JsonValue::array(report.residual_history));
  j.set("damping_history", JsonValue::array(report.damping_history));
  return j;
}

JsonValue celerity_json(const CelerityResult& result) {
  JsonValue locus = JsonValue::object();
  locus.set("rho", result.locus.rho);
  locus.set("grad_s_normal", result.locus.grad_s_normal);
  locus.set("grad_s_tg_sq", result.locus.grad_s_tg_sq);

  JsonValue j = JsonValue::object();
  j.set("v", result.v);
  j.set("v_negative", -result.v);
  j.set("v_squared", result.v_squared());
  j.set("lambda1", result.lambda(0));
  j.set("lambda2", result.lambda(1));
  j.set("lambda3", result.lambda(2));
  j.set("locus", std::move(locus));
  return j;
}

std::string sweep_csv(const ScalingReport& report) {
  std::string out = "delta_T,amp_rho,amp_s,zeta_measured,sigma_quad,v,full_vs_reduced_deviation\n";
  for (const ScalingRow& row : report.rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", number(row.delta_T), number(row.amp_rho), number(row.amp_s),
                       number(row.zeta_measured), number(row.sigma_quad), number(row.v),
                       number(row.deviation));
  }
  return out;
}

JsonValue scaling_json(const ScalingReport& report, const VerificationSummary& summary) {
  JsonValue rows = JsonValue::array();
  for (const ScalingRow& row : report.rows) {
    JsonValue r = JsonValue::object();
    r.set("delta_T", row.delta_T);
    r.set("ok", row.ok);
    if (!row.ok) {
      r.set("error", row.error);
    }
    r.set("amp_rho", row.amp_rho);
    r.set("amp_s", row.amp_s);
    r.set("zeta_measured", row.zeta_measured);
    r.set("sigma_quad", row.sigma_quad);
    r.set("v", row.v);
    r.set("full_vs_reduced_deviation", row.deviation);
    r.set("scaled_deviation", row.scaled_deviation);
    r.set("newton_iterations", row.newton_iterations);
    rows.push(std::move(r));
  }

  JsonValue fits = JsonValue::array();
  for (const LawFit& entry : report.fits) {
    JsonValue f = JsonValue::object();
    f.set("law", std::string(to_string(entry.law)));
    f.set("target", entry.target);
    f.set("full_solver_column", entry.full_solver_column);
    if (entry.fit) {
      f.set("slope", entry.fit->slope);
      f.set("intercept", entry.fit->intercept);
      f.set("max_residual", entry.fit->max_residual);
    } else {
      f.set("error", entry.error);
    }
    fits.push(std::move(f));
  }

  JsonValue verdicts = JsonValue::array();
  for (const LawVerdict& v : summary.verdicts) {
    JsonValue o = JsonValue::object();
    o.set("law", std::string(to_string(v.law)));
    o.set("target", v.target);
    o.set("tolerance", v.tolerance);
    o.set("slope", v.slope);
    o.set("passed", v.passed);
    verdicts.push(std::move(o));
  }

  JsonValue j = JsonValue::object();
  j.set("mode", report.full_solver ? "full-solver" : "closed-form");
  j.set("rows", std::move(rows));
  j.set("fits", std::move(fits));
  j.set("verdicts", std::move(verdicts));
  j.set("all_passed", summary.all_passed);
  return j;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

}  // namespace thermocap::io
