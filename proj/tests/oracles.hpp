#pragma once

// Independent reference formulas for the tests. Written from the model
// equations directly, never by calling into the library.

#include <cmath>

namespace oracle {

struct Fluid {
  double A = 1, B = 1, rho_c = 1, T_c = 1, mu_c = 0, p_c = 0, C = 1, D = 0.2, E = 1;
};

inline double energy(const Fluid& f, double rho, double s) {
  const double m = rho - f.rho_c;
  const double q = f.A * m * m + rho * s;
  return f.B / (2 * f.A * f.A) * (q * q + rho * s * rho * s) + f.mu_c * rho + f.T_c * rho * s - f.p_c;
}

// Central differences of energy(); step relative to the argument scale.
inline double fd_rho(const Fluid& f, double rho, double s, double h = 1e-5) {
  return (energy(f, rho + h, s) - energy(f, rho - h, s)) / (2 * h);
}
inline double fd_s(const Fluid& f, double rho, double s, double h = 1e-5) {
  return (energy(f, rho, s + h) - energy(f, rho, s - h)) / (2 * h);
}

// Expanded-term form of the rho partial.
inline double d_rho_terms(const Fluid& f, double rho, double s) {
  const double m = rho - f.rho_c;
  const double BA = f.B / f.A, BA2 = f.B / (f.A * f.A);
  return 2 * f.B * m * m * m + BA * m * m * s + 2 * BA * rho * s * m + 2 * BA2 * rho * s * s + f.mu_c + f.T_c * s;
}

inline double slaved_entropy(const Fluid& f, double rho, double dT) {
  const double m = rho - f.rho_c;
  return (-(f.A * f.A / f.B) * dT - f.A * m * m) / (2 * rho);
}

inline double width(const Fluid& f, double dT) { return std::sqrt(f.C / (2 * f.A * dT)); }
inline double half_jump(const Fluid& f, double dT) { return std::sqrt(f.A * dT / f.B); }
inline double tension(const Fluid& f, double dT) {
  return 2 * std::sqrt(2 * f.C) / 3 * std::pow(f.A * dT, 1.5) / f.B;
}

inline double celerity_sq(const Fluid& f, double rho, double g2) {
  return (f.C * f.E - f.D * f.D) * g2 / (f.C * rho);
}

inline double critical_celerity_sq(const Fluid& f, double dT) {
  return (f.C * f.E - f.D * f.D) * std::pow(f.A, 6) * std::pow(dT, 4) /
         (8 * f.C * f.C * std::pow(f.B, 3) * std::pow(f.rho_c, 5));
}

}  // namespace oracle
