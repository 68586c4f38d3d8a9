#include "finite_difference.hpp"

#include <cassert>
#include <cstddef>

namespace thermocap::detail {

std::vector<double> first_derivative(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  assert(n >= 5);
  std::vector<double> d(n);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  d[1] = (f[2] - f[0]) / (2.0 * h);
  d[n - 2] = (f[n - 1] - f[n - 3]) / (2.0 * h);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
  }
  return d;
}

std::vector<double> second_derivative(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  assert(n >= 5);
  const double h2 = h * h;
  std::vector<double> d(n);
  d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
  d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
  d[1] = (f[0] - 2.0 * f[1] + f[2]) / h2;
  d[n - 2] = (f[n - 3] - 2.0 * f[n - 2] + f[n - 1]) / h2;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h2);
  }
  return d;
}

double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  assert(n >= 3 && n % 2 == 1);
  double sum = f[0] + f[n - 1];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  }
  return sum * h / 3.0;
}

}  // namespace thermocap::detail
