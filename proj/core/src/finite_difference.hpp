#pragma once

#include <span>
#include <vector>

namespace thermocap::detail {

// Derivatives on a uniform grid. Nodes 2..n-3 use fourth-order central
// stencils, nodes 1 and n-2 second-order central, end nodes second-order
// one-sided. Requires n >= 5.
std::vector<double> first_derivative(std::span<const double> f, double h);
std::vector<double> second_derivative(std::span<const double> f, double h);

// Composite Simpson rule; n must be odd and >= 3.
double simpson(std::span<const double> f, double h);

}  // namespace thermocap::detail
