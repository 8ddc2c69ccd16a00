#pragma once

#include <cmath>
#include <functional>

namespace locbmo {

/// Adaptive Simpson quadrature with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 40);

}  // namespace locbmo
