#pragma once

#include <functional>

namespace bb {

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to the given
// relative tolerance (with a small absolute floor for integrals near zero).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10);

}  // namespace bb
