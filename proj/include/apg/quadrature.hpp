#pragma once

#include <functional>

namespace apg {

using Fn1 = std::function<double(double)>;

// Adaptive Simpson on [a,b]; tolerance is relative to the running estimate
// with a small absolute floor.
double integrate(const Fn1& f, double a, double b, double rel_tol = 1e-10);

// Integral of f over (a,b], 0 < a < b, for integrands with power-law behavior
// near 0: adaptive Simpson after the substitution x = e^u.
double integrate_log(const Fn1& f, double a, double b, double rel_tol = 1e-10);

// Integral of f over [a,inf) for integrands decaying at least like a power:
// geometric panels, each integrated in log space, summed until negligible.
double integrate_to_inf(const Fn1& f, double a, double rel_tol = 1e-10);

// 16-point Gauss-Legendre on [a,b].
double gauss16(const Fn1& f, double a, double b);

}  // namespace apg
