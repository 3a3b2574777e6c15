#ifndef RQMF_TEST_ORACLES_HPP
#define RQMF_TEST_ORACLES_HPP

#include <functional>

#include "rqmf/mathieu.hpp"

// Test-side reference implementations, kept independent of the library
// code paths they check.
namespace oracle {

/// J_n by plain ascending power series (long double, terms below 1e-18).
/// Cancellation limits it to roughly |x| <= 20 at 1e-12 accuracy.
double bessel_j_series(int n, double x);

/// J_n for larger x: series seed at x = 12 plus outward RK4 integration
/// of the Bessel ODE (12 < x <= 100).
double bessel_j_ode(int n, double x);

/// m-th positive zero of J_n by bisection on the series oracle.
double bessel_j_zero_bisect(int n, int m);

/// Y_0/Y_1 by Hankel asymptotics at x = 30 plus inward RK4 integration
/// of the Bessel ODE. Valid for 0.05 <= x <= 30.
double bessel_y_ode(int kind, double x);

/// Mathieu characteristic by shooting: RK4 integration of the angular
/// ODE over [0, pi/2] with the parity-class boundary conditions, root
/// in `a` bracketed around `a_guess`.
double mathieu_characteristic_shooting(rqmf::mathieu::Family family, int n, double q,
                                       double a_guess);

/// Simple bracketing root finder used by the oracles.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

}  // namespace oracle

#endif
