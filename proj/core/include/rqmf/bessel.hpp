#ifndef RQMF_BESSEL_HPP
#define RQMF_BESSEL_HPP

#include <map>
#include <utility>
#include <vector>

namespace rqmf::bessel {

/// Maximum order supported by the public single-value routines.
inline constexpr int kMaxOrder = 64;
/// Maximum zero index m in j_zero.
inline constexpr int kMaxZeroIndex = 64;
/// Factorial overflow bound for beta_constant.
inline constexpr int kMaxBetaOrder = 20;

/// J_n(x), n = 0..64. Ascending power series for |x| <= 12, downward
/// Miller recurrence with normalization otherwise. Absolute error is
/// held below 1e-12 for |x| <= 100.
double j(int n, double x);

/// J_n'(x) through 2 J_n' = J_{n-1} - J_{n+1} (J_0' = -J_1).
double j_prime(int n, double x);

/// J_0(x), ..., J_nmax(x) in one pass. Used by the Bessel-product
/// series for the radial Mathieu functions, which needs contiguous
/// runs of orders well beyond kMaxOrder; nmax is capped at 512.
std::vector<double> j_sequence(int nmax, double x);

enum class SecondKind { Y0, Y1 };

/// Y_0 or Y_1 at x > 0. Ascending series (with the Euler-Mascheroni
/// constant) below the switch point, Hankel asymptotics above it.
double y(SecondKind kind, double x);

double y0(double x);
double y1(double x);

/// m-th positive zero of J_n (n <= 64, 1 <= m <= 64). McMahon guess,
/// Newton refinement, bisection fallback. Results are cached.
double j_zero(int n, int m);

/// beta_0 = 1/sqrt(2), beta_n = 2^(n-1) n! for n >= 1 (n <= 20).
double beta_constant(int n);

/// Snapshot of the zero cache, keyed (n, m). For inspection and the
/// interlacing property tests; the live cache is internally locked.
std::map<std::pair<int, int>, double> zero_table_snapshot();

}  // namespace rqmf::bessel

#endif
