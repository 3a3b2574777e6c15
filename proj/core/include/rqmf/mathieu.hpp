#ifndef RQMF_MATHIEU_HPP
#define RQMF_MATHIEU_HPP

#include <optional>
#include <vector>

namespace rqmf::mathieu {

/// Plus = even family (ce/Ce, characteristics a_n), Minus = odd family
/// (se/Se, characteristics b_n; n >= 1).
enum class Family { Plus, Minus };

inline constexpr int kMaxModeOrder = 32;
inline constexpr int kMaxZeroIndex = 32;
/// Documented accuracy range of radial evaluation.
inline constexpr double kMaxRadialXi = 5.0;

/// A solved (family, n, q) triple: characteristic value plus Fourier
/// coefficients, evaluable as angular or radial function.
///
/// Normalization: integral of the squared angular function over
/// [0, 2*pi] equals pi, except 2*pi for (Plus, n = 0). Signs fixed by
/// ce_n(0, q) > 0 and se_n'(0, q) > 0.
struct Mode {
    Family family = Family::Plus;
    int n = 0;
    double q = 0.0;
    double characteristic = 0.0;     ///< a_n(q) or b_n(q)
    std::vector<double> coeffs;      ///< Fourier coefficients, lowest harmonic first
    /// Extended-precision copy of coeffs. The hyperbolic radial sum
    /// cancels catastrophically at large q (terms of size e^(2 sqrt(q))
    /// collapsing to O(1) values), so it is fed from here.
    std::vector<long double> coeffs_ld;
    int truncation = 0;

    /// Harmonic multiplier of coeffs[j]: 2j, 2j+1 or 2j+2 depending on
    /// the parity class.
    int harmonic(int j) const;

    struct Eval {
        double value = 0.0;
        double derivative = 0.0;
    };

    /// Angular function phi(eta) and its eta-derivative (cosine or sine
    /// Fourier sum).
    Eval angular(double eta) const;

    /// Radial function psi(xi) and its xi-derivative. Dispatches to the
    /// Bessel-product series for q >= 0.5 and the hyperbolic Fourier sum
    /// below that; xi must lie in [0, kMaxRadialXi].
    Eval radial(double xi) const;

    /// The two radial representations individually (each valid on the
    /// whole range; they serve as mutual cross-checks).
    Eval radial_fourier(double xi) const;
    Eval radial_bessel(double xi) const;

    /// Angular value at eta = 0 and the other special values entering
    /// the joining factors and the Bessel-product constants.
    double angular_at_zero() const;
};

/// Solve the eigenproblem for one mode. Tridiagonal symmetric
/// eigensolve over the appropriate parity class, truncation grown until
/// the coefficient tail decays below 1e-14 of the largest coefficient.
/// Results are cached; q must be positive, n <= 32, and (Minus, 0) is
/// rejected (se_0 vanishes identically).
Mode solve_mode(Family family, int n, double q);

/// m-th positive root in q of the radial function at xi0.
struct RadialZero {
    Family family = Family::Plus;
    int n = 0;
    int m = 1;
    double xi0 = 0.0;
    double q_root = 0.0;
};

/// Sign-change scan in sqrt(q) (zeros are asymptotically equispaced
/// there), then Brent refinement to |dq| < 1e-10. Roots are cached per
/// (family, n, xi0).
RadialZero find_q_zero(Family family, int n, int m, double xi0);

/// Joining factors p'_n(q) and s'_n(q) connecting the radial functions
/// to Bessel functions as q -> 0; s' is absent for n = 0. p'_0 is
/// reported in the sqrt(pi)-normalized convention in which
/// q^(n/2) p'_n -> beta_n holds for every n (the stored n = 0 mode is
/// 2*pi-normalized, which costs a factor sqrt(2) here).
struct JoiningFactors {
    double p_prime = 0.0;
    std::optional<double> s_prime;
};

JoiningFactors joining_factors(int n, double q);

/// Flat view of the q-zero cache for persistence (CLI cache file).
struct ZeroCacheEntry {
    int family;  ///< 0 = Plus, 1 = Minus
    int n;
    int m;
    double xi0;
    double q_root;
};

std::vector<ZeroCacheEntry> export_zero_cache();
void import_zero_cache(const std::vector<ZeroCacheEntry>& entries);

namespace detail {
/// Verification hook: solve at an explicit truncation, bypassing the
/// adaptive growth and the cache.
Mode solve_mode_fixed_truncation(Family family, int n, double q, int truncation);
}  // namespace detail

}  // namespace rqmf::mathieu

#endif
