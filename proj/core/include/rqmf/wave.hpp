#ifndef RQMF_WAVE_HPP
#define RQMF_WAVE_HPP

#include <functional>
#include <vector>

#include "rqmf/geometry.hpp"
#include "rqmf/operators.hpp"
#include "rqmf/quaternion.hpp"
#include "rqmf/rqm.hpp"

namespace rqmf::wave {

using mathieu::Family;
using geometry::EllipticPoint;

/// omega_{n,m} = 2 sqrt(q_{n,m}(xi_mu0)) / K with the family-matched
/// root (the growth rate that makes Z e^{omega t} annihilate
/// D + K d/dt).
double omega(Family family, int n, int m, double mu0, double K);

struct Term {
    Family family;
    int n;
    int m;
    double coefficient;
    double omega;
    rqm::ZeroBoundaryFunction mode;
};

/// Finite series sum a_{n,m} Z_{n,m}[mu0] e^{omega_{n,m} t}; grows in t
/// (imaginary-time evolution), so callers should watch max omega * t.
class Solution {
public:
    Solution(double mu0, double K, std::vector<Term> terms);

    ReducedQuaternion evaluate(const EllipticPoint& at, double t) const;
    double scalar_at_t0(const EllipticPoint& at) const;
    /// d/dt of the scalar part at t = 0 (equals sum a omega zeta).
    double scalar_time_derivative_t0(const EllipticPoint& at) const;

    double mu0() const { return mu0_; }
    double wave_parameter() const { return K_; }
    const std::vector<Term>& terms() const { return terms_; }
    double max_omega() const;

private:
    double mu0_;
    double K_;
    std::vector<Term> terms_;
};

struct TermSpec {
    Family family;
    int n;
    int m;
    double coefficient;
};

/// Assemble a solution from explicit coefficients.
Solution from_coefficients(const std::vector<TermSpec>& specs, double mu0, double K);

struct BuildResult {
    Solution solution;
    double projection_residual;  ///< L2 residual of the t = 0 scalar reconstruction
    double initial_l2;
};

/// Project initial scalar data onto the zero-boundary modes with
/// n <= n_max, m <= m_max (both families). The data must vanish at
/// xi = xi_mu0 (checked to 1e-6 relative to its peak).
BuildResult build_solution(const std::function<double(const EllipticPoint&)>& initial_scalar,
                           int n_max, int m_max, double mu0, double K,
                           const geometry::QuadratureGrid& grid);

/// Max |(D + K d/dt) v| over spacetime samples, with the spatial part
/// by finite differences and the time derivative analytic.
struct SpaceTimeSample {
    EllipticPoint point;
    double t;
};

double residual_time_metamonogenic(const Solution& sol,
                                   const std::vector<SpaceTimeSample>& samples,
                                   const ops::Stencil& st = {});

/// Compose initial data on R_{xi0} into data on R_{xi1} by rescaling
/// the xi variable.
std::function<double(const EllipticPoint&)> rescale_initial(
    const std::function<double(const EllipticPoint&)>& initial, double xi0, double xi1);

}  // namespace rqmf::wave

#endif
