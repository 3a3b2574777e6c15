#ifndef RQMF_RQM_HPP
#define RQMF_RQM_HPP

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <vector>

#include "rqmf/geometry.hpp"
#include "rqmf/mathieu.hpp"
#include "rqmf/quaternion.hpp"

namespace rqmf::rqm {

using mathieu::Family;
using geometry::EllipticPoint;

/// Two-dimensional Mathieu function zeta_n[q] = psi(xi) * phi(eta).
double zeta(Family family, int n, double q, const EllipticPoint& at);

/// M_n[lambda]: the reduced-quaternion completion of zeta_n[lambda^2/4]
/// to an element of ker(D + lambda). Scalar part equals zeta exactly;
/// the vector part carries the 1/(cosh 2xi - cos 2eta) prefactor, which
/// is removed analytically near the foci (ODE-fed Taylor expansion once
/// cosh 2xi - cos 2eta < 1e-6).
class RqmFunction {
public:
    static RqmFunction make(Family family, int n, double lambda);

    ReducedQuaternion eval(const EllipticPoint& at) const;
    ReducedQuaternion eval_cartesian(double x, double y) const;

    Family family() const { return family_; }
    int order() const { return n_; }
    double lambda() const { return lambda_; }
    const mathieu::Mode& mode() const { return mode_; }

private:
    RqmFunction(Family f, int n, double lambda, mathieu::Mode mode);

    Family family_;
    int n_;
    double lambda_;
    mathieu::Mode mode_;
    // radial/angular data at the foci feeding the local expansion
    double psi0_, dpsi0_;
};

/// Z_{n,m}[mu] = M_n[2 sqrt(q_{n,m}(xi_mu))]; scalar part vanishes on
/// xi = xi_mu.
class ZeroBoundaryFunction {
public:
    static ZeroBoundaryFunction make(Family family, int n, int m, double mu);

    ReducedQuaternion eval(const EllipticPoint& at) const { return fn_.eval(at); }

    Family family() const { return fn_.family(); }
    int order() const { return fn_.order(); }
    int zero_index() const { return m_; }
    double mu() const { return mu_; }
    const mathieu::RadialZero& zero() const { return zero_; }
    const RqmFunction& rqm() const { return fn_; }

private:
    ZeroBoundaryFunction(int m, double mu, mathieu::RadialZero z, RqmFunction fn)
        : m_(m), mu_(mu), zero_(z), fn_(std::move(fn)) {}

    int m_;
    double mu_;
    mathieu::RadialZero zero_;
    RqmFunction fn_;
};

/// Enumeration order used for file output and projections: the even
/// family block first, lexicographic in (n, m), then the odd family.
std::vector<ZeroBoundaryFunction> enumerate_modes(double mu, int n_max, int m_max);

/// Disk limit F_n[alpha] of the scaled RQM functions; when alpha is a
/// zero of J_n this is the zero-boundary disk mode.
class DiskLimitFunction {
public:
    static DiskLimitFunction from_alpha(Family family, int n, double alpha);
    /// alpha = alpha_{n,m}; scalar part vanishes on |w| = 1.
    static DiskLimitFunction zero_boundary(Family family, int n, int m);

    /// Evaluate at w = (u, v), |w| < 1. w = 0 uses the exact limit.
    ReducedQuaternion eval(double u, double v) const;

    Family family() const { return family_; }
    int order() const { return n_; }
    double alpha() const { return alpha_; }
    std::optional<int> zero_index() const { return m_; }

private:
    DiskLimitFunction(Family f, int n, double alpha, std::optional<int> m)
        : family_(f), n_(n), alpha_(alpha), m_(m) {}

    Family family_;
    int n_;
    double alpha_;
    std::optional<int> m_;
};

/// Scale factor s(q) with s(q) * M_n[2 sqrt(q)] -> F_n[alpha] as the
/// eccentricity vanishes: q^(n/2), times 1/sqrt(2) for n = 0 where the
/// stored 2*pi angular normalization differs from the sqrt(pi) one the
/// limit constants beta_n are built on.
double disk_limit_scale(int n, double q);

/// Cauchy kernel K_lambda(z), z != 0:
///   2 K = lambda Y0(|lambda| |z|) + (i z_x + j z_y)(|lambda|/|z|) Y1(|lambda| |z|).
ReducedQuaternion cauchy_kernel(double lambda, double zx, double zy);

struct CauchyReconstruction {
    ReducedQuaternion value;
    double k_component = 0.0;  ///< quadrature noise indicator
};

/// Reconstruct F(center) from a circle of given radius via
///   F(z0) = -1/2 * Int_C K_lambda(z0 - z) n(z) F(z) ds
/// (trapezoidal rule; spectrally accurate for smooth F). The circle
/// must stay inside `region` scaled by its scale factor.
CauchyReconstruction cauchy_reconstruct(const std::function<ReducedQuaternion(double, double)>& f,
                                        double lambda, double cx, double cy, double radius,
                                        int quad_order, const geometry::EllipseSpec& region);

/// Fields sampled on a grid, mode-major.
std::vector<ReducedQuaternion> sample_on_grid(const RqmFunction& fn,
                                              const geometry::QuadratureGrid& grid);

/// Gram matrix of zero-boundary modes sharing mu over the weighted
/// rectangle; off-diagonals are quadrature noise. Sampling and row
/// assembly are data-parallel across `threads`; every entry is reduced
/// pairwise, so the result is bit-identical for any thread count.
Eigen::MatrixXd gram_matrix(const std::vector<ZeroBoundaryFunction>& modes,
                            const geometry::QuadratureGrid& grid, int threads = 1);

struct ProjectionResult {
    std::vector<double> coefficients;
    double residual_l2 = 0.0;  ///< || target - sum a_i Z_i || on the grid
    double target_l2 = 0.0;
};

ProjectionResult project(const std::function<ReducedQuaternion(const EllipticPoint&)>& target,
                         const std::vector<ZeroBoundaryFunction>& modes,
                         const geometry::QuadratureGrid& grid);

/// Disk Gram matrix of zero-boundary disk modes plus the two norm
/// candidates for each diagonal entry (the J_{n+1} and J_{n+1}^2
/// readings); the measured quadrature value arbitrates.
struct DiskGramReport {
    Eigen::MatrixXd gram;
    std::vector<double> diag_measured;
    std::vector<double> candidate_linear;   ///< beta_n^2 J_{n+1}(alpha) (1+delta_{0n}) pi
    std::vector<double> candidate_squared;  ///< beta_n^2 J_{n+1}(alpha)^2 (1+delta_{0n}) pi
    double max_offdiag_normalized = 0.0;
};

DiskGramReport disk_gram(const std::vector<DiskLimitFunction>& modes, int order_r, int order_theta);

}  // namespace rqmf::rqm

#endif
