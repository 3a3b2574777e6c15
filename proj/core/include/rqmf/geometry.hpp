#ifndef RQMF_GEOMETRY_HPP
#define RQMF_GEOMETRY_HPP

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rqmf/quaternion.hpp"

namespace rqmf::geometry {

/// Point in elliptical coordinates, x = cosh(xi) cos(eta),
/// y = sinh(xi) sin(eta). Foci at (+-1, 0).
struct EllipticPoint {
    double xi = 0.0;
    double eta = 0.0;  ///< kept in [0, 2*pi)
};

std::array<double, 2> to_cartesian(const EllipticPoint& p);

/// Inverse map with xi >= 0 and eta in [0, 2*pi). On the focal slit
/// (y = 0, |x| <= 1) the y -> 0+ branch is returned, i.e. eta in [0, pi].
EllipticPoint to_elliptic(double x, double y);

/// xi_mu with mu*cosh(xi_mu) = 1, i.e. arccosh(1/mu); 0 < mu < 1.
double xi_for_mu(double mu);

/// Parameter rectangle [0, xi0) x [0, 2*pi) plus the scale factor of the
/// physical ellipse (1 for the confocal ellipse itself, mu for the
/// rescaled near-disk domain).
struct EllipseSpec {
    double xi0 = 1.0;
    std::optional<double> mu;  ///< when set, xi0 == arccosh(1/mu)
    double scale = 1.0;

    static EllipseSpec from_xi0(double xi0, double scale = 1.0);
    /// Sets xi0 = xi_mu and records mu; scale defaults to mu (the
    /// rescaled domain whose union over mu is the unit disk).
    static EllipseSpec from_mu(double mu, std::optional<double> scale = std::nullopt);
};

/// Tensor Gauss-Legendre grid on [0, xi0] x [0, 2*pi] with the area
/// weight scale^2 * (cosh 2xi - cos 2eta)/2 folded into `weight`.
struct QuadratureGrid {
    EllipseSpec spec;
    std::vector<double> nodes_xi, wxi;
    std::vector<double> nodes_eta, weta;
    std::vector<double> weight;  ///< row-major, index = i_xi * nodes_eta.size() + i_eta

    size_t size() const { return weight.size(); }
    size_t index(size_t ixi, size_t ieta) const { return ixi * nodes_eta.size() + ieta; }
    double total_weight() const;
    /// Closed form of the integral of 1: scale^2 * pi * sinh(xi0) cosh(xi0).
    double exact_area() const;
};

QuadratureGrid make_grid(const EllipseSpec& spec, int order_xi, int order_eta);

/// Gauss-Legendre nodes/weights on [-1, 1] (Newton on the Legendre
/// recurrence).
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Weighted inner products of grid-sampled fields. Shape mismatch with
/// the grid is an error.
double inner_product(std::span<const double> f, std::span<const double> g, const QuadratureGrid& grid);
double inner_product(std::span<const ReducedQuaternion> f, std::span<const ReducedQuaternion> g,
                     const QuadratureGrid& grid);

/// Per-condition deviations for the three symmetry requirements of
/// fields on the parameter rectangle: (a) 2*pi periodicity in eta,
/// (b) f(0, eta) = f(0, 2*pi - eta), (c) odd xi-derivative at xi = 0.
struct SymmetryReport {
    double periodicity = 0.0;
    double displacement = 0.0;
    double gradient = 0.0;

    bool pass(double tol) const {
        return periodicity <= tol && displacement <= tol && gradient <= tol;
    }
};

/// f(xi, eta) scalar field; dfdxi optional analytic xi-derivative
/// (finite differences are used when absent).
SymmetryReport check_symmetry_class(const std::function<double(double, double)>& f,
                                    double xi0, int samples = 64,
                                    const std::function<double(double, double)>* dfdxi = nullptr);

}  // namespace rqmf::geometry

#endif
