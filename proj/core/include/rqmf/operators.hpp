#ifndef RQMF_OPERATORS_HPP
#define RQMF_OPERATORS_HPP

#include <cstdint>
#include <functional>

#include "rqmf/geometry.hpp"
#include "rqmf/quaternion.hpp"

namespace rqmf::ops {

/// Reduced-quaternion field over Cartesian (x, y).
using PlanarField = std::function<ReducedQuaternion(double, double)>;
/// Reduced-quaternion field over the parameter rectangle (xi, eta).
using RectField = std::function<ReducedQuaternion(double, double)>;
/// Scalar field over the parameter rectangle.
using ScalarRectField = std::function<double(double, double)>;

/// Central second-order differences with step h. These operators verify
/// analytic evaluations; nothing in the library computes through them.
struct Stencil {
    double h = 1e-4;
};

/// D = i d/dx + j d/dy applied by central differences with full
/// quaternion products; the k-component the product creates is kept.
Quaternion apply_D_cartesian(const PlanarField& f, double x, double y, const Stencil& st = {});

struct EllipticDResult {
    Quaternion value;
    bool near_focus_warning = false;  ///< point within 10h of a focus
};

/// The elliptical-coordinate form of D (nonconstant coefficients),
/// finite differences in (xi, eta).
EllipticDResult apply_D_elliptic(const RectField& f, const geometry::EllipticPoint& at,
                                 const Stencil& st = {});

/// Laplace-Beltrami form 2/(cosh 2xi - cos 2eta) (d^2/dxi^2 + d^2/deta^2).
double apply_L_elliptic(const ScalarRectField& f, const geometry::EllipticPoint& at,
                        const Stencil& st = {});

struct ResidualSummary {
    double max_residual = 0.0;
    double median_residual = 0.0;
};

/// Samples |(D + lambda) F| (full quaternion norm) at deterministic
/// pseudo-random interior points of the ellipse.
ResidualSummary metamonogenic_residual(const PlanarField& f, double lambda,
                                       const geometry::EllipseSpec& region, int sample_count,
                                       const Stencil& st = {}, std::uint64_t seed = 0x5eed5eedULL);

}  // namespace rqmf::ops

#endif
