#include "rqmf/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace rqmf::ops {

namespace {
const Quaternion kUnitI{0.0, 1.0, 0.0, 0.0};
const Quaternion kUnitJ{0.0, 0.0, 1.0, 0.0};
}  // namespace

Quaternion apply_D_cartesian(const PlanarField& f, double x, double y, const Stencil& st) {
    if (!(st.h > 0.0)) throw std::domain_error("apply_D_cartesian: step must be positive");
    const double h = st.h;
    const ReducedQuaternion fx = (f(x + h, y) - f(x - h, y)) * (0.5 / h);
    const ReducedQuaternion fy = (f(x, y + h) - f(x, y - h)) * (0.5 / h);
    return kUnitI * fx.full() + kUnitJ * fy.full();
}

EllipticDResult apply_D_elliptic(const RectField& f, const geometry::EllipticPoint& at,
                                 const Stencil& st) {
    if (!(st.h > 0.0)) throw std::domain_error("apply_D_elliptic: step must be positive");
    const double h = st.h;
    const double xi = at.xi, eta = at.eta;
    if (xi < h) throw std::domain_error("apply_D_elliptic: point too close to the xi = 0 edge");

    EllipticDResult out;
    // foci sit at (xi, eta) = (0, 0) and (0, pi)
    const double d0 = std::hypot(xi, std::remainder(eta, 2.0 * 3.14159265358979323846));
    const double dpi = std::hypot(xi, eta - 3.14159265358979323846);
    out.near_focus_warning = std::min(d0, dpi) < 10.0 * h;

    const ReducedQuaternion fxi = (f(xi + h, eta) - f(xi - h, eta)) * (0.5 / h);
    const ReducedQuaternion feta = (f(xi, eta + h) - f(xi, eta - h)) * (0.5 / h);

    const double sh = std::sinh(xi), ch = std::cosh(xi);
    const double ce = std::cos(eta), se = std::sin(eta);
    const double w = std::cosh(2.0 * xi) - std::cos(2.0 * eta);
    const Quaternion exi = kUnitI * (sh * ce) + kUnitJ * (ch * se);
    const Quaternion eeta = kUnitJ * (sh * ce) - kUnitI * (ch * se);
    out.value = (exi * fxi.full() + eeta * feta.full()) * (2.0 / w);
    return out;
}

double apply_L_elliptic(const ScalarRectField& f, const geometry::EllipticPoint& at,
                        const Stencil& st) {
    if (!(st.h > 0.0)) throw std::domain_error("apply_L_elliptic: step must be positive");
    const double h = st.h;
    const double xi = at.xi, eta = at.eta;
    if (xi < h) throw std::domain_error("apply_L_elliptic: point too close to the xi = 0 edge");
    const double fxx = (f(xi + h, eta) - 2.0 * f(xi, eta) + f(xi - h, eta)) / (h * h);
    const double fee = (f(xi, eta + h) - 2.0 * f(xi, eta) + f(xi, eta - h)) / (h * h);
    const double w = std::cosh(2.0 * xi) - std::cos(2.0 * eta);
    return 2.0 * (fxx + fee) / w;
}

ResidualSummary metamonogenic_residual(const PlanarField& f, double lambda,
                                       const geometry::EllipseSpec& region, int sample_count,
                                       const Stencil& st, std::uint64_t seed) {
    if (lambda == 0.0) throw std::domain_error("metamonogenic_residual: lambda must be nonzero");
    if (sample_count < 1) throw std::domain_error("metamonogenic_residual: need at least one sample");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uxi(0.1 * region.xi0, 0.85 * region.xi0);
    std::uniform_real_distribution<double> ueta(0.0, 2.0 * 3.14159265358979323846);

    std::vector<double> res;
    res.reserve(static_cast<size_t>(sample_count));
    for (int i = 0; i < sample_count; ++i) {
        const geometry::EllipticPoint p{uxi(rng), ueta(rng)};
        const auto [x, y] = geometry::to_cartesian(p);
        const double sx = region.scale * x, sy = region.scale * y;
        const Quaternion d = apply_D_cartesian(f, sx, sy, st);
        const Quaternion total = d + f(sx, sy).full() * lambda;
        res.push_back(total.norm());
    }
    std::sort(res.begin(), res.end());
    ResidualSummary out;
    out.max_residual = res.back();
    out.median_residual = res[res.size() / 2];
    return out;
}

}  // namespace rqmf::ops
