#include "rqmf/geometry.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace rqmf::geometry {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

std::array<double, 2> to_cartesian(const EllipticPoint& p) {
    return {std::cosh(p.xi) * std::cos(p.eta), std::sinh(p.xi) * std::sin(p.eta)};
}

EllipticPoint to_elliptic(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw std::domain_error("to_elliptic: non-finite input");
    }
    // x + i y = cosh(xi + i eta); principal acosh gives Re >= 0 and
    // Im in (-pi, pi]. For y == 0, |x| <= 1 this lands on the upper
    // branch eta = acos(x) in [0, pi], the documented slit convention.
    const std::complex<double> w(x, y);
    const std::complex<double> z = std::acosh(w);
    double xi = z.real();
    double eta = z.imag();
    if (xi < 0.0) {  // numerical guard; principal branch keeps Re >= 0
        xi = -xi;
        eta = -eta;
    }
    if (eta < 0.0) eta += kTwoPi;
    if (eta >= kTwoPi) eta -= kTwoPi;
    return {xi, eta};
}

double xi_for_mu(double mu) {
    if (!(mu > 0.0 && mu < 1.0)) {
        throw std::domain_error("xi_for_mu: mu must lie in (0, 1)");
    }
    return std::acosh(1.0 / mu);
}

EllipseSpec EllipseSpec::from_xi0(double xi0, double scale) {
    if (!(xi0 > 0.0)) throw std::domain_error("EllipseSpec: xi0 must be positive");
    if (!(scale > 0.0)) throw std::domain_error("EllipseSpec: scale must be positive");
    EllipseSpec s;
    s.xi0 = xi0;
    s.scale = scale;
    return s;
}

EllipseSpec EllipseSpec::from_mu(double mu, std::optional<double> scale) {
    EllipseSpec s;
    s.xi0 = xi_for_mu(mu);
    s.mu = mu;
    s.scale = scale.value_or(mu);
    if (!(s.scale > 0.0)) throw std::domain_error("EllipseSpec: scale must be positive");
    return s;
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
    x.assign(static_cast<size_t>(n), 0.0);
    w.assign(static_cast<size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-style initial guess, Newton on P_n.
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<size_t>(i)] = -z;
        x[static_cast<size_t>(n - 1 - i)] = z;
        const double wi = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<size_t>(i)] = wi;
        w[static_cast<size_t>(n - 1 - i)] = wi;
    }
}

QuadratureGrid make_grid(const EllipseSpec& spec, int order_xi, int order_eta) {
    if (order_xi < 4 || order_eta < 4) {
        throw std::domain_error("make_grid: quadrature orders must be >= 4");
    }
    QuadratureGrid g;
    g.spec = spec;

    std::vector<double> t, wt;
    gauss_legendre(order_xi, t, wt);
    g.nodes_xi.resize(static_cast<size_t>(order_xi));
    g.wxi.resize(static_cast<size_t>(order_xi));
    for (int i = 0; i < order_xi; ++i) {
        g.nodes_xi[static_cast<size_t>(i)] = 0.5 * spec.xi0 * (t[static_cast<size_t>(i)] + 1.0);
        g.wxi[static_cast<size_t>(i)] = 0.5 * spec.xi0 * wt[static_cast<size_t>(i)];
    }
    gauss_legendre(order_eta, t, wt);
    g.nodes_eta.resize(static_cast<size_t>(order_eta));
    g.weta.resize(static_cast<size_t>(order_eta));
    for (int i = 0; i < order_eta; ++i) {
        g.nodes_eta[static_cast<size_t>(i)] = kPi * (t[static_cast<size_t>(i)] + 1.0);
        g.weta[static_cast<size_t>(i)] = kPi * wt[static_cast<size_t>(i)];
    }

    const double s2 = spec.scale * spec.scale;
    g.weight.resize(static_cast<size_t>(order_xi) * static_cast<size_t>(order_eta));
    for (int i = 0; i < order_xi; ++i) {
        const double c2x = std::cosh(2.0 * g.nodes_xi[static_cast<size_t>(i)]);
        for (int k = 0; k < order_eta; ++k) {
            const double jac = 0.5 * (c2x - std::cos(2.0 * g.nodes_eta[static_cast<size_t>(k)]));
            g.weight[g.index(static_cast<size_t>(i), static_cast<size_t>(k))] =
                s2 * g.wxi[static_cast<size_t>(i)] * g.weta[static_cast<size_t>(k)] * jac;
        }
    }
    return g;
}

double QuadratureGrid::total_weight() const {
    // pairwise summation keeps the value independent of traversal details
    std::vector<double> acc(weight.begin(), weight.end());
    size_t n = acc.size();
    while (n > 1) {
        const size_t half = (n + 1) / 2;
        for (size_t i = 0; i < n / 2; ++i) acc[i] = acc[2 * i] + acc[2 * i + 1];
        if (n % 2 != 0) acc[n / 2] = acc[n - 1];
        n = half;
    }
    return acc.empty() ? 0.0 : acc[0];
}

double QuadratureGrid::exact_area() const {
    return spec.scale * spec.scale * kPi * std::sinh(spec.xi0) * std::cosh(spec.xi0);
}

namespace {
double pairwise_sum(std::vector<double>& acc) {
    size_t n = acc.size();
    while (n > 1) {
        const size_t half = (n + 1) / 2;
        for (size_t i = 0; i < n / 2; ++i) acc[i] = acc[2 * i] + acc[2 * i + 1];
        if (n % 2 != 0) acc[n / 2] = acc[n - 1];
        n = half;
    }
    return acc.empty() ? 0.0 : acc[0];
}
}  // namespace

double inner_product(std::span<const double> f, std::span<const double> g,
                     const QuadratureGrid& grid) {
    if (f.size() != grid.size() || g.size() != grid.size()) {
        throw std::invalid_argument("inner_product: field size does not match grid");
    }
    std::vector<double> acc(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) acc[i] = grid.weight[i] * f[i] * g[i];
    return pairwise_sum(acc);
}

double inner_product(std::span<const ReducedQuaternion> f, std::span<const ReducedQuaternion> g,
                     const QuadratureGrid& grid) {
    if (f.size() != grid.size() || g.size() != grid.size()) {
        throw std::invalid_argument("inner_product: field size does not match grid");
    }
    std::vector<double> acc(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) acc[i] = grid.weight[i] * scalar_product(f[i], g[i]);
    return pairwise_sum(acc);
}

SymmetryReport check_symmetry_class(const std::function<double(double, double)>& f,
                                    double xi0, int samples,
                                    const std::function<double(double, double)>* dfdxi) {
    if (samples < 2) throw std::domain_error("check_symmetry_class: need at least 2 samples");
    SymmetryReport rep;
    const double h = 1e-6;

    for (int i = 0; i < samples; ++i) {
        // (a) periodicity along a xi sweep strictly inside the rectangle
        const double xi = xi0 * (i + 0.5) / samples;
        rep.periodicity = std::max(rep.periodicity, std::abs(f(xi, 0.0) - f(xi, kTwoPi)));

        // (b), (c) on the slit xi = 0
        const double eta = kTwoPi * (i + 0.5) / samples;
        rep.displacement = std::max(rep.displacement, std::abs(f(0.0, eta) - f(0.0, kTwoPi - eta)));

        double d1, d2;
        if (dfdxi != nullptr) {
            d1 = (*dfdxi)(0.0, eta);
            d2 = (*dfdxi)(0.0, kTwoPi - eta);
        } else {
            // one-sided second-order difference, xi >= 0 only
            d1 = (-3.0 * f(0.0, eta) + 4.0 * f(h, eta) - f(2.0 * h, eta)) / (2.0 * h);
            d2 = (-3.0 * f(0.0, kTwoPi - eta) + 4.0 * f(h, kTwoPi - eta) - f(2.0 * h, kTwoPi - eta)) /
                 (2.0 * h);
        }
        rep.gradient = std::max(rep.gradient, std::abs(d1 + d2));
    }
    return rep;
}

}  // namespace rqmf::geometry
