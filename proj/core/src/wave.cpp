#include "rqmf/wave.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rqmf::wave {

double omega(Family family, int n, int m, double mu0, double K) {
    if (!(K > 0.0)) throw std::domain_error("omega: wave parameter K must be positive");
    const double xi0 = geometry::xi_for_mu(mu0);
    const mathieu::RadialZero z = mathieu::find_q_zero(family, n, m, xi0);
    return 2.0 * std::sqrt(z.q_root) / K;
}

Solution::Solution(double mu0, double K, std::vector<Term> terms)
    : mu0_(mu0), K_(K), terms_(std::move(terms)) {
    if (!(K_ > 0.0)) throw std::domain_error("Solution: wave parameter K must be positive");
    if (!(mu0_ > 0.0 && mu0_ < 1.0)) throw std::domain_error("Solution: mu0 must lie in (0, 1)");
}

ReducedQuaternion Solution::evaluate(const EllipticPoint& at, double t) const {
    if (t < 0.0) throw std::domain_error("Solution::evaluate: t must be nonnegative");
    ReducedQuaternion acc;
    for (const auto& term : terms_) {
        acc = acc + term.mode.eval(at) * (term.coefficient * std::exp(term.omega * t));
    }
    return acc;
}

double Solution::scalar_at_t0(const EllipticPoint& at) const {
    double acc = 0.0;
    for (const auto& term : terms_) acc += term.coefficient * term.mode.eval(at).s;
    return acc;
}

double Solution::scalar_time_derivative_t0(const EllipticPoint& at) const {
    double acc = 0.0;
    for (const auto& term : terms_) acc += term.coefficient * term.omega * term.mode.eval(at).s;
    return acc;
}

double Solution::max_omega() const {
    double m = 0.0;
    for (const auto& term : terms_) m = std::max(m, term.omega);
    return m;
}

Solution from_coefficients(const std::vector<TermSpec>& specs, double mu0, double K) {
    std::vector<Term> terms;
    terms.reserve(specs.size());
    for (const auto& s : specs) {
        auto mode = rqm::ZeroBoundaryFunction::make(s.family, s.n, s.m, mu0);
        const double om = 2.0 * std::sqrt(mode.zero().q_root) / K;
        terms.push_back({s.family, s.n, s.m, s.coefficient, om, std::move(mode)});
    }
    return Solution(mu0, K, std::move(terms));
}

BuildResult build_solution(const std::function<double(const EllipticPoint&)>& initial_scalar,
                           int n_max, int m_max, double mu0, double K,
                           const geometry::QuadratureGrid& grid) {
    const double xi0 = geometry::xi_for_mu(mu0);

    // boundary-vanishing precondition
    double peak = 1e-300;
    for (int k = 0; k < 64; ++k) {
        const double eta = 2.0 * 3.14159265358979323846 * k / 64.0;
        peak = std::max(peak, std::abs(initial_scalar({0.5 * xi0, eta})));
        peak = std::max(peak, std::abs(initial_scalar({0.9 * xi0, eta})));
    }
    double boundary = 0.0;
    for (int k = 0; k < 64; ++k) {
        const double eta = 2.0 * 3.14159265358979323846 * k / 64.0;
        boundary = std::max(boundary, std::abs(initial_scalar({xi0, eta})));
    }
    if (boundary > 1e-6 * std::max(peak, 1e-30)) {
        throw std::invalid_argument(
            "build_solution: initial data does not vanish at xi = xi_mu0 (max |v| = " +
            std::to_string(boundary) + ", field scale " + std::to_string(peak) + ")");
    }

    auto modes = rqm::enumerate_modes(mu0, n_max, m_max);

    // Scalar data expands against the scalar orthogonal basis {zeta}:
    //   a_i = <zeta_i, v> / ||zeta_i||^2.
    // (The full-quaternion quotient <Z, v>/||Z||^2 would shrink every
    // coefficient by ||zeta||^2/||Z||^2 and break the t = 0 scalar
    // reproduction; the numerator is the same since v has no vector
    // part, only the denominator differs.)
    std::vector<double> target(grid.size());
    for (size_t i = 0; i < grid.nodes_xi.size(); ++i) {
        for (size_t k = 0; k < grid.nodes_eta.size(); ++k) {
            target[grid.index(i, k)] = initial_scalar({grid.nodes_xi[i], grid.nodes_eta[k]});
        }
    }
    const double target_l2 = std::sqrt(std::max(
        0.0, geometry::inner_product(std::span<const double>(target),
                                     std::span<const double>(target), grid)));

    std::vector<Term> terms;
    terms.reserve(modes.size());
    std::vector<double> residual = target;
    for (const auto& mode : modes) {
        const auto field = rqm::sample_on_grid(mode.rqm(), grid);
        std::vector<double> zeta(grid.size());
        for (size_t i = 0; i < grid.size(); ++i) zeta[i] = field[i].s;
        const double den = geometry::inner_product(std::span<const double>(zeta),
                                                   std::span<const double>(zeta), grid);
        const double num = geometry::inner_product(std::span<const double>(zeta),
                                                   std::span<const double>(target), grid);
        const double a = num / den;
        for (size_t i = 0; i < grid.size(); ++i) residual[i] -= a * zeta[i];
        const double om = 2.0 * std::sqrt(mode.zero().q_root) / K;
        terms.push_back({mode.family(), mode.order(), mode.zero_index(), a, om, mode});
    }
    const double residual_l2 = std::sqrt(std::max(
        0.0, geometry::inner_product(std::span<const double>(residual),
                                     std::span<const double>(residual), grid)));
    return {Solution(mu0, K, std::move(terms)), residual_l2, target_l2};
}

double residual_time_metamonogenic(const Solution& sol,
                                   const std::vector<SpaceTimeSample>& samples,
                                   const ops::Stencil& st) {
    double worst = 0.0;
    for (const auto& s : samples) {
        auto field = [&sol, &s](double xi, double eta) { return sol.evaluate({xi, eta}, s.t); };
        const auto d = ops::apply_D_elliptic(field, s.point, st);

        ReducedQuaternion vt;  // analytic d/dt
        for (const auto& term : sol.terms()) {
            vt = vt + term.mode.eval(s.point) *
                          (term.coefficient * term.omega * std::exp(term.omega * s.t));
        }
        const Quaternion total = d.value + vt.full() * sol.wave_parameter();
        worst = std::max(worst, total.norm());
    }
    return worst;
}

std::function<double(const EllipticPoint&)> rescale_initial(
    const std::function<double(const EllipticPoint&)>& initial, double xi0, double xi1) {
    if (!(xi0 > 0.0 && xi1 > 0.0)) throw std::domain_error("rescale_initial: xi bounds must be positive");
    return [initial, xi0, xi1](const EllipticPoint& p) {
        return initial({(xi0 / xi1) * p.xi, p.eta});
    };
}

}  // namespace rqmf::wave
