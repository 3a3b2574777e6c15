#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "rqmf/wave.hpp"

using namespace rqmf;
using mathieu::Family;
using geometry::EllipticPoint;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("wave") {

TEST_CASE("frequencies from the first-zero ladder at mu0 = 0.7, K = 10") {
    // Table rows are indexed by the order n with the first root m = 1
    CHECK(wave::omega(Family::Plus, 1, 1, 0.7, 10.0) == doctest::Approx(0.297946).epsilon(2e-6));
    CHECK(wave::omega(Family::Plus, 15, 1, 0.7, 10.0) == doctest::Approx(1.61266).epsilon(2e-6));
    CHECK(wave::omega(Family::Minus, 1, 1, 0.7, 10.0) == doctest::Approx(0.351073).epsilon(2e-6));
}

TEST_CASE("K-scaling is exact") {
    const double base = wave::omega(Family::Plus, 2, 1, 0.6, 1.0);
    CHECK(wave::omega(Family::Plus, 2, 1, 0.6, 7.5) == doctest::Approx(base / 7.5).epsilon(1e-15));
}

TEST_CASE("omega^2 K^2 = 4 q for every term") {
    const auto sol = wave::from_coefficients(
        {{Family::Plus, 0, 1, 1.0}, {Family::Plus, 1, 1, 1.0}, {Family::Minus, 1, 2, 0.5}}, 0.7,
        10.0);
    for (const auto& term : sol.terms()) {
        const double lhs = term.omega * term.omega * 100.0;
        CHECK(lhs == doctest::Approx(4.0 * term.mode.zero().q_root).epsilon(1e-12));
    }
}

TEST_CASE("single mode evolves by one exponential factor") {
    const auto sol = wave::from_coefficients({{Family::Plus, 0, 1, 0.8}}, 0.6, 5.0);
    const EllipticPoint p{0.4, 1.3};
    const auto v0 = sol.evaluate(p, 0.0);
    const auto v1 = sol.evaluate(p, 1.0);
    const double ratio = std::exp(sol.terms()[0].omega);
    CHECK(v1.s == doctest::Approx(v0.s * ratio).epsilon(1e-12));
    CHECK(v1.x1 == doctest::Approx(v0.x1 * ratio).epsilon(1e-12));
    CHECK(v1.x2 == doctest::Approx(v0.x2 * ratio).epsilon(1e-12));
}

TEST_CASE("superposition") {
    const auto a = wave::from_coefficients({{Family::Plus, 0, 1, 0.4}}, 0.6, 5.0);
    const auto b = wave::from_coefficients({{Family::Minus, 1, 1, -1.1}}, 0.6, 5.0);
    const auto ab = wave::from_coefficients(
        {{Family::Plus, 0, 1, 0.4}, {Family::Minus, 1, 1, -1.1}}, 0.6, 5.0);
    const EllipticPoint p{0.3, 2.6};
    for (double t : {0.0, 0.7, 2.0}) {
        const auto lhs = ab.evaluate(p, t);
        const auto rhs = a.evaluate(p, t) + b.evaluate(p, t);
        CHECK((lhs - rhs).norm() < 1e-14 * (1.0 + rhs.norm()));
    }
}

TEST_CASE("build_solution: single-zeta initial data gives a unit coefficient") {
    const double mu0 = 0.5;
    const auto z = rqm::ZeroBoundaryFunction::make(Family::Plus, 0, 1, mu0);
    auto initial = [&z](const EllipticPoint& p) { return z.eval(p).s; };
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(mu0), 48, 96);
    const auto built = wave::build_solution(initial, 2, 2, mu0, 10.0, grid);
    for (const auto& term : built.solution.terms()) {
        const bool is_that_mode =
            term.family == Family::Plus && term.n == 0 && term.m == 1;
        CHECK(std::abs(term.coefficient - (is_that_mode ? 1.0 : 0.0)) < 1e-8);
    }
    CHECK(built.projection_residual < 1e-7 * built.initial_l2);
}

TEST_CASE("build_solution rejects data that is alive on the boundary") {
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(0.5), 16, 16);
    auto bad = [](const EllipticPoint& p) { return std::cosh(p.xi); };
    CHECK_THROWS_AS(wave::build_solution(bad, 1, 1, 0.5, 10.0, grid), std::invalid_argument);
}

TEST_CASE("zero initial data yields zero coefficients") {
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(0.5), 24, 48);
    auto zero = [](const EllipticPoint&) { return 0.0; };
    const auto built = wave::build_solution(zero, 1, 1, 0.5, 10.0, grid);
    for (const auto& term : built.solution.terms()) CHECK(std::abs(term.coefficient) < 1e-12);
}

TEST_CASE("projection idempotence: rebuilding from t = 0 recovers coefficients") {
    const double mu0 = 0.7;
    const auto sol = wave::from_coefficients({{Family::Plus, 0, 1, 1.0},
                                              {Family::Plus, 1, 1, 1.0},
                                              {Family::Minus, 1, 1, 1.0},
                                              {Family::Plus, 2, 2, 1e-4}},
                                             mu0, 10.0);
    auto initial = [&sol](const EllipticPoint& p) { return sol.scalar_at_t0(p); };
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(mu0), 48, 96);
    const auto rebuilt = wave::build_solution(initial, 2, 2, mu0, 10.0, grid);
    for (const auto& term : rebuilt.solution.terms()) {
        double want = 0.0;
        for (const auto& src : sol.terms()) {
            if (src.family == term.family && src.n == term.n && src.m == term.m) {
                want = src.coefficient;
            }
        }
        CHECK(std::abs(term.coefficient - want) < 1e-7);
    }
}

TEST_CASE("time-dependent Moisil-Teodorescu residual") {
    const auto sol = wave::from_coefficients({{Family::Plus, 1, 1, 1.0}}, 0.6, 5.0);
    std::vector<wave::SpaceTimeSample> samples;
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uxi(0.15, 0.8), ueta(0.0, 2.0 * kPi), ut(0.0, 0.4);
    for (int k = 0; k < 10; ++k) samples.push_back({{uxi(rng), ueta(rng)}, ut(rng)});
    const double resid = wave::residual_time_metamonogenic(sol, samples, {1e-4});
    CHECK(resid < 1e-5);
}

TEST_CASE("scalar time derivative at t = 0 equals sum a omega zeta") {
    const auto sol = wave::from_coefficients(
        {{Family::Plus, 0, 1, 0.7}, {Family::Minus, 2, 1, -0.2}}, 0.6, 5.0);
    const EllipticPoint p{0.5, 0.8};
    // finite difference in t of the scalar part
    const double h = 1e-6;
    const double fd = (sol.evaluate(p, h).s - sol.evaluate(p, 0.0).s) / h;
    CHECK(sol.scalar_time_derivative_t0(p) == doctest::Approx(fd).epsilon(1e-5));
    double direct = 0.0;
    for (const auto& term : sol.terms()) direct += term.coefficient * term.omega * term.mode.eval(p).s;
    CHECK(sol.scalar_time_derivative_t0(p) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("imaginary-time wave equation residual at t = 0") {
    const auto sol = wave::from_coefficients({{Family::Plus, 0, 1, 1.0}}, 0.6, 5.0);
    const double K = sol.wave_parameter();
    // (L + K^2 d^2/dt^2) v0 with the analytic second time derivative
    auto scalar_field = [&sol](double xi, double eta) {
        return sol.evaluate({xi, eta}, 0.0).s;
    };
    const EllipticPoint p{0.5, 1.9};
    const double lap = ops::apply_L_elliptic(scalar_field, p, {1e-4});
    double second_t = 0.0;
    for (const auto& term : sol.terms()) {
        second_t += term.coefficient * term.omega * term.omega * term.mode.eval(p).s;
    }
    CHECK(std::abs(lap + K * K * second_t) < 1e-5);
}

TEST_CASE("norm growth is monotone for positive coefficients") {
    const auto sol = wave::from_coefficients(
        {{Family::Plus, 0, 1, 1.0}, {Family::Plus, 0, 2, 0.5}}, 0.6, 5.0);
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(0.6), 16, 32);
    double prev = -1.0;
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
        double acc = 0.0;
        for (size_t i = 0; i < grid.nodes_xi.size(); ++i) {
            for (size_t k = 0; k < grid.nodes_eta.size(); ++k) {
                const auto v = sol.evaluate({grid.nodes_xi[i], grid.nodes_eta[k]}, t);
                acc += grid.weight[grid.index(i, k)] * v.norm_sq();
            }
        }
        CHECK(acc > prev);
        prev = acc;
    }
}

TEST_CASE("growing-mode dominance at large t") {
    // coefficients echoing the example configuration: unit weights on
    // low modes, 1e-4 on the 15th-order pair with the largest omega
    const auto sol = wave::from_coefficients({{Family::Plus, 0, 1, 1.0},
                                              {Family::Plus, 1, 1, 1.0},
                                              {Family::Minus, 1, 1, 1.0},
                                              {Family::Plus, 15, 1, 1e-4},
                                              {Family::Minus, 15, 1, 1e-4}},
                                             0.7, 10.0);
    const EllipticPoint p{0.45, 0.9};
    double prev_ratio = -1.0;
    for (double t : {0.0, 4.0, 8.0, 12.0}) {
        ReducedQuaternion high, low;
        for (const auto& term : sol.terms()) {
            const auto v = term.mode.eval(p) * (term.coefficient * std::exp(term.omega * t));
            if (term.n == 15) {
                high = high + v;
            } else {
                low = low + v;
            }
        }
        const double ratio = high.norm() / low.norm();
        CHECK(ratio > prev_ratio);
        prev_ratio = ratio;
    }
    CHECK(prev_ratio > 1.0);  // the largest-omega pair dominates eventually
}

TEST_CASE("rescaling helper composes the xi variable") {
    auto initial = [](const EllipticPoint& p) { return std::sin(p.xi) * std::cos(p.eta); };
    const auto rescaled = wave::rescale_initial(initial, 1.0, 2.0);
    CHECK(rescaled({2.0, 0.3}) == doctest::Approx(initial({1.0, 0.3})).epsilon(1e-15));
}

}  // TEST_SUITE
