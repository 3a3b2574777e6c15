#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "rqmf/bessel.hpp"
#include "rqmf/operators.hpp"
#include "rqmf/rqm.hpp"

using namespace rqmf;
using mathieu::Family;
using geometry::EllipticPoint;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("rqm") {

TEST_CASE("zeta basics") {
    CHECK(rqm::zeta(Family::Minus, 2, 1.5, {0.0, 1.2}) == doctest::Approx(0.0).epsilon(1e-14));
    const double q = 1.5;
    const auto mode = mathieu::solve_mode(Family::Plus, 1, q);
    const EllipticPoint p{0.6, 2.0};
    CHECK(rqm::zeta(Family::Plus, 1, q, p) ==
          doctest::Approx(mode.radial(p.xi).value * mode.angular(p.eta).value).epsilon(1e-14));
}

TEST_CASE("zeta passes the symmetry-class conditions") {
    const double q = 2.3;
    for (const auto& [f, n] : {std::pair{Family::Plus, 2}, {Family::Minus, 1}}) {
        const auto mode = mathieu::solve_mode(f, n, q);
        auto zf = [&mode](double xi, double eta) {
            return mode.radial(xi).value * mode.angular(eta).value;
        };
        auto dz = [&mode](double xi, double eta) {
            return mode.radial(xi).derivative * mode.angular(eta).value;
        };
        std::function<double(double, double)> dgrad = dz;
        CHECK(geometry::check_symmetry_class(zf, 0.9, 48, &dgrad).pass(1e-9));
    }
}

TEST_CASE("scalar part of M equals zeta exactly") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> uxi(0.0, 1.2), ueta(0.0, 2.0 * kPi);
    const double lambda = 2.4;
    const auto M = rqm::RqmFunction::make(Family::Plus, 2, lambda);
    for (int t = 0; t < 100; ++t) {
        const EllipticPoint p{uxi(rng), ueta(rng)};
        const double z = rqm::zeta(Family::Plus, 2, lambda * lambda / 4.0, p);
        CHECK(M.eval(p).s == doctest::Approx(z).epsilon(1e-12));
    }
}

TEST_CASE("M is metamonogenic (residual meter)") {
    const auto region = geometry::EllipseSpec::from_xi0(0.9);
    for (const auto& [f, n, lam] : {std::tuple{Family::Plus, 0, 0.5}, {Family::Plus, 4, 3.0},
                                    {Family::Minus, 1, 1.5}, {Family::Minus, 3, 3.0}}) {
        const auto M = rqm::RqmFunction::make(f, n, lam);
        auto planar = [&M](double x, double y) { return M.eval_cartesian(x, y); };
        const auto res = ops::metamonogenic_residual(planar, lam, region, 30);
        CHECK(res.max_residual < 1e-5 * std::max(1.0, std::abs(M.eval({0.4, 0.8}).norm())));
    }
}

TEST_CASE("lambda -> -lambda conjugates the function pointwise") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> uxi(0.0, 1.0), ueta(0.0, 2.0 * kPi);
    for (const auto& [f, n, lam] : {std::tuple{Family::Plus, 1, 1.7}, {Family::Minus, 2, 2.6}}) {
        const auto Mp = rqm::RqmFunction::make(f, n, lam);
        const auto Mm = rqm::RqmFunction::make(f, n, -lam);
        for (int t = 0; t < 50; ++t) {
            const EllipticPoint p{uxi(rng), ueta(rng)};
            const auto a = Mp.eval(p);
            const auto b = Mm.eval(p);
            CHECK(std::abs(a.s - b.s) < 1e-14 * (1.0 + std::abs(a.s)));
            CHECK(std::abs(a.x1 + b.x1) < 1e-14 * (1.0 + std::abs(a.x1)));
            CHECK(std::abs(a.x2 + b.x2) < 1e-14 * (1.0 + std::abs(a.x2)));
        }
    }
}

TEST_CASE("focus-limit procedure is consistent with the direct formula") {
    // values on rays crossing the switch threshold stay smooth
    for (const auto& [f, n] : {std::pair{Family::Plus, 2}, {Family::Minus, 1}}) {
        const auto M = rqm::RqmFunction::make(f, n, 2.2);
        for (double eta0 : {0.0, kPi}) {
            ReducedQuaternion prev = M.eval({2.5e-3, eta0 + 2.5e-3});  // well outside
            for (double d : {1.5e-3, 9e-4, 6e-4, 3e-4, 1e-4, 1e-6}) {
                const ReducedQuaternion v = M.eval({d, eta0 + d});
                CHECK((v - prev).norm() < 2e-5);
                prev = v;
            }
            const auto focus = M.eval({0.0, eta0});
            CHECK(std::isfinite(focus.s));
            CHECK(std::isfinite(focus.x1));
            CHECK(std::isfinite(focus.x2));
            CHECK((focus - prev).norm() < 2e-5);
        }
    }
}

TEST_CASE("zero-boundary functions vanish (scalar part) on the edge") {
    const auto z = rqm::ZeroBoundaryFunction::make(Family::Plus, 0, 1, 0.5);
    const double xi0 = geometry::xi_for_mu(0.5);
    double interior_scale = 0.0;
    for (int k = 0; k < 32; ++k) {
        interior_scale = std::max(interior_scale,
                                  std::abs(z.eval({0.5 * xi0, 2.0 * kPi * k / 32.0}).s));
    }
    bool vector_alive = false;
    for (int k = 0; k < 64; ++k) {
        const double eta = 2.0 * kPi * k / 64.0;
        const auto v = z.eval({xi0, eta});
        CHECK(std::abs(v.s) < 1e-9 * interior_scale);
        if (std::hypot(v.x1, v.x2) > 1e-6) vector_alive = true;
    }
    CHECK(vector_alive);  // only the scalar part vanishes at the edge
}

TEST_CASE("zero-boundary odd family needs n >= 1") {
    CHECK_THROWS_AS(rqm::ZeroBoundaryFunction::make(Family::Minus, 0, 1, 0.5),
                    std::invalid_argument);
}

TEST_CASE("disk limit special values") {
    const auto F0 = rqm::DiskLimitFunction::from_alpha(Family::Plus, 0, 2.0);
    const auto at0 = F0.eval(0.0, 0.0);
    CHECK(at0.s == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(at0.x1 == 0.0);
    CHECK(at0.x2 == 0.0);
    // n = 0: no third term, so i/j parts carry only the radial gradient
    const auto v = F0.eval(0.3, 0.0);
    CHECK(std::abs(v.x2) < 1e-14);
}

TEST_CASE("disk limit is continuous into the w = 0 limit") {
    for (int n : {1, 2, 4}) {
        for (Family f : {Family::Plus, Family::Minus}) {
            const auto F = rqm::DiskLimitFunction::from_alpha(f, n, 3.1);
            const auto lim = F.eval(0.0, 0.0);
            // approach along the ray that keeps Phi factors alive
            const double th = (f == Family::Plus) ? 0.0 : kPi / (2.0 * n);
            for (double r : {1e-5, 1e-9, 1e-13}) {
                const auto v = F.eval(r * std::cos(th), r * std::sin(th));
                CHECK(std::isfinite(v.x1));
                CHECK(std::isfinite(v.x2));
                if (n >= 2) CHECK((v - lim).norm() < 1e-3 * bessel::beta_constant(n));
            }
        }
    }
    // n = 1 limits carry the half-derivative value
    const auto F1p = rqm::DiskLimitFunction::from_alpha(Family::Plus, 1, 2.0);
    CHECK(F1p.eval(0.0, 0.0).x1 == doctest::Approx(-0.5).epsilon(1e-14));
    const auto near = F1p.eval(1e-10, 1e-10);
    CHECK(near.x1 == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("disk limit functions are alpha-metamonogenic") {
    for (const auto& [f, n] : {std::pair{Family::Plus, 0}, {Family::Plus, 3}, {Family::Minus, 2}}) {
        const auto F = rqm::DiskLimitFunction::from_alpha(f, n, 2.7);
        auto planar = [&F](double x, double y) { return F.eval(x, y); };
        const ops::Stencil st{1e-5};
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> ur(0.15, 0.8), uth(0.0, 2.0 * kPi);
        for (int t = 0; t < 25; ++t) {
            const double r = ur(rng), th = uth(rng);
            const auto d = ops::apply_D_cartesian(planar, r * std::cos(th), r * std::sin(th), st);
            const Quaternion total = d + planar(r * std::cos(th), r * std::sin(th)).full() * 2.7;
            CHECK(total.norm() < 1e-6 * std::max(1.0, bessel::beta_constant(n)));
        }
    }
}

TEST_CASE("scaled RQM converges to the disk limit (mu ladder)") {
    for (const auto& [f, n] : {std::pair{Family::Plus, 0}, {Family::Plus, 2}, {Family::Minus, 1}}) {
        const auto F = rqm::DiskLimitFunction::zero_boundary(f, n, 1);
        const double alpha = F.alpha();
        double prev = 1e300;
        for (double mu : {0.4, 0.2, 0.1, 0.05}) {
            const double q = (mu * alpha / 2.0) * (mu * alpha / 2.0);
            const auto M = rqm::RqmFunction::make(f, n, 2.0 * std::sqrt(q));
            const double scale = rqm::disk_limit_scale(n, q);
            double sup = 0.0;
            for (int k = 0; k < 20; ++k) {
                const double r = 0.15 + 0.7 * k / 19.0;
                const double th = 0.3 + 5.5 * k / 19.0;
                const double u = r * std::cos(th), v = r * std::sin(th);
                const auto a = M.eval(geometry::to_elliptic(u / mu, v / mu)) * scale;
                const auto b = F.eval(u, v);
                sup = std::max(sup, (a - b).norm());
            }
            CHECK(sup < prev);
            prev = sup;
        }
        CHECK(prev < 0.05 * bessel::beta_constant(n));
    }
}

TEST_CASE("zero-boundary disk modes vanish on the unit circle (scalar part)") {
    const auto Z = rqm::DiskLimitFunction::zero_boundary(Family::Plus, 1, 2);
    for (int k = 0; k < 32; ++k) {
        const double th = 2.0 * kPi * k / 32.0;
        const double r = 1.0 - 1e-13;
        CHECK(std::abs(Z.eval(r * std::cos(th), r * std::sin(th)).s) < 1e-10);
    }
}

TEST_CASE("Cauchy kernel properties") {
    const auto k1 = rqm::cauchy_kernel(1.5, 0.3, 0.4);
    const auto k2 = rqm::cauchy_kernel(1.5, -0.5, 0.0);
    CHECK(k1.s == doctest::Approx(k2.s).epsilon(1e-14));  // scalar depends only on |z|
    CHECK_THROWS_AS(rqm::cauchy_kernel(1.5, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(rqm::cauchy_kernel(0.0, 1.0, 0.0), std::domain_error);

    // (D + lambda) K = 0 away from the origin
    const double lam = 1.5;
    auto planar = [lam](double x, double y) { return rqm::cauchy_kernel(lam, x, y); };
    const auto d = ops::apply_D_cartesian(planar, 0.6, 0.45, {1e-5});
    const Quaternion total = d + planar(0.6, 0.45).full() * lam;
    CHECK(total.norm() < 1e-6);
}

TEST_CASE("Cauchy reconstruction matches direct evaluation") {
    const double lam = 1.5;
    const auto M = rqm::RqmFunction::make(Family::Plus, 1, lam);
    auto planar = [&M](double x, double y) { return M.eval_cartesian(x, y); };
    const auto region = geometry::EllipseSpec::from_xi0(0.8);

    const auto direct = M.eval_cartesian(0.2, 0.1);
    const auto rec = rqm::cauchy_reconstruct(planar, lam, 0.2, 0.1, 0.3, 512, region);
    CHECK((rec.value - direct).norm() < 1e-6);
    CHECK(std::abs(rec.k_component) < 1e-10);

    // radius independence
    const auto rec2 = rqm::cauchy_reconstruct(planar, lam, 0.2, 0.1, 0.45, 512, region);
    CHECK((rec.value - rec2.value).norm() < 1e-6);

    // doubling the quadrature order shrinks the defect (trapezoid on a
    // periodic integrand), until it saturates at rounding level
    const auto c64 = rqm::cauchy_reconstruct(planar, lam, 0.2, 0.1, 0.3, 64, region);
    const auto c128 = rqm::cauchy_reconstruct(planar, lam, 0.2, 0.1, 0.3, 128, region);
    const double e64 = (c64.value - direct).norm();
    const double e128 = (c128.value - direct).norm();
    CHECK(e128 <= e64 + 1e-14);

    CHECK_THROWS_AS(rqm::cauchy_reconstruct(planar, lam, 1.2, 0.0, 0.4, 64, region),
                    std::domain_error);
}

TEST_CASE("Gram matrix: orthogonality and the norm formula") {
    const double mu = 0.5;
    const double xi0 = geometry::xi_for_mu(mu);
    std::vector<rqm::ZeroBoundaryFunction> modes;
    for (const auto& [f, n, m] : {std::tuple{Family::Plus, 0, 1}, {Family::Plus, 0, 2},
                                  {Family::Plus, 1, 1}, {Family::Plus, 2, 1},
                                  {Family::Minus, 1, 1}, {Family::Minus, 2, 1}}) {
        modes.push_back(rqm::ZeroBoundaryFunction::make(f, n, m, mu));
    }
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(mu), 48, 96);
    const auto g = rqm::gram_matrix(modes, grid);

    for (int a = 0; a < g.rows(); ++a) {
        for (int b = 0; b < g.cols(); ++b) {
            if (a == b) continue;
            CHECK(std::abs(g(a, b)) / std::sqrt(g(a, a) * g(b, b)) < 1e-8);
        }
    }

    // diagonals against the closed norm formula evaluated by 1D quadratures
    std::vector<double> gx, gw, ex, ew;
    geometry::gauss_legendre(160, gx, gw);
    for (size_t i = 0; i < modes.size(); ++i) {
        const auto& z = modes[i];
        const double q = z.zero().q_root;
        const auto mode = mathieu::solve_mode(z.family(), z.order(), q);
        long double ipsi2 = 0.0L, ipsid2 = 0.0L, iphid2 = 0.0L, izeta = 0.0L;
        for (size_t k = 0; k < gx.size(); ++k) {
            const double xi = 0.5 * xi0 * (gx[k] + 1.0);
            const double wxi = 0.5 * xi0 * gw[k];
            const auto r = mode.radial(xi);
            ipsi2 += wxi * r.value * r.value;
            ipsid2 += wxi * r.derivative * r.derivative;
            // zeta-norm: mu^2/2 [ int psi^2 cosh2xi int phi^2 - int psi^2 int phi^2 cos2eta ]
        }
        long double iphi2 = 0.0L, iphi2cos = 0.0L, ipsi2cosh = 0.0L;
        for (size_t k = 0; k < gx.size(); ++k) {
            const double eta = kPi * (gx[k] + 1.0);
            const double weta = kPi * gw[k];
            const auto a = mode.angular(eta);
            iphi2 += weta * a.value * a.value;
            iphi2cos += weta * a.value * a.value * std::cos(2.0 * eta);
            iphid2 += weta * a.derivative * a.derivative;
            const double xi = 0.5 * xi0 * (gx[k] + 1.0);
            const double wxi = 0.5 * xi0 * gw[k];
            const auto r = mode.radial(xi);
            ipsi2cosh += wxi * r.value * r.value * std::cosh(2.0 * xi);
        }
        const double zeta_norm2 =
            mu * mu / 2.0 * static_cast<double>(ipsi2cosh * iphi2 - ipsi2 * iphi2cos);
        izeta = zeta_norm2;
        const double delta0 = (z.order() == 0) ? 1.0 : 0.0;
        const double formula = static_cast<double>(izeta) +
                               mu * mu / (4.0 * q) * (1.0 + delta0) * kPi * static_cast<double>(ipsid2) +
                               mu * mu / (4.0 * q) * static_cast<double>(iphid2) * static_cast<double>(ipsi2);
        CHECK(g(static_cast<int>(i), static_cast<int>(i)) ==
              doctest::Approx(formula).epsilon(1e-7));
    }
}

TEST_CASE("gram argument validation") {
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(0.5), 8, 8);
    std::vector<rqm::ZeroBoundaryFunction> single{
        rqm::ZeroBoundaryFunction::make(Family::Plus, 0, 1, 0.5)};
    const auto g = rqm::gram_matrix(single, grid);
    CHECK(g.rows() == 1);
    CHECK(g(0, 0) > 0.0);

    std::vector<rqm::ZeroBoundaryFunction> mixed{
        rqm::ZeroBoundaryFunction::make(Family::Plus, 0, 1, 0.5),
        rqm::ZeroBoundaryFunction::make(Family::Plus, 0, 1, 0.6)};
    CHECK_THROWS_AS(rqm::gram_matrix(mixed, grid), std::invalid_argument);

    const auto wrong_grid = geometry::make_grid(geometry::EllipseSpec::from_mu(0.6), 8, 8);
    CHECK_THROWS_AS(rqm::gram_matrix(single, wrong_grid), std::invalid_argument);
}

TEST_CASE("projection recovers known coefficients") {
    const double mu = 0.5;
    const auto modes = rqm::enumerate_modes(mu, 2, 2);
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(mu), 48, 96);

    // single mode: unit indicator
    const auto& z12 = modes.at(1);  // (+, 0, 2) under the enumeration order
    auto target_one = [&z12](const EllipticPoint& p) { return z12.eval(p); };
    const auto pr1 = rqm::project(target_one, modes, grid);
    for (size_t i = 0; i < pr1.coefficients.size(); ++i) {
        CHECK(std::abs(pr1.coefficients[i] - (i == 1 ? 1.0 : 0.0)) < 1e-9);
    }
    CHECK(pr1.residual_l2 < 1e-8 * pr1.target_l2);

    // linear combination
    auto target_combo = [&modes](const EllipticPoint& p) {
        return modes[0].eval(p) * 0.75 + modes[4].eval(p) * (-1.3);
    };
    const auto pr2 = rqm::project(target_combo, modes, grid);
    CHECK(pr2.coefficients[0] == doctest::Approx(0.75).epsilon(1e-8));
    CHECK(pr2.coefficients[4] == doctest::Approx(-1.3).epsilon(1e-8));
    CHECK(pr2.residual_l2 < 1e-7 * pr2.target_l2);
}

TEST_CASE("projection residual shrinks as the mode set grows") {
    // target built per the completion recipe from a scalar combination
    // whose lambda matches one mode
    const double mu = 0.5;
    const auto z01 = rqm::ZeroBoundaryFunction::make(Family::Plus, 0, 1, mu);
    const double lam = 2.0 * std::sqrt(z01.zero().q_root);
    // f0 = zeta of the matching mode + 0.3 * zeta of another mode at ITS
    // own root; the completion of the first is exactly z01, the second
    // term is square-integrable residue the expansion must absorb
    const auto z11m = rqm::ZeroBoundaryFunction::make(Family::Minus, 1, 1, mu);
    auto target = [&](const EllipticPoint& p) {
        return z01.eval(p) + z11m.eval(p) * 0.3;
    };
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(mu), 48, 96);
    double prev = 1e300;
    for (int nmax : {0, 1, 2}) {
        const auto modes = rqm::enumerate_modes(mu, nmax, 2);
        const auto pr = rqm::project(target, modes, grid);
        CHECK(pr.residual_l2 <= prev + 1e-12);
        prev = pr.residual_l2;
    }
    CHECK(prev < 1e-7);

    (void)lam;
}

TEST_CASE("disk Gram: orthogonality and the two norm candidates") {
    std::vector<rqm::DiskLimitFunction> modes;
    for (const auto& [f, n, m] : {std::tuple{Family::Plus, 0, 1}, {Family::Plus, 0, 2},
                                  {Family::Plus, 1, 1}, {Family::Minus, 1, 1}}) {
        modes.push_back(rqm::DiskLimitFunction::zero_boundary(f, n, m));
    }
    const auto rep = rqm::disk_gram(modes, 96, 128);
    CHECK(rep.max_offdiag_normalized < 1e-9);

    // the squared-Bessel reading matches; the linear one does not
    for (size_t i = 0; i < modes.size(); ++i) {
        CHECK(rep.diag_measured[i] == doctest::Approx(rep.candidate_squared[i]).epsilon(1e-8));
        CHECK(std::abs(rep.diag_measured[i] - rep.candidate_linear[i]) >
              1e-3 * std::abs(rep.diag_measured[i]));
    }

    // explicit n = 0 spot value: pi J_1(alpha_01)^2
    const double alpha01 = bessel::j_zero(0, 1);
    const double expect = kPi * std::pow(bessel::j(1, alpha01), 2);
    CHECK(rep.diag_measured[0] == doctest::Approx(expect).epsilon(1e-8));
}

}  // TEST_SUITE
