#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "rqmf/bessel.hpp"
#include "rqmf/geometry.hpp"
#include "rqmf/mathieu.hpp"
#include "rqmf/operators.hpp"
#include "rqmf/rqm.hpp"
#include "rqmf/wave.hpp"

namespace rqmf_cli {

namespace {

using namespace rqmf;
using mathieu::Family;
using geometry::EllipticPoint;

constexpr double kPi = 3.14159265358979323846;

struct SuiteResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

SuiteResult make(const std::string& name, double measured, double tol, const std::string& detail = "") {
    return {name, measured <= tol, measured, tol, detail};
}

SuiteResult bessel_recurrence(bool full) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> ux(0.2, 60.0);
    double worst = 0.0;
    const int trials = full ? 400 : 100;
    for (int t = 0; t < trials; ++t) {
        const double x = ux(rng);
        const int n = 1 + static_cast<int>(rng() % 20);
        worst = std::max(worst, std::abs(2.0 * bessel::j_prime(n, x) - bessel::j(n - 1, x) +
                                         bessel::j(n + 1, x)));
        worst = std::max(worst, std::abs(2.0 * n / x * bessel::j(n, x) - bessel::j(n - 1, x) -
                                         bessel::j(n + 1, x)));
    }
    return make("bessel-recurrence", worst, 1e-11);
}

SuiteResult bessel_ode(bool full) {
    double worst = 0.0;
    for (int n : {0, 1, 3, 8}) {
        for (double x : {0.7, 2.9, 9.5, 21.0, full ? 55.0 : 21.0}) {
            const double jn = bessel::j(n, x);
            const double jp = bessel::j_prime(n, x);
            double jpp;
            if (n >= 2) {
                jpp = 0.25 * (bessel::j(n - 2, x) - 2.0 * jn + bessel::j(n + 2, x));
            } else if (n == 1) {
                jpp = 0.5 * (bessel::j_prime(0, x) - bessel::j_prime(2, x));
            } else {
                jpp = -bessel::j_prime(1, x);
            }
            worst = std::max(worst, std::abs(x * x * jpp + x * jp + (x * x - n * n) * jn));
        }
    }
    return make("bessel-ode", worst, 1e-9);
}

SuiteResult bessel_zero_interlacing(bool full) {
    const int nmax = full ? 16 : 8, mmax = full ? 8 : 4;
    double worst_resid = 0.0;
    bool order_ok = true;
    for (int n = 0; n <= nmax; ++n) {
        for (int m = 1; m <= mmax; ++m) {
            const double z = bessel::j_zero(n, m);
            worst_resid = std::max(worst_resid, std::abs(bessel::j(n, z)));
            if (m > 1 && !(z > bessel::j_zero(n, m - 1))) order_ok = false;
            if (n > 0 && !(bessel::j_zero(n - 1, m) < z)) order_ok = false;
            if (n > 0 && !(z < bessel::j_zero(n - 1, m + 1))) order_ok = false;
        }
    }
    auto r = make("bessel-zero-interlacing", worst_resid, 1e-12);
    r.pass = r.pass && order_ok;
    if (!order_ok) r.detail = "ordering violated";
    return r;
}

SuiteResult mathieu_interlacing(bool full) {
    // Strict ordering where the splittings are resolvable in double
    // precision (neighbouring characteristics merge exponentially once
    // n^2 >> 2q or 2q >> n^2); a 1e-9 no-inversion band beyond that.
    bool ok = true;
    double worst_inversion = 0.0;
    for (double q : full ? std::vector<double>{0.3, 1.0, 10.0, 50.0} : std::vector<double>{1.0, 10.0}) {
        double prev = mathieu::solve_mode(Family::Plus, 0, q).characteristic;
        for (int n = 1; n <= (full ? 12 : 8); ++n) {
            const double bn = mathieu::solve_mode(Family::Minus, n, q).characteristic;
            const double an = mathieu::solve_mode(Family::Plus, n, q).characteristic;
            if (n <= 5 && q <= 17.0) ok = ok && prev < bn && bn < an;
            worst_inversion = std::max({worst_inversion,
                                        (prev - bn) / std::max(1.0, std::abs(bn)),
                                        (bn - an) / std::max(1.0, std::abs(an))});
            prev = an;
        }
    }
    auto r = make("mathieu-characteristic-interlacing", std::max(0.0, worst_inversion), 1e-9);
    r.pass = r.pass && ok;
    if (!ok) r.detail = "strict ordering violated in the resolvable window";
    return r;
}

SuiteResult mathieu_normalization(bool full) {
    double worst = 0.0;
    for (int n : {0, 1, 3}) {
        for (double q : full ? std::vector<double>{0.4, 3.0, 25.0, 80.0} : std::vector<double>{0.6, 8.0}) {
            const auto mode = mathieu::solve_mode(Family::Plus, n, q);
            long double acc = 0.0L;
            const int N = 4096;
            for (int k = 0; k < N; ++k) {
                const double v = mode.angular(2.0 * kPi * k / N).value;
                acc += v * v;
            }
            acc *= 2.0L * kPi / N;
            const double target = (n == 0) ? 2.0 * kPi : kPi;
            worst = std::max(worst, std::abs(static_cast<double>(acc) - target) / target);
        }
    }
    return make("mathieu-normalization", worst, 1e-10);
}

SuiteResult mathieu_orthogonality(bool) {
    const double q = 2.7;
    double worst = 0.0;
    struct Id { Family f; int n; };
    const std::vector<Id> ids = {{Family::Plus, 0}, {Family::Plus, 1}, {Family::Minus, 1},
                                 {Family::Minus, 2}};
    const int N = 4096;
    for (size_t a = 0; a < ids.size(); ++a) {
        for (size_t b = a + 1; b < ids.size(); ++b) {
            const auto ma = mathieu::solve_mode(ids[a].f, ids[a].n, q);
            const auto mb = mathieu::solve_mode(ids[b].f, ids[b].n, q);
            long double acc = 0.0L;
            for (int k = 0; k < N; ++k) {
                const double eta = 2.0 * kPi * k / N;
                acc += ma.angular(eta).value * mb.angular(eta).value;
            }
            worst = std::max(worst, std::abs(static_cast<double>(acc) * 2.0 * kPi / N));
        }
    }
    return make("mathieu-angular-orthogonality", worst, 1e-10);
}

SuiteResult mathieu_ode_residual(bool full, const std::string& fault) {
    const double delta = (fault == "characteristic-perturb") ? 1e-3 : 0.0;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ue(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (const auto& [f, n, q] : full ? std::vector<std::tuple<Family, int, double>>{
                                            {Family::Plus, 0, 1.7},
                                            {Family::Plus, 3, 9.0},
                                            {Family::Minus, 1, 1.0},
                                            {Family::Minus, 4, 22.0},
                                            {Family::Plus, 8, 45.0}}
                                      : std::vector<std::tuple<Family, int, double>>{
                                            {Family::Plus, 0, 1.7},
                                            {Family::Minus, 1, 1.0},
                                            {Family::Plus, 3, 9.0}}) {
        const auto mode = mathieu::solve_mode(f, n, q);
        const double a = mode.characteristic + delta;
        double sup = 0.0;
        for (int k = 0; k < 128; ++k) sup = std::max(sup, std::abs(mode.angular(ue(rng)).value));
        for (int k = 0; k < 64; ++k) {
            const double eta = ue(rng);
            double second = 0.0;
            for (size_t j = 0; j < mode.coeffs.size(); ++j) {
                const double kk = mode.harmonic(static_cast<int>(j));
                second -= mode.coeffs[j] * kk * kk *
                          ((f == Family::Plus) ? std::cos(kk * eta) : std::sin(kk * eta));
            }
            const double resid =
                second + (a - 2.0 * q * std::cos(2.0 * eta)) * mode.angular(eta).value;
            worst = std::max(worst, std::abs(resid) / sup);
        }
    }
    return make("mathieu-ode-residual", worst, 1e-9);
}

SuiteResult radial_cross_method(bool full) {
    double worst = 0.0;
    for (double q : full ? std::vector<double>{0.05, 0.3, 0.7, 2.0, 7.5, 20.0}
                         : std::vector<double>{0.3, 2.0, 20.0}) {
        for (int n : full ? std::vector<int>{0, 1, 2, 5, 9} : std::vector<int>{0, 1, 5}) {
            for (Family f : {Family::Plus, Family::Minus}) {
                if (f == Family::Minus && n == 0) continue;
                const auto mode = mathieu::solve_mode(f, n, q);
                double scale = 0.0;
                for (double xi = 0.0; xi <= 1.5; xi += 0.1) {
                    scale = std::max(scale, std::abs(mode.radial_fourier(xi).value));
                }
                for (double xi : {0.0, 0.4, 0.9, 1.5}) {
                    const auto av = mode.radial_fourier(xi);
                    const auto bv = mode.radial_bessel(xi);
                    worst = std::max(worst, std::abs(av.value - bv.value) / scale);
                }
            }
        }
    }
    return make("radial-cross-method", worst, 1e-8);
}

SuiteResult radial_zero_residual(bool full) {
    const double xi0 = geometry::xi_for_mu(0.5);
    double worst = 0.0;
    for (int n : {0, 1}) {
        for (int m = 1; m <= (full ? 4 : 2); ++m) {
            const auto z = mathieu::find_q_zero(Family::Plus, n, m, xi0);
            const auto mode = mathieu::solve_mode(Family::Plus, n, z.q_root);
            double scale = 0.0;
            for (double xi = 0.0; xi <= xi0; xi += xi0 / 50.0) {
                scale = std::max(scale, std::abs(mode.radial(xi).value));
            }
            worst = std::max(worst, std::abs(mode.radial(xi0).value) / scale);
        }
    }
    return make("radial-zero-residual", worst, 1e-10);
}

SuiteResult geometry_roundtrip(bool) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> uxi(1e-6, 1.4), ueta(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const EllipticPoint p{uxi(rng), ueta(rng)};
        auto [x, y] = geometry::to_cartesian(p);
        const auto back = geometry::to_elliptic(x, y);
        auto [x2, y2] = geometry::to_cartesian(back);
        worst = std::max(worst, std::hypot(x2 - x, y2 - y));
    }
    return make("geometry-roundtrip", worst, 1e-10);
}

SuiteResult grid_area(bool) {
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_xi0(1.0), 32, 64);
    const double rel = std::abs(grid.total_weight() - grid.exact_area()) / grid.exact_area();
    return make("grid-area", rel, 1e-12);
}

SuiteResult symmetry_class(bool) {
    const auto mode = mathieu::solve_mode(Family::Plus, 2, 1.3);
    auto zf = [&mode](double xi, double eta) {
        return mode.radial(xi).value * mode.angular(eta).value;
    };
    auto dz = [&mode](double xi, double eta) {
        return mode.radial(xi).derivative * mode.angular(eta).value;
    };
    std::function<double(double, double)> dgrad = dz;
    const auto rep = geometry::check_symmetry_class(zf, 0.8, 48, &dgrad);
    const double worst = std::max({rep.periodicity, rep.displacement, rep.gradient});
    auto r = make("symmetry-class", worst, 1e-9);
    // deliberate counterexample must be caught
    const auto bad = geometry::check_symmetry_class([](double, double eta) { return std::sin(eta); },
                                                    0.8, 48);
    if (bad.pass(1e-9)) {
        r.pass = false;
        r.detail = "counterexample not detected";
    }
    return r;
}

SuiteResult rqm_scalar_identity(bool) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> uxi(0.0, 1.2), ueta(0.0, 2.0 * kPi);
    const auto M = rqm::RqmFunction::make(Family::Plus, 2, 2.4);
    double worst = 0.0;
    for (int t = 0; t < 60; ++t) {
        const EllipticPoint p{uxi(rng), ueta(rng)};
        const double z = rqm::zeta(Family::Plus, 2, 2.4 * 2.4 / 4.0, p);
        worst = std::max(worst, std::abs(M.eval(p).s - z) / (1.0 + std::abs(z)));
    }
    return make("rqm-scalar-identity", worst, 1e-12);
}

SuiteResult rqm_conjugation(bool) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> uxi(0.0, 1.0), ueta(0.0, 2.0 * kPi);
    const auto Mp = rqm::RqmFunction::make(Family::Minus, 2, 2.6);
    const auto Mm = rqm::RqmFunction::make(Family::Minus, 2, -2.6);
    double worst = 0.0;
    for (int t = 0; t < 40; ++t) {
        const EllipticPoint p{uxi(rng), ueta(rng)};
        const auto a = Mp.eval(p);
        const auto b = Mm.eval(p);
        worst = std::max(worst, (a - b.conjugate()).norm() / (1.0 + a.norm()));
    }
    return make("rqm-conjugation", worst, 1e-14);
}

SuiteResult metamonogenic(bool full) {
    const auto region = geometry::EllipseSpec::from_xi0(0.9);
    double worst = 0.0;
    for (const auto& [f, n, lam] : full ? std::vector<std::tuple<Family, int, double>>{
                                              {Family::Plus, 0, 0.5},
                                              {Family::Plus, 2, 1.5},
                                              {Family::Plus, 4, 3.0},
                                              {Family::Minus, 1, 0.5},
                                              {Family::Minus, 3, 3.0}}
                                        : std::vector<std::tuple<Family, int, double>>{
                                              {Family::Plus, 2, 1.5},
                                              {Family::Minus, 1, 0.5}}) {
        const auto M = rqm::RqmFunction::make(f, n, lam);
        auto planar = [&M](double x, double y) { return M.eval_cartesian(x, y); };
        const auto res = ops::metamonogenic_residual(planar, lam, region, full ? 40 : 20);
        worst = std::max(worst, res.max_residual);
    }
    return make("metamonogenic-residual", worst, 1e-5);
}

SuiteResult boundary_vanishing(bool full) {
    double worst = 0.0;
    for (const auto& [f, n, m] : full ? std::vector<std::tuple<Family, int, int>>{
                                            {Family::Plus, 0, 1},
                                            {Family::Plus, 1, 2},
                                            {Family::Minus, 1, 1},
                                            {Family::Minus, 2, 2}}
                                      : std::vector<std::tuple<Family, int, int>>{
                                            {Family::Plus, 0, 1},
                                            {Family::Minus, 1, 1}}) {
        const auto z = rqm::ZeroBoundaryFunction::make(f, n, m, 0.5);
        const double xi0 = geometry::xi_for_mu(0.5);
        double scale = 0.0;
        for (int k = 0; k < 16; ++k) {
            scale = std::max(scale, std::abs(z.eval({0.5 * xi0, 2.0 * kPi * k / 16.0}).s));
        }
        for (int k = 0; k < 64; ++k) {
            worst = std::max(worst, std::abs(z.eval({xi0, 2.0 * kPi * k / 64.0}).s) / scale);
        }
    }
    return make("boundary-vanishing", worst, 1e-9);
}

SuiteResult gram_orthogonality(bool full) {
    const double mu = 0.5;
    std::vector<rqm::ZeroBoundaryFunction> modes;
    const int nmax = full ? 3 : 1, mmax = full ? 3 : 2;
    for (int n = 0; n <= nmax; ++n) {
        for (int m = 1; m <= mmax; ++m) modes.push_back(rqm::ZeroBoundaryFunction::make(Family::Plus, n, m, mu));
    }
    for (int n = 1; n <= nmax; ++n) {
        for (int m = 1; m <= mmax; ++m) modes.push_back(rqm::ZeroBoundaryFunction::make(Family::Minus, n, m, mu));
    }
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(mu), 48, 96);
    const auto g = rqm::gram_matrix(modes, grid);
    double worst = 0.0;
    for (int a = 0; a < g.rows(); ++a) {
        for (int b = 0; b < g.cols(); ++b) {
            if (a != b) worst = std::max(worst, std::abs(g(a, b)) / std::sqrt(g(a, a) * g(b, b)));
        }
    }
    return make("gram-orthogonality", worst, 1e-8);
}

SuiteResult disk_gram_norms(bool full) {
    std::vector<rqm::DiskLimitFunction> modes;
    modes.push_back(rqm::DiskLimitFunction::zero_boundary(Family::Plus, 0, 1));
    modes.push_back(rqm::DiskLimitFunction::zero_boundary(Family::Plus, 1, 1));
    if (full) {
        modes.push_back(rqm::DiskLimitFunction::zero_boundary(Family::Plus, 0, 2));
        modes.push_back(rqm::DiskLimitFunction::zero_boundary(Family::Minus, 1, 1));
    }
    const auto rep = rqm::disk_gram(modes, 96, 128);
    double worst = rep.max_offdiag_normalized;
    for (size_t i = 0; i < modes.size(); ++i) {
        worst = std::max(worst, std::abs(rep.diag_measured[i] - rep.candidate_squared[i]) /
                                    rep.candidate_squared[i]);
    }
    return make("disk-gram-norms", worst, 1e-8, "squared-Bessel norm candidate");
}

SuiteResult disk_limit_convergence(bool full) {
    bool ok = true;
    double last = 0.0;
    for (const auto& [f, n] : full ? std::vector<std::pair<Family, int>>{{Family::Plus, 0},
                                                                         {Family::Plus, 2},
                                                                         {Family::Minus, 1}}
                                   : std::vector<std::pair<Family, int>>{{Family::Plus, 2}}) {
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
                const auto a = M.eval(geometry::to_elliptic(r * std::cos(th) / mu,
                                                            r * std::sin(th) / mu)) *
                               scale;
                const auto b = F.eval(r * std::cos(th), r * std::sin(th));
                sup = std::max(sup, (a - b).norm());
            }
            ok = ok && sup < prev;
            prev = sup;
        }
        last = std::max(last, prev / bessel::beta_constant(n));
    }
    auto r = make("disk-limit-convergence", last, 0.05);
    r.pass = r.pass && ok;
    if (!ok) r.detail = "sup-distance not strictly decreasing";
    return r;
}

SuiteResult cauchy_reconstruction(bool) {
    const double lam = 1.5;
    const auto M = rqm::RqmFunction::make(Family::Plus, 1, lam);
    auto planar = [&M](double x, double y) { return M.eval_cartesian(x, y); };
    const auto region = geometry::EllipseSpec::from_xi0(0.8);
    const auto direct = M.eval_cartesian(0.2, 0.1);
    const auto r1 = rqm::cauchy_reconstruct(planar, lam, 0.2, 0.1, 0.3, 512, region);
    const auto r2 = rqm::cauchy_reconstruct(planar, lam, 0.2, 0.1, 0.45, 512, region);
    const double worst = std::max((r1.value - direct).norm(), (r1.value - r2.value).norm());
    return make("cauchy-reconstruction", worst, 1e-6);
}

SuiteResult wave_frequency(bool) {
    const auto sol = wave::from_coefficients(
        {{Family::Plus, 0, 1, 1.0}, {Family::Plus, 1, 1, 1.0}, {Family::Minus, 1, 2, 0.5}}, 0.7,
        10.0);
    double worst = 0.0;
    for (const auto& term : sol.terms()) {
        worst = std::max(worst, std::abs(term.omega * term.omega * 100.0 -
                                         4.0 * term.mode.zero().q_root));
    }
    return make("wave-frequency-consistency", worst, 1e-12);
}

SuiteResult wave_superposition(bool) {
    const auto a = wave::from_coefficients({{Family::Plus, 0, 1, 0.4}}, 0.6, 5.0);
    const auto b = wave::from_coefficients({{Family::Minus, 1, 1, -1.1}}, 0.6, 5.0);
    const auto ab = wave::from_coefficients(
        {{Family::Plus, 0, 1, 0.4}, {Family::Minus, 1, 1, -1.1}}, 0.6, 5.0);
    double worst = 0.0;
    for (double t : {0.0, 1.0}) {
        const EllipticPoint p{0.3, 2.6};
        worst = std::max(worst,
                         (ab.evaluate(p, t) - (a.evaluate(p, t) + b.evaluate(p, t))).norm());
    }
    return make("wave-superposition", worst, 1e-12);
}

SuiteResult wave_time_residual(bool full) {
    const auto sol = wave::from_coefficients({{Family::Plus, 1, 1, 1.0}}, 0.6, 5.0);
    std::vector<wave::SpaceTimeSample> samples;
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> uxi(0.15, 0.8), ueta(0.0, 2.0 * kPi), ut(0.0, 0.4);
    for (int k = 0; k < (full ? 20 : 8); ++k) samples.push_back({{uxi(rng), ueta(rng)}, ut(rng)});
    return make("wave-time-residual", wave::residual_time_metamonogenic(sol, samples, {1e-4}),
                1e-5);
}

SuiteResult projection_idempotence(bool full) {
    const double mu0 = 0.6;
    const auto sol = wave::from_coefficients(
        {{Family::Plus, 0, 1, 1.0}, {Family::Minus, 1, 1, -0.4}}, mu0, 10.0);
    auto initial = [&sol](const EllipticPoint& p) { return sol.scalar_at_t0(p); };
    const auto grid = geometry::make_grid(geometry::EllipseSpec::from_mu(mu0), full ? 64 : 48,
                                          full ? 128 : 96);
    const auto rebuilt = wave::build_solution(initial, 1, 1, mu0, 10.0, grid);
    double worst = 0.0;
    for (const auto& term : rebuilt.solution.terms()) {
        double want = 0.0;
        for (const auto& src : sol.terms()) {
            if (src.family == term.family && src.n == term.n && src.m == term.m) want = src.coefficient;
        }
        worst = std::max(worst, std::abs(term.coefficient - want));
    }
    return make("projection-idempotence", worst, 1e-7);
}

SuiteResult joining_factors_suite(bool) {
    const double q = 1e-4;
    double worst = 0.0;
    worst = std::max(worst, std::abs(mathieu::joining_factors(0, q).p_prime /
                                         bessel::beta_constant(0) - 1.0));
    worst = std::max(worst, std::abs(q * mathieu::joining_factors(2, q).p_prime /
                                         bessel::beta_constant(2) - 1.0));
    worst = std::max(worst, std::abs(std::sqrt(q) * mathieu::joining_factors(1, q).s_prime.value() /
                                         bessel::beta_constant(1) - 1.0));
    worst = std::max(worst, std::abs(q * mathieu::joining_factors(2, q).s_prime.value() /
                                         bessel::beta_constant(2) - 1.0));
    return make("joining-factors", worst, 0.02);
}

}  // namespace

nlohmann::json run_verification(const VerifyOptions& opts) {
    const bool full = (opts.level == "full");
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<SuiteResult> results;
    results.push_back(bessel_recurrence(full));
    results.push_back(bessel_ode(full));
    results.push_back(bessel_zero_interlacing(full));
    results.push_back(mathieu_interlacing(full));
    results.push_back(mathieu_normalization(full));
    results.push_back(mathieu_orthogonality(full));
    results.push_back(mathieu_ode_residual(full, opts.inject_fault));
    results.push_back(radial_cross_method(full));
    results.push_back(radial_zero_residual(full));
    results.push_back(geometry_roundtrip(full));
    results.push_back(grid_area(full));
    results.push_back(symmetry_class(full));
    results.push_back(rqm_scalar_identity(full));
    results.push_back(rqm_conjugation(full));
    results.push_back(metamonogenic(full));
    results.push_back(boundary_vanishing(full));
    results.push_back(gram_orthogonality(full));
    results.push_back(disk_gram_norms(full));
    results.push_back(disk_limit_convergence(full));
    results.push_back(cauchy_reconstruction(full));
    results.push_back(wave_frequency(full));
    results.push_back(wave_superposition(full));
    results.push_back(wave_time_residual(full));
    results.push_back(projection_idempotence(full));
    results.push_back(joining_factors_suite(full));

    const auto t1 = std::chrono::steady_clock::now();

    nlohmann::json doc;
    doc["schema"] = "rqmf-verify-report/1";
    doc["level"] = opts.level;
    doc["injected_fault"] = opts.inject_fault;
    bool all = true;
    auto& suites = doc["suites"] = nlohmann::json::array();
    for (const auto& r : results) {
        suites.push_back({{"name", r.name},
                          {"pass", r.pass},
                          {"measured", r.measured},
                          {"tolerance", r.tolerance},
                          {"detail", r.detail}});
        all = all && r.pass;
    }
    doc["pass"] = all;
    doc["elapsed_seconds"] = std::chrono::duration<double>(t1 - t0).count();
    return doc;
}

}  // namespace rqmf_cli
