#include "rqmf/rqm.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "rqmf/bessel.hpp"

namespace rqmf::rqm {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
// Below this value of cosh 2xi - cos 2eta the vector-part prefactor is
// evaluated by the local expansion about the focus.
constexpr double kFocusThreshold = 1e-6;

double stable_w(double xi, double eta) {
    const double sh = std::sinh(xi);
    const double se = std::sin(eta);
    return 2.0 * (sh * sh + se * se);  // == cosh 2xi - cos 2eta, no cancellation
}

// Taylor coefficients psi^(k)(0)/k! resp. phi^(k)(eta0)/k!, k = 0..5,
// with the second and higher derivatives supplied by the Mathieu ODEs
// (cos 2eta0 = cosh 0 = 1 at the relevant points).
std::array<double, 6> ode_taylor(double v0, double d0, double a_minus_2q, double q, bool radial) {
    // radial:  psi'' = (a - 2q) psi,  psi'''' = ((a-2q)^2 - 8q) psi, ...
    // angular: phi'' = -(a - 2q) phi, phi'''' = ((a-2q)^2 - 8q) phi, ...
    const double c = radial ? a_minus_2q : -a_minus_2q;
    const double c2 = a_minus_2q * a_minus_2q;
    std::array<double, 6> t{};
    t[0] = v0;
    t[1] = d0;
    t[2] = c * v0 / 2.0;
    t[3] = c * d0 / 6.0;
    t[4] = (c2 - 8.0 * q) * v0 / 24.0;
    t[5] = (c2 - 24.0 * q) * d0 / 120.0;
    return t;
}

// 6-term polynomial product, truncated at degree 5.
std::array<double, 6> poly_mul(const std::array<double, 6>& a, const std::array<double, 6>& b) {
    std::array<double, 6> c{};
    for (int i = 0; i < 6; ++i) {
        for (int k = 0; i + k < 6; ++k) c[static_cast<size_t>(i + k)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(k)];
    }
    return c;
}

double poly_eval(const std::array<double, 6>& a, double x) {
    double r = 0.0;
    for (int i = 5; i >= 0; --i) r = r * x + a[static_cast<size_t>(i)];
    return r;
}

const std::array<double, 6> kSinhSeries{0.0, 1.0, 0.0, 1.0 / 6.0, 0.0, 1.0 / 120.0};
const std::array<double, 6> kCoshSeries{1.0, 0.0, 0.5, 0.0, 1.0 / 24.0, 0.0};
const std::array<double, 6> kSinSeries{0.0, 1.0, 0.0, -1.0 / 6.0, 0.0, 1.0 / 120.0};
const std::array<double, 6> kCosSeries{1.0, 0.0, -0.5, 0.0, 1.0 / 24.0, 0.0};

std::array<double, 6> shift_derivative(const std::array<double, 6>& taylor) {
    // series of f' when `taylor` holds f^(k)(0)/k!
    std::array<double, 6> d{};
    for (int k = 0; k < 5; ++k) d[static_cast<size_t>(k)] = (k + 1) * taylor[static_cast<size_t>(k) + 1];
    return d;
}

}  // namespace

double zeta(Family family, int n, double q, const EllipticPoint& at) {
    const mathieu::Mode mode = mathieu::solve_mode(family, n, q);
    return mode.radial(at.xi).value * mode.angular(at.eta).value;
}

RqmFunction::RqmFunction(Family f, int n, double lambda, mathieu::Mode mode)
    : family_(f), n_(n), lambda_(lambda), mode_(std::move(mode)) {
    const auto r0 = mode_.radial(0.0);
    psi0_ = r0.value;
    dpsi0_ = r0.derivative;
    if (family_ == Family::Plus) dpsi0_ = 0.0;  // exact by parity
    if (family_ == Family::Minus) psi0_ = 0.0;
}

RqmFunction RqmFunction::make(Family family, int n, double lambda) {
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        throw std::domain_error("RqmFunction: lambda must be nonzero and finite");
    }
    const double q = lambda * lambda / 4.0;
    return RqmFunction(family, n, lambda, mathieu::solve_mode(family, n, q));
}

ReducedQuaternion RqmFunction::eval(const EllipticPoint& at) const {
    const double xi = at.xi;
    double eta = std::fmod(at.eta, kTwoPi);
    if (eta < 0.0) eta += kTwoPi;

    const double w = stable_w(xi, eta);

    if (w >= kFocusThreshold) {
        const auto ang = mode_.angular(eta);
        const auto rad = mode_.radial(xi);
        const double sh = std::sinh(xi), ch = std::cosh(xi);
        const double ce = std::cos(eta), se = std::sin(eta);
        const double pre = -2.0 / (lambda_ * w);
        return {rad.value * ang.value,
                pre * (sh * ce * rad.derivative * ang.value - ch * se * rad.value * ang.derivative),
                pre * (ch * se * rad.derivative * ang.value + sh * ce * rad.value * ang.derivative)};
    }

    // Local expansion about the nearest focus (0, eta0), eta0 in {0, pi}.
    const double eta0 = (std::abs(eta - kPi) < kPi / 2.0) ? kPi : 0.0;
    const double u = xi;
    const double v = (eta0 == 0.0 && eta > kPi) ? eta - kTwoPi : eta - eta0;
    const double sigma = (eta0 == 0.0) ? 1.0 : -1.0;

    const double q = mode_.q;
    const double c = mode_.characteristic - 2.0 * q;
    const auto phi0 = mode_.angular(eta0);
    double w0 = phi0.value, w1 = phi0.derivative;
    if (family_ == Family::Plus) w1 = 0.0;  // exact by parity about eta0
    if (family_ == Family::Minus) w0 = 0.0;

    const auto psi_t = ode_taylor(psi0_, dpsi0_, c, q, true);
    const auto phi_t = ode_taylor(w0, w1, c, q, false);
    const auto dpsi_t = shift_derivative(psi_t);
    const auto dphi_t = shift_derivative(phi_t);

    const auto Au = poly_mul(kSinhSeries, dpsi_t);  // sinh(u) psi'(u)
    const auto Cu = poly_mul(kCoshSeries, psi_t);   // cosh(u) psi(u)
    const auto Gu = poly_mul(kCoshSeries, dpsi_t);  // cosh(u) psi'(u)
    const auto Ku = poly_mul(kSinhSeries, psi_t);   // sinh(u) psi(u)
    const auto Bv = poly_mul(kCosSeries, phi_t);    // cos(v) phi(eta0+v)
    const auto Ev = poly_mul(kSinSeries, dphi_t);   // sin(v) phi'(eta0+v)
    const auto Hv = poly_mul(kSinSeries, phi_t);    // sin(v) phi(eta0+v)
    const auto Lv = poly_mul(kCosSeries, dphi_t);   // cos(v) phi'(eta0+v)

    // N_i = sigma (Au Bv - Cu Ev), N_j = sigma (Gu Hv + Ku Lv); combine
    // the coefficient tensors first so the exact uv cancellation in N_j
    // happens on coefficients, not on nearly equal evaluations.
    double ni = 0.0, nj = 0.0;
    double upow[6], vpow[6];
    upow[0] = vpow[0] = 1.0;
    for (int k = 1; k < 6; ++k) {
        upow[k] = upow[k - 1] * u;
        vpow[k] = vpow[k - 1] * v;
    }
    for (int iu = 0; iu < 6; ++iu) {
        for (int iv = 0; iu + iv < 6; ++iv) {
            const double ci = Au[static_cast<size_t>(iu)] * Bv[static_cast<size_t>(iv)] -
                              Cu[static_cast<size_t>(iu)] * Ev[static_cast<size_t>(iv)];
            const double cj = Gu[static_cast<size_t>(iu)] * Hv[static_cast<size_t>(iv)] +
                              Ku[static_cast<size_t>(iu)] * Lv[static_cast<size_t>(iv)];
            ni += ci * upow[iu] * vpow[iv];
            nj += cj * upow[iu] * vpow[iv];
        }
    }
    ni *= sigma;
    nj *= sigma;

    const double scalar = poly_eval(psi_t, u) * poly_eval(phi_t, v);

    double ratio_i, ratio_j;
    if (w < 1e-28) {
        // exact focus: the u^2 and v^2 numerator coefficients agree by
        // the ODE identities (and the uv ones vanish), so N / W has a
        // direction-free limit for both vector components
        const double ci20 = Au[2] * Bv[0] - Cu[2] * Ev[0];
        const double ci02 = Au[0] * Bv[2] - Cu[0] * Ev[2];
        const double cj20 = Gu[2] * Hv[0] + Ku[2] * Lv[0];
        const double cj02 = Gu[0] * Hv[2] + Ku[0] * Lv[2];
        ratio_i = sigma * 0.25 * (ci20 + ci02);
        ratio_j = sigma * 0.25 * (cj20 + cj02);
    } else {
        ratio_i = ni / w;
        ratio_j = nj / w;
    }
    const double pre = -2.0 / lambda_;
    return {scalar, pre * ratio_i, pre * ratio_j};
}

ReducedQuaternion RqmFunction::eval_cartesian(double x, double y) const {
    return eval(geometry::to_elliptic(x, y));
}

ZeroBoundaryFunction ZeroBoundaryFunction::make(Family family, int n, int m, double mu) {
    const double xi0 = geometry::xi_for_mu(mu);
    const mathieu::RadialZero z = mathieu::find_q_zero(family, n, m, xi0);
    RqmFunction fn = RqmFunction::make(family, n, 2.0 * std::sqrt(z.q_root));
    return ZeroBoundaryFunction(m, mu, z, std::move(fn));
}

std::vector<ZeroBoundaryFunction> enumerate_modes(double mu, int n_max, int m_max) {
    if (n_max < 0 || m_max < 1) throw std::invalid_argument("enumerate_modes: empty mode ranges");
    std::vector<ZeroBoundaryFunction> out;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 1; m <= m_max; ++m) out.push_back(ZeroBoundaryFunction::make(Family::Plus, n, m, mu));
    }
    for (int n = 1; n <= n_max; ++n) {
        for (int m = 1; m <= m_max; ++m) out.push_back(ZeroBoundaryFunction::make(Family::Minus, n, m, mu));
    }
    return out;
}

DiskLimitFunction DiskLimitFunction::from_alpha(Family family, int n, double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("DiskLimitFunction: alpha must be positive");
    if (n < 0) throw std::out_of_range("DiskLimitFunction: order must be nonnegative");
    if (family == Family::Minus && n == 0) {
        throw std::invalid_argument("DiskLimitFunction: the odd family needs n >= 1");
    }
    return DiskLimitFunction(family, n, alpha, std::nullopt);
}

DiskLimitFunction DiskLimitFunction::zero_boundary(Family family, int n, int m) {
    DiskLimitFunction f = from_alpha(family, n, bessel::j_zero(n, m));
    f.m_ = m;
    return f;
}

ReducedQuaternion DiskLimitFunction::eval(double u, double v) const {
    const double r = std::hypot(u, v);
    if (r >= 1.0) throw std::domain_error("DiskLimitFunction::eval: |w| must be < 1");
    const double beta = bessel::beta_constant(n_);

    if (r == 0.0) {
        if (n_ == 0) return {beta, 0.0, 0.0};
        if (n_ == 1) {
            // limit of the two vector terms; third term cancels half of
            // the second along every direction
            return (family_ == Family::Plus) ? ReducedQuaternion{0.0, -0.5 * beta, 0.0}
                                             : ReducedQuaternion{0.0, 0.0, -0.5 * beta};
        }
        return {0.0, 0.0, 0.0};
    }

    const double theta = std::atan2(v, u);
    const double x = alpha_ * r;
    const double jn = bessel::j(n_, x);
    const double jnp = bessel::j_prime(n_, x);
    const double php = std::cos(n_ * theta);
    const double phm = std::sin(n_ * theta);
    const double pp = (family_ == Family::Plus) ? php : phm;  // Phi^{family}
    const double pm = (family_ == Family::Plus) ? phm : php;  // Phi^{opposite}
    const double third_sign = (family_ == Family::Plus) ? -1.0 : 1.0;

    // J_n(x)/x via the series for small x; the third term is written as
    // n beta (i v/r - j u/r) (J_n(x)/x) Phi^opp, so J/r^2 never forms.
    double jn_over_x;
    if (x < 0.5 && n_ >= 1) {
        long double tt = 1.0L;
        for (int k = 1; k <= n_; ++k) tt *= (0.5L * x) / k;
        tt /= x;
        long double sum = tt;
        const long double h2 = 0.25L * static_cast<long double>(x) * x;
        for (int k = 1; k < 60; ++k) {
            tt *= -h2 / (static_cast<long double>(k) * (n_ + k));
            sum += tt;
            if (std::abs(tt) < 1e-22L * std::abs(sum)) break;
        }
        jn_over_x = static_cast<double>(sum);
    } else {
        jn_over_x = jn / x;
    }

    const double ux = u / r, vy = v / r;
    ReducedQuaternion out{beta * jn * pp,
                          -beta * ux * jnp * pp,
                          -beta * vy * jnp * pp};
    out.x1 += third_sign * n_ * beta * vy * jn_over_x * pm;
    out.x2 += third_sign * n_ * beta * (-ux) * jn_over_x * pm;
    return out;
}

double disk_limit_scale(int n, double q) {
    double s = std::pow(q, 0.5 * n);
    if (n == 0) s /= std::sqrt(2.0);
    return s;
}

ReducedQuaternion cauchy_kernel(double lambda, double zx, double zy) {
    if (lambda == 0.0) throw std::domain_error("cauchy_kernel: lambda must be nonzero");
    const double r = std::hypot(zx, zy);
    if (r == 0.0) throw std::domain_error("cauchy_kernel: singular at z = 0");
    const double al = std::abs(lambda);
    const double y0v = bessel::y0(al * r);
    const double y1v = bessel::y1(al * r);
    return {0.5 * lambda * y0v, 0.5 * al * (zx / r) * y1v, 0.5 * al * (zy / r) * y1v};
}

CauchyReconstruction cauchy_reconstruct(const std::function<ReducedQuaternion(double, double)>& f,
                                        double lambda, double cx, double cy, double radius,
                                        int quad_order, const geometry::EllipseSpec& region) {
    if (!(radius > 0.0)) throw std::domain_error("cauchy_reconstruct: radius must be positive");
    if (quad_order < 8) throw std::domain_error("cauchy_reconstruct: quadrature order too small");

    // the whole circle must stay inside the (scaled) ellipse
    for (int k = 0; k < quad_order; ++k) {
        const double th = kTwoPi * k / quad_order;
        const double px = (cx + radius * std::cos(th)) / region.scale;
        const double py = (cy + radius * std::sin(th)) / region.scale;
        if (geometry::to_elliptic(px, py).xi >= region.xi0) {
            throw std::domain_error("cauchy_reconstruct: contour leaves the domain");
        }
    }

    Quaternion acc{};
    const double ds = kTwoPi * radius / quad_order;
    for (int k = 0; k < quad_order; ++k) {
        const double th = kTwoPi * k / quad_order;
        const double zx = cx + radius * std::cos(th);
        const double zy = cy + radius * std::sin(th);
        const Quaternion nq{0.0, std::cos(th), std::sin(th), 0.0};
        const ReducedQuaternion kv = cauchy_kernel(lambda, cx - zx, cy - zy);
        acc = acc + (kv.full() * nq * f(zx, zy).full()) * ds;
    }
    acc = acc * (-0.5);
    return {{acc.s, acc.x1, acc.x2}, acc.x3};
}

std::vector<ReducedQuaternion> sample_on_grid(const RqmFunction& fn,
                                              const geometry::QuadratureGrid& grid) {
    const mathieu::Mode& mode = fn.mode();
    const size_t nxi = grid.nodes_xi.size(), neta = grid.nodes_eta.size();
    std::vector<mathieu::Mode::Eval> rad(nxi), ang(neta);
    for (size_t i = 0; i < nxi; ++i) rad[i] = mode.radial(grid.nodes_xi[i]);
    for (size_t k = 0; k < neta; ++k) ang[k] = mode.angular(grid.nodes_eta[k]);

    std::vector<ReducedQuaternion> out(grid.size());
    const double lam = fn.lambda();
    for (size_t i = 0; i < nxi; ++i) {
        const double xi = grid.nodes_xi[i];
        const double sh = std::sinh(xi), ch = std::cosh(xi);
        for (size_t k = 0; k < neta; ++k) {
            const double eta = grid.nodes_eta[k];
            const double w = stable_w(xi, eta);
            if (w < kFocusThreshold) {
                out[grid.index(i, k)] = fn.eval({xi, eta});
                continue;
            }
            const double ce = std::cos(eta), se = std::sin(eta);
            const double pre = -2.0 / (lam * w);
            out[grid.index(i, k)] = {
                rad[i].value * ang[k].value,
                pre * (sh * ce * rad[i].derivative * ang[k].value -
                       ch * se * rad[i].value * ang[k].derivative),
                pre * (ch * se * rad[i].derivative * ang[k].value +
                       sh * ce * rad[i].value * ang[k].derivative)};
        }
    }
    return out;
}

Eigen::MatrixXd gram_matrix(const std::vector<ZeroBoundaryFunction>& modes,
                            const geometry::QuadratureGrid& grid, int threads) {
    if (modes.empty()) throw std::invalid_argument("gram_matrix: empty mode list");
    const double mu = modes.front().mu();
    for (const auto& z : modes) {
        if (std::abs(z.mu() - mu) > 1e-14) {
            throw std::invalid_argument("gram_matrix: modes do not share mu");
        }
    }
    if (!grid.spec.mu || std::abs(*grid.spec.mu - mu) > 1e-12) {
        throw std::invalid_argument("gram_matrix: grid was not built for the modes' mu");
    }
    threads = std::clamp(threads, 1, 64);

    std::vector<std::vector<ReducedQuaternion>> fields(modes.size());
    auto parallel_for = [threads](size_t count, const std::function<void(size_t)>& body) {
        if (threads == 1 || count < 2) {
            for (size_t i = 0; i < count; ++i) body(i);
            return;
        }
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        const int used = std::min<size_t>(threads, count);
        for (int t = 0; t < used; ++t) {
            pool.emplace_back([&]() {
                for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
            });
        }
        for (auto& th : pool) th.join();
    };

    parallel_for(modes.size(),
                 [&](size_t i) { fields[i] = sample_on_grid(modes[i].rqm(), grid); });

    const auto nm = static_cast<Eigen::Index>(modes.size());
    Eigen::MatrixXd g(nm, nm);
    parallel_for(static_cast<size_t>(nm), [&](size_t ai) {
        const auto a = static_cast<Eigen::Index>(ai);
        for (Eigen::Index b = a; b < nm; ++b) {
            g(a, b) = geometry::inner_product(
                std::span<const ReducedQuaternion>(fields[static_cast<size_t>(a)]),
                std::span<const ReducedQuaternion>(fields[static_cast<size_t>(b)]), grid);
        }
    });
    for (Eigen::Index a = 0; a < nm; ++a) {
        for (Eigen::Index b = a + 1; b < nm; ++b) g(b, a) = g(a, b);
    }
    return g;
}

ProjectionResult project(const std::function<ReducedQuaternion(const EllipticPoint&)>& target,
                         const std::vector<ZeroBoundaryFunction>& modes,
                         const geometry::QuadratureGrid& grid) {
    if (modes.empty()) throw std::invalid_argument("project: empty mode list");

    std::vector<ReducedQuaternion> tgt(grid.size());
    for (size_t i = 0; i < grid.nodes_xi.size(); ++i) {
        for (size_t k = 0; k < grid.nodes_eta.size(); ++k) {
            tgt[grid.index(i, k)] = target({grid.nodes_xi[i], grid.nodes_eta[k]});
        }
    }

    ProjectionResult out;
    out.target_l2 = std::sqrt(std::max(
        0.0, geometry::inner_product(std::span<const ReducedQuaternion>(tgt),
                                     std::span<const ReducedQuaternion>(tgt), grid)));

    std::vector<std::vector<ReducedQuaternion>> fields;
    fields.reserve(modes.size());
    for (const auto& z : modes) fields.push_back(sample_on_grid(z.rqm(), grid));

    out.coefficients.resize(modes.size());
    for (size_t a = 0; a < modes.size(); ++a) {
        const auto& f = fields[a];
        const double nn = geometry::inner_product(std::span<const ReducedQuaternion>(f),
                                                  std::span<const ReducedQuaternion>(f), grid);
        const double ip = geometry::inner_product(std::span<const ReducedQuaternion>(f),
                                                  std::span<const ReducedQuaternion>(tgt), grid);
        out.coefficients[a] = ip / nn;
    }

    std::vector<ReducedQuaternion> resid = tgt;
    for (size_t a = 0; a < modes.size(); ++a) {
        for (size_t i = 0; i < resid.size(); ++i) {
            resid[i] = resid[i] - fields[a][i] * out.coefficients[a];
        }
    }
    out.residual_l2 = std::sqrt(std::max(
        0.0, geometry::inner_product(std::span<const ReducedQuaternion>(resid),
                                     std::span<const ReducedQuaternion>(resid), grid)));
    return out;
}

DiskGramReport disk_gram(const std::vector<DiskLimitFunction>& modes, int order_r,
                         int order_theta) {
    if (modes.empty()) throw std::invalid_argument("disk_gram: empty mode list");
    if (order_r < 8 || order_theta < 8) throw std::domain_error("disk_gram: quadrature orders too small");

    std::vector<double> rx, rw;
    geometry::gauss_legendre(order_r, rx, rw);
    std::vector<double> rnode(static_cast<size_t>(order_r)), rweight(static_cast<size_t>(order_r));
    for (int i = 0; i < order_r; ++i) {
        rnode[static_cast<size_t>(i)] = 0.5 * (rx[static_cast<size_t>(i)] + 1.0);
        rweight[static_cast<size_t>(i)] = 0.5 * rw[static_cast<size_t>(i)];
    }

    const size_t npts = static_cast<size_t>(order_r) * static_cast<size_t>(order_theta);
    std::vector<double> wq(npts);
    std::vector<std::vector<ReducedQuaternion>> fields(modes.size(), std::vector<ReducedQuaternion>(npts));
    for (int i = 0; i < order_r; ++i) {
        const double r = rnode[static_cast<size_t>(i)];
        for (int k = 0; k < order_theta; ++k) {
            const double th = kTwoPi * k / order_theta;
            const size_t idx = static_cast<size_t>(i) * static_cast<size_t>(order_theta) +
                               static_cast<size_t>(k);
            wq[idx] = rweight[static_cast<size_t>(i)] * r * (kTwoPi / order_theta);
            for (size_t a = 0; a < modes.size(); ++a) {
                fields[a][idx] = modes[a].eval(r * std::cos(th), r * std::sin(th));
            }
        }
    }

    auto dot = [&](size_t a, size_t b) {
        std::vector<double> acc(npts);
        for (size_t i = 0; i < npts; ++i) acc[i] = wq[i] * scalar_product(fields[a][i], fields[b][i]);
        size_t n = acc.size();
        while (n > 1) {
            const size_t half = (n + 1) / 2;
            for (size_t i = 0; i < n / 2; ++i) acc[i] = acc[2 * i] + acc[2 * i + 1];
            if (n % 2 != 0) acc[n / 2] = acc[n - 1];
            n = half;
        }
        return acc[0];
    };

    DiskGramReport rep;
    const auto nm = static_cast<Eigen::Index>(modes.size());
    rep.gram.resize(nm, nm);
    for (Eigen::Index a = 0; a < nm; ++a) {
        for (Eigen::Index b = a; b < nm; ++b) {
            const double v = dot(static_cast<size_t>(a), static_cast<size_t>(b));
            rep.gram(a, b) = v;
            rep.gram(b, a) = v;
        }
    }
    for (size_t a = 0; a < modes.size(); ++a) {
        const int n = modes[a].order();
        const double alpha = modes[a].alpha();
        const double beta = bessel::beta_constant(n);
        const double jn1 = bessel::j(n + 1, alpha);
        const double factor = (n == 0 ? 2.0 : 1.0) * kPi * beta * beta;
        rep.diag_measured.push_back(rep.gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)));
        rep.candidate_linear.push_back(factor * jn1);
        rep.candidate_squared.push_back(factor * jn1 * jn1);
    }
    for (Eigen::Index a = 0; a < nm; ++a) {
        for (Eigen::Index b = 0; b < nm; ++b) {
            if (a == b) continue;
            const double norm = std::sqrt(rep.gram(a, a) * rep.gram(b, b));
            rep.max_offdiag_normalized = std::max(rep.max_offdiag_normalized,
                                                  std::abs(rep.gram(a, b)) / norm);
        }
    }
    return rep;
}

}  // namespace rqmf::rqm
