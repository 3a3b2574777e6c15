#include "rqmf/mathieu.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "rqmf/bessel.hpp"

namespace rqmf::mathieu {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Below this q the hyperbolic Fourier sum is primary and the
// Bessel-product series is the cross-check; above, the roles swap.
constexpr double kRadialMethodSwitch = 0.5;

int harmonic_offset(Family family, int n) {
    if (family == Family::Plus) return n % 2;
    return (n % 2 == 1) ? 1 : 2;
}

// Class position of order n inside its parity class; equals the
// eigenvalue index in the tridiagonal spectrum and the index of the
// "top" Fourier coefficient.
int class_position(Family family, int n) {
    if (family == Family::Plus) return (n % 2 == 0) ? n / 2 : (n - 1) / 2;
    return (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
}

void validate_mode_request(Family family, int n, double q, const char* what) {
    if (n < 0 || n > kMaxModeOrder) {
        throw std::out_of_range(std::string(what) + ": order " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxModeOrder) + "]");
    }
    if (family == Family::Minus && n == 0) {
        throw std::invalid_argument(std::string(what) + ": se_0 vanishes identically (odd family needs n >= 1)");
    }
    if (!(q > 0.0)) {
        throw std::domain_error(std::string(what) + ": q must be positive");
    }
}

// The QR eigenvector carries the coefficient ladder with full relative
// accuracy only down to some fraction of its peak. The hyperbolic
// radial sum weights coefficient j by cosh(2 k_j xi), so the deep tail
// needs honest relative accuracy too; recompute it by downward
// recurrence (Miller) anchored where the eigenvector is trustworthy.
void refine_tail(Mode& mode) {
    const int T = static_cast<int>(mode.coeffs_ld.size());
    const int off = harmonic_offset(mode.family, mode.n);
    const long double a = mode.characteristic;
    const long double q = mode.q;

    long double peak = 0.0L;
    for (long double c : mode.coeffs_ld) peak = std::max(peak, std::abs(c));
    int jm = -1;
    for (int j = T - 1; j >= 2; --j) {
        if (std::abs(mode.coeffs_ld[static_cast<size_t>(j)]) >= 1e-6L * peak) {
            jm = j;
            break;
        }
    }
    if (jm < 2 || jm >= T - 2) return;

    const int pad = 8;
    const int top = T - 1 + pad;  // virtual ladder up to c_top
    std::vector<long double> t(static_cast<size_t>(top - jm + 3), 0.0L);
    auto slot = [&](int j) -> long double& { return t[static_cast<size_t>(j - jm)]; };
    slot(top + 1) = 0.0L;
    slot(top) = 1e-4000L;
    for (int j = top; j > jm; --j) {
        const long double k = 2.0L * j + off;
        slot(j - 1) = ((a - k * k) / q) * slot(j) - slot(j + 1);
        if (std::abs(slot(j - 1)) > 1e4000L) {
            for (auto& v : t) v *= 1e-4000L;
        }
    }
    const long double anchor = slot(jm);
    if (anchor == 0.0L) return;
    const long double scale = mode.coeffs_ld[static_cast<size_t>(jm)] / anchor;
    for (int j = jm + 1; j < T; ++j) {
        mode.coeffs_ld[static_cast<size_t>(j)] = scale * slot(j);
    }
}

void normalize_and_fix_sign(Mode& mode) {
    const int off = harmonic_offset(mode.family, mode.n);
    // sum rule equivalent to the L2 normalization over [0, 2*pi]
    long double s = 0.0L;
    for (size_t j = 0; j < mode.coeffs_ld.size(); ++j) {
        const long double c = mode.coeffs_ld[j];
        s += c * c;
        if (mode.family == Family::Plus && off == 0 && j == 0) s += c * c;  // double weight on A_0
    }
    long double target = 1.0L;
    if (mode.family == Family::Plus && mode.n == 0) target = 2.0L;  // norm 2*pi convention for ce_0
    const long double f = std::sqrt(target / s);
    for (auto& c : mode.coeffs_ld) c *= f;

    // sign conventions: ce_n(0,q) > 0, se_n'(0,q) > 0
    long double sig = 0.0L;
    for (size_t j = 0; j < mode.coeffs_ld.size(); ++j) {
        sig += (mode.family == Family::Plus)
                   ? mode.coeffs_ld[j]
                   : mode.coeffs_ld[j] * (2.0L * static_cast<long double>(j) + off);
    }
    if (sig < 0.0L) {
        for (auto& c : mode.coeffs_ld) c = -c;
    }
}

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

Mode solve_mode_at_truncation(Family family, int n, double q, int T) {
    VectorXld diag(T), sub(T - 1);
    const int off = harmonic_offset(family, n);
    for (int j = 0; j < T; ++j) {
        const long double k = 2.0L * j + off;
        diag[j] = k * k;
    }
    for (int j = 0; j + 1 < T; ++j) sub[j] = q;
    if (family == Family::Plus && off == 0) {
        sub[0] = std::sqrt(2.0L) * static_cast<long double>(q);  // symmetrized first row
    } else if (family == Family::Plus && off == 1) {
        diag[0] = 1.0L + static_cast<long double>(q);
    } else if (family == Family::Minus && off == 1) {
        diag[0] = 1.0L - static_cast<long double>(q);
    }

    Eigen::SelfAdjointEigenSolver<MatrixXld> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("solve_mode: tridiagonal eigensolve failed");
    }

    const int p = class_position(family, n);
    Mode mode;
    mode.family = family;
    mode.n = n;
    mode.q = q;
    mode.truncation = T;
    mode.characteristic = static_cast<double>(es.eigenvalues()[p]);
    mode.coeffs_ld.resize(static_cast<size_t>(T));
    for (int j = 0; j < T; ++j) mode.coeffs_ld[static_cast<size_t>(j)] = es.eigenvectors()(j, p);
    if (family == Family::Plus && off == 0) {
        mode.coeffs_ld[0] /= std::sqrt(2.0L);  // undo the symmetrization scaling
    }

    refine_tail(mode);
    normalize_and_fix_sign(mode);
    mode.coeffs.resize(static_cast<size_t>(T));
    for (int j = 0; j < T; ++j) {
        mode.coeffs[static_cast<size_t>(j)] = static_cast<double>(mode.coeffs_ld[static_cast<size_t>(j)]);
    }
    return mode;
}

bool tail_ok(const Mode& m) {
    long double peak = 0.0L;
    for (long double c : m.coeffs_ld) peak = std::max(peak, std::abs(c));
    if (!(std::abs(m.coeffs_ld.back()) < 1e-14L * peak)) return false;
    // The hyperbolic radial sum weights coefficient j by cosh(2 k_j xi),
    // so the tail must also decay against that growth; insist on ~16
    // digits of headroom at xi = 2 (log scale, the cosh ~ e^x regime).
    constexpr long double kXiRef = 2.0L;
    long double best = -1e300L;
    for (size_t k = 0; k < m.coeffs_ld.size(); ++k) {
        const long double lw =
            std::log(std::abs(m.coeffs_ld[k]) + 1e-4000L) + 2.0L * static_cast<long double>(k) * kXiRef;
        best = std::max(best, lw);
    }
    const long double last = std::log(std::abs(m.coeffs_ld.back()) + 1e-4000L) +
                             2.0L * static_cast<long double>(m.coeffs_ld.size() - 1) * kXiRef;
    return last < best - 37.0L;
}

struct ModeKey {
    int family;
    int n;
    double q;
    bool operator<(const ModeKey& o) const {
        return std::tie(family, n, q) < std::tie(o.family, o.n, o.q);
    }
};

std::mutex g_mode_mutex;
std::map<ModeKey, std::shared_ptr<const Mode>> g_mode_cache;

struct ZeroKey {
    int family;
    int n;
    double xi0;
    bool operator<(const ZeroKey& o) const {
        return std::tie(family, n, xi0) < std::tie(o.family, o.n, o.xi0);
    }
};

std::mutex g_zero_mutex;
std::map<ZeroKey, std::vector<double>> g_zero_cache;  // sorted roots, index m-1

double brent_root(const std::function<double(double)>& f, double a, double b, double fa, double fb,
                  double xtol) {
    // standard inverse-quadratic/secant/bisection hybrid
    if (fa * fb > 0.0) throw std::runtime_error("brent_root: root not bracketed");
    double c = a, fc = fa, d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, qq;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                qq = 1.0 - s;
            } else {
                const double r = fb / fc;
                const double t = fa / fc;
                p = s * (2.0 * xm * t * (t - r) - (b - a) * (r - 1.0));
                qq = (t - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) qq = -qq;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * qq - std::abs(tol1 * qq), std::abs(e * qq))) {
                e = d;
                d = p / qq;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        const double fnew = f(b);
        fb = fnew;
        if (fb * fc > 0.0) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    return b;
}

}  // namespace

int Mode::harmonic(int j) const { return 2 * j + harmonic_offset(family, n); }

Mode::Eval Mode::angular(double eta) const {
    long double v = 0.0L, d = 0.0L;
    const int off = harmonic_offset(family, n);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        const double k = 2.0 * static_cast<double>(j) + off;
        const long double c = coeffs[j];
        if (family == Family::Plus) {
            v += c * std::cos(k * eta);
            d -= c * k * std::sin(k * eta);
        } else {
            v += c * std::sin(k * eta);
            d += c * k * std::cos(k * eta);
        }
    }
    return {static_cast<double>(v), static_cast<double>(d)};
}

Mode::Eval Mode::radial_fourier(double xi) const {
    long double v = 0.0L, d = 0.0L;
    const int off = harmonic_offset(family, n);
    const long double x = xi;
    for (size_t j = 0; j < coeffs_ld.size(); ++j) {
        const long double k = 2.0L * static_cast<long double>(j) + off;
        const long double c = coeffs_ld[j];
        if (family == Family::Plus) {
            v += c * std::cosh(k * x);
            d += c * k * std::sinh(k * x);
        } else {
            v += c * std::sinh(k * x);
            d += c * k * std::cosh(k * x);
        }
    }
    return {static_cast<double>(v), static_cast<double>(d)};
}

Mode::Eval Mode::radial_bessel(double xi) const {
    const int p = class_position(family, n);
    const int off = harmonic_offset(family, n);
    // cross-product orders l - s1 and l + s2 with s1 + s2 + (parity) = n:
    // Plus even -> (p, p); Plus/Minus odd -> (p, p+1); Minus even -> (p, p+2)
    const int s1 = p;
    const int s2 = p + off;

    const double sq = std::sqrt(q);
    const double u1 = sq * std::exp(-xi);
    const double u2 = sq * std::exp(xi);
    const int T = static_cast<int>(coeffs.size());
    const int L = T + s2 + 1;

    const std::vector<double> J1 = bessel::j_sequence(L, u1);
    const std::vector<double> J2 = bessel::j_sequence(L, u2);
    auto jj = [](const std::vector<double>& J, int k) {
        if (k >= 0) return J[static_cast<size_t>(k)];
        const double v = J[static_cast<size_t>(-k)];
        return ((-k) % 2 == 0) ? v : -v;
    };
    auto jp = [&jj](const std::vector<double>& J, int k) {
        if (k == 0) return -jj(J, 1);
        return 0.5 * (jj(J, k - 1) - jj(J, k + 1));
    };

    const double swap_sign = (family == Family::Plus) ? 1.0 : -1.0;
    long double S = 0.0L, Sd = 0.0L;
    double sgn = 1.0;
    for (int l = 0; l < T; ++l, sgn = -sgn) {
        const double c = coeffs[static_cast<size_t>(l)];
        if (c == 0.0) continue;
        const int a = l - s1, b = l + s2;
        const double t1 = jj(J1, a) * jj(J2, b);
        const double t2 = jj(J1, b) * jj(J2, a);
        // d/dxi: u1' = -u1, u2' = +u2
        const double d1 = -u1 * jp(J1, a) * jj(J2, b) + u2 * jj(J1, a) * jp(J2, b);
        const double d2 = -u1 * jp(J1, b) * jj(J2, a) + u2 * jj(J1, b) * jp(J2, a);
        S += sgn * c * (t1 + swap_sign * t2);
        Sd += sgn * c * (d1 + swap_sign * d2);
    }

    // Normalization constant from the angular special values; exact for
    // each parity class (verified against the hyperbolic representation).
    const Eval at0 = angular(0.0);
    const Eval atPi2 = angular(kPi / 2.0);
    double C;
    if (family == Family::Plus && off == 0) {
        const double denom = ((p == 0) ? 2.0 : 1.0) * coeffs[0] * coeffs[static_cast<size_t>(p)];
        C = at0.value * atPi2.value / denom;
    } else if (family == Family::Plus) {
        C = -at0.value * atPi2.derivative / (sq * coeffs[0] * coeffs[static_cast<size_t>(p)]);
    } else if (off == 1) {
        C = at0.derivative * atPi2.value / (sq * coeffs[0] * coeffs[static_cast<size_t>(p)]);
    } else {
        C = -at0.derivative * atPi2.derivative / (q * coeffs[0] * coeffs[static_cast<size_t>(p)]);
    }
    return {static_cast<double>(C * S), static_cast<double>(C * Sd)};
}

Mode::Eval Mode::radial(double xi) const {
    if (!(xi >= 0.0) || xi > kMaxRadialXi) {
        throw std::out_of_range("Mode::radial: xi outside [0, " + std::to_string(kMaxRadialXi) + "]");
    }
    return (q >= kRadialMethodSwitch) ? radial_bessel(xi) : radial_fourier(xi);
}

double Mode::angular_at_zero() const { return angular(0.0).value; }

Mode solve_mode(Family family, int n, double q) {
    validate_mode_request(family, n, q, "solve_mode");
    const ModeKey key{static_cast<int>(family), n, q};
    {
        std::lock_guard<std::mutex> lock(g_mode_mutex);
        auto it = g_mode_cache.find(key);
        if (it != g_mode_cache.end()) return *it->second;
    }

    int T = std::max(32, n + static_cast<int>(std::ceil(2.0 * std::sqrt(q))) + 16);
    Mode mode = solve_mode_at_truncation(family, n, q, T);
    while (!tail_ok(mode)) {
        T *= 2;
        if (T > 2048) throw std::runtime_error("solve_mode: coefficient tail does not decay (q too large?)");
        mode = solve_mode_at_truncation(family, n, q, T);
    }

    std::lock_guard<std::mutex> lock(g_mode_mutex);
    if (g_mode_cache.size() > 200000) g_mode_cache.clear();
    auto ptr = std::make_shared<const Mode>(mode);
    g_mode_cache[key] = ptr;
    return *ptr;
}

RadialZero find_q_zero(Family family, int n, int m, double xi0) {
    validate_mode_request(family, n, 1.0, "find_q_zero");  // q validated separately per scan point
    if (m < 1 || m > kMaxZeroIndex) {
        throw std::out_of_range("find_q_zero: index m outside [1, " + std::to_string(kMaxZeroIndex) + "]");
    }
    if (!(xi0 > 0.0) || xi0 > kMaxRadialXi) {
        throw std::domain_error("find_q_zero: xi0 outside (0, 5]");
    }

    const ZeroKey key{static_cast<int>(family), n, xi0};
    {
        std::lock_guard<std::mutex> lock(g_zero_mutex);
        auto it = g_zero_cache.find(key);
        if (it != g_zero_cache.end() && static_cast<int>(it->second.size()) >= m) {
            return {family, n, m, xi0, it->second[static_cast<size_t>(m) - 1]};
        }
    }

    auto g = [&](double s) { return solve_mode(family, n, s * s).radial(xi0).value; };
    auto gq = [&](double q) { return solve_mode(family, n, q).radial(xi0).value; };

    std::vector<double> roots;
    {
        std::lock_guard<std::mutex> lock(g_zero_mutex);
        auto it = g_zero_cache.find(key);
        if (it != g_zero_cache.end()) roots = it->second;
    }

    // Zeros are asymptotically equispaced in s = sqrt(q) with gap
    // pi/(2 sinh xi0); scanning at a fraction of that gap cannot hop
    // over a pair of roots at desk scale.
    const double gap = kPi / (2.0 * std::sinh(xi0));
    const double ds = gap / 12.0;
    double s = roots.empty() ? 1e-4 : std::sqrt(roots.back()) + 1e-7;
    double gs = g(s);
    // bound: barrier delay for high orders plus the missing-gap budget
    const double barrier = 1.5 * n / std::sqrt(2.0 * std::cosh(2.0 * xi0));
    double s_max = barrier + gap * (m - static_cast<int>(roots.size()) + 4) + std::sqrt(std::max(roots.empty() ? 0.0 : roots.back(), 0.0)) + 1.0;

    int extensions = 0;
    while (static_cast<int>(roots.size()) < m) {
        if (s > s_max) {
            if (extensions++ < 2) {
                s_max *= 1.5;
                continue;
            }
            throw std::runtime_error(
                "find_q_zero: scan exhausted after s = " + std::to_string(s) + " (found " +
                std::to_string(roots.size()) + " of " + std::to_string(m) + " roots, step " +
                std::to_string(ds) + ")");
        }
        const double s2 = s + ds;
        const double gs2 = g(s2);
        if (gs == 0.0) {
            roots.push_back(s * s);
        } else if (gs * gs2 < 0.0) {
            const double q_root = brent_root(gq, s * s, s2 * s2, gs, gs2, 1e-12);
            roots.push_back(q_root);
        }
        s = s2;
        gs = gs2;
    }

    {
        std::lock_guard<std::mutex> lock(g_zero_mutex);
        auto& slot = g_zero_cache[key];
        if (slot.size() < roots.size()) slot = roots;
    }
    return {family, n, m, xi0, roots[static_cast<size_t>(m) - 1]};
}

JoiningFactors joining_factors(int n, double q) {
    if (!(q > 0.0)) throw std::domain_error("joining_factors: q must be positive");
    if (n < 0 || n > kMaxModeOrder) throw std::out_of_range("joining_factors: order outside [0, 32]");

    JoiningFactors out;
    const double sq = std::sqrt(q);

    const Mode ce = solve_mode(Family::Plus, n, q);
    const Mode::Eval ce0 = ce.angular(0.0);
    const Mode::Eval cepi2 = ce.angular(kPi / 2.0);
    if (n % 2 == 0) {
        const int l = n / 2;
        const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
        out.p_prime = sgn * ce0.value * cepi2.value / ce.coeffs[0];
        if (n == 0) out.p_prime /= std::sqrt(2.0);  // bridge to the sqrt(pi) normalization
    } else {
        const int l = (n - 1) / 2;
        const double sgn = (l % 2 == 0) ? -1.0 : 1.0;
        out.p_prime = sgn * ce0.value * cepi2.derivative / (sq * ce.coeffs[0]);
    }

    if (n >= 1) {
        const Mode se = solve_mode(Family::Minus, n, q);
        const Mode::Eval se0 = se.angular(0.0);
        const Mode::Eval sepi2 = se.angular(kPi / 2.0);
        if (n % 2 == 1) {
            const int l = (n - 1) / 2;
            const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
            out.s_prime = sgn * se0.derivative * sepi2.value / (sq * se.coeffs[0]);
        } else {
            // Sign chosen so q^(n/2) s'_n -> +beta_n, consistent with the
            // odd-order case and the product-series constants.
            const int l = n / 2 - 1;
            const double sgn = (l % 2 == 0) ? -1.0 : 1.0;
            out.s_prime = sgn * se0.derivative * sepi2.derivative / (q * se.coeffs[0]);
        }
    }
    return out;
}

Mode detail::solve_mode_fixed_truncation(Family family, int n, double q, int truncation) {
    validate_mode_request(family, n, q, "solve_mode_fixed_truncation");
    if (truncation < n / 2 + 4) throw std::domain_error("solve_mode_fixed_truncation: truncation too small");
    return solve_mode_at_truncation(family, n, q, truncation);
}

std::vector<ZeroCacheEntry> export_zero_cache() {
    std::lock_guard<std::mutex> lock(g_zero_mutex);
    std::vector<ZeroCacheEntry> out;
    for (const auto& [key, roots] : g_zero_cache) {
        for (size_t i = 0; i < roots.size(); ++i) {
            out.push_back({key.family, key.n, static_cast<int>(i) + 1, key.xi0, roots[i]});
        }
    }
    return out;
}

void import_zero_cache(const std::vector<ZeroCacheEntry>& entries) {
    std::map<ZeroKey, std::map<int, double>> staged;
    for (const auto& e : entries) {
        if (e.m >= 1 && e.q_root > 0.0) staged[ZeroKey{e.family, e.n, e.xi0}][e.m] = e.q_root;
    }
    std::lock_guard<std::mutex> lock(g_zero_mutex);
    for (const auto& [key, by_m] : staged) {
        // only a contiguous, increasing ladder starting at m = 1 is usable
        std::vector<double> ladder;
        for (int m = 1;; ++m) {
            auto it = by_m.find(m);
            if (it == by_m.end()) break;
            if (!ladder.empty() && it->second <= ladder.back()) break;
            ladder.push_back(it->second);
        }
        auto& slot = g_zero_cache[key];
        if (ladder.size() > slot.size()) slot = ladder;
    }
}

}  // namespace rqmf::mathieu
