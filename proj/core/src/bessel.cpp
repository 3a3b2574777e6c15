#include "rqmf/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

namespace rqmf::bessel {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
// Series/asymptotics switch. The raw Hankel expansion has an accuracy
// floor of roughly e^(-2x); at 12 that floor is ~4e-11, and the long
// double series still behaves there.
constexpr double kSeriesCutoff = 12.0;

void check_order(int n, int max, const char* what) {
    if (n < 0 || n > max) {
        throw std::out_of_range(std::string(what) + ": order " + std::to_string(n) +
                                " outside [0, " + std::to_string(max) + "]");
    }
}

long double factorial_ld(int n) {
    long double f = 1.0L;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Ascending series, long double accumulation. Fine up to |x| ~ 12 where
// the alternating terms cost ~5 digits of cancellation.
double j_series(int n, double x) {
    const long double half = 0.5L * static_cast<long double>(x);
    const long double h2 = half * half;
    long double term = 1.0L;
    for (int k = 1; k <= n; ++k) {
        term *= half / k;
        if (term == 0.0L) return 0.0;
    }
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= -h2 / (static_cast<long double>(k) * (n + k));
        sum += term;
        if (std::abs(term) < 1e-20L * (std::abs(sum) + 1e-30L)) break;
    }
    return static_cast<double>(sum);
}

// Downward Miller recurrence for the run J_0..J_nmax at x > 0,
// normalized with J_0 + 2 J_2 + 2 J_4 + ... = 1.
std::vector<double> j_miller(int nmax, double x) {
    int start = std::max(nmax, static_cast<int>(x)) + 18 +
                static_cast<int>(6.0 * std::cbrt(x + 1.0));
    if (start % 2 != 0) ++start;

    std::vector<long double> v(static_cast<size_t>(start) + 2, 0.0L);
    v[static_cast<size_t>(start)] = 1e-280L;
    for (int k = start; k >= 1; --k) {
        v[static_cast<size_t>(k) - 1] =
            (2.0L * k / x) * v[static_cast<size_t>(k)] - v[static_cast<size_t>(k) + 1];
        if (std::abs(v[static_cast<size_t>(k) - 1]) > 1e280L) {
            for (size_t i = 0; i < v.size(); ++i) v[i] *= 1e-280L;
        }
    }
    long double norm = v[0];
    for (int k = 2; k <= start; k += 2) norm += 2.0L * v[static_cast<size_t>(k)];

    std::vector<double> out(static_cast<size_t>(nmax) + 1);
    for (int k = 0; k <= nmax; ++k) {
        out[static_cast<size_t>(k)] = static_cast<double>(v[static_cast<size_t>(k)] / norm);
    }
    return out;
}

// J_n at any order needed internally (no public order cap).
double j_any(int n, double x) {
    const double ax = std::abs(x);
    double val = (ax <= kSeriesCutoff) ? j_series(n, ax) : j_miller(n, ax)[static_cast<size_t>(n)];
    if (x < 0.0 && (n % 2) != 0) val = -val;
    return val;
}

double j_prime_any(int n, double x) {
    if (n == 0) return -j_any(1, x);
    return 0.5 * (j_any(n - 1, x) - j_any(n + 1, x));
}

struct HankelPQ {
    double p, q;
};

// Asymptotic auxiliary series P, Q:
//   P = 1 - t2 + t4 - ...,  Q = t1 - t3 + t5 - ...
//   t_m = prod_{j<=m} (mu - (2j-1)^2) / (m! (8x)^m),  mu = 4 n^2.
HankelPQ hankel_pq(int n, double x) {
    const double mu = 4.0 * n * n;
    double p = 1.0, q = 0.0;
    double t = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int m = 1; m <= 60; ++m) {
        t *= (mu - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (m * 8.0 * x);
        if (std::abs(t) >= prev) break;  // series has turned; stop at smallest term
        prev = std::abs(t);
        if (m % 2 == 1) {
            q += (((m - 1) / 2) % 2 == 0) ? t : -t;
        } else {
            p += ((m / 2) % 2 == 0) ? t : -t;
        }
        if (std::abs(t) < 1e-18) break;
    }
    return {p, q};
}

double y_asymptotic(int n, double x) {
    const auto [p, q] = hankel_pq(n, x);
    const double chi = x - (2 * n + 1) * kPi / 4.0;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

long double harmonic_ld(int k) {
    long double h = 0.0L;
    for (int jj = 1; jj <= k; ++jj) h += 1.0L / jj;
    return h;
}

double y0_series(double x) {
    const long double lx = static_cast<long double>(x);
    const long double h2 = lx * lx / 4.0L;
    const long double lead =
        (2.0L / kPi) * (std::log(lx / 2.0L) + static_cast<long double>(kEulerGamma)) *
        static_cast<long double>(j_series(0, x));
    long double term = 1.0L;
    long double sum = 0.0L;
    for (int k = 1; k < 400; ++k) {
        term *= h2 / (static_cast<long double>(k) * k);
        const long double add = ((k % 2 == 0) ? -1.0L : 1.0L) * harmonic_ld(k) * term;
        sum += add;
        if (std::abs(add) < 1e-22L * (std::abs(sum) + 1e-30L)) break;
    }
    return static_cast<double>(lead + (2.0L / kPi) * sum);
}

double y1_series(double x) {
    const long double lx = static_cast<long double>(x);
    const long double h2 = lx * lx / 4.0L;
    const long double lead =
        (2.0L / kPi) * (std::log(lx / 2.0L) + static_cast<long double>(kEulerGamma)) *
        static_cast<long double>(j_series(1, x));
    long double term = lx / 2.0L;
    long double sum = term * (harmonic_ld(0) + harmonic_ld(1));
    for (int k = 1; k < 400; ++k) {
        term *= -h2 / (static_cast<long double>(k) * (k + 1));
        const long double add = (harmonic_ld(k) + harmonic_ld(k + 1)) * term;
        sum += add;
        if (std::abs(add) < 1e-22L * (std::abs(sum) + 1e-30L)) break;
    }
    return static_cast<double>(lead - 2.0L / (kPi * lx) - sum / kPi);
}

std::mutex g_zero_mutex;
std::map<std::pair<int, int>, double> g_zero_table;

// Next zero of J_n strictly above `from`: forward scan to a sign
// change, then bisection with Newton acceleration.
double next_zero_above(int n, double from) {
    const double step = 0.25 * kPi;
    double lo = from;
    double flo = j_any(n, lo);
    if (flo == 0.0) {
        lo += 1e-9;
        flo = j_any(n, lo);
    }
    double hi = lo, fhi = flo;
    for (int k = 0; k < 4000; ++k) {
        hi = lo + step;
        fhi = j_any(n, hi);
        if (flo * fhi <= 0.0) break;
        lo = hi;
        flo = fhi;
    }
    if (flo * fhi > 0.0) throw std::runtime_error("bessel::j_zero: scan found no sign change");

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double f = j_any(n, x);
        if (f * flo <= 0.0) {
            hi = x;
            fhi = f;
        } else {
            lo = x;
            flo = f;
        }
        const double fp = j_prime_any(n, x);
        double xn = (fp != 0.0) ? x - f / fp : 0.5 * (lo + hi);
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (std::abs(xn - x) < 1e-15 * xn) {
            x = xn;
            break;
        }
        x = xn;
    }
    return x;
}

}  // namespace

double j(int n, double x) {
    check_order(n, kMaxOrder, "bessel::j");
    if (!std::isfinite(x)) throw std::domain_error("bessel::j: non-finite argument");
    return j_any(n, x);
}

double j_prime(int n, double x) {
    check_order(n, kMaxOrder, "bessel::j_prime");
    if (!std::isfinite(x)) throw std::domain_error("bessel::j_prime: non-finite argument");
    return j_prime_any(n, x);
}

std::vector<double> j_sequence(int nmax, double x) {
    if (nmax < 0 || nmax > 512) throw std::out_of_range("bessel::j_sequence: nmax outside [0, 512]");
    if (!std::isfinite(x)) throw std::domain_error("bessel::j_sequence: non-finite argument");
    const double ax = std::abs(x);
    std::vector<double> out(static_cast<size_t>(nmax) + 1, 0.0);
    if (ax < 2.0) {
        // Per-order series; high orders underflow to an honest zero.
        for (int n = 0; n <= nmax; ++n) {
            const double v = j_series(n, ax);
            out[static_cast<size_t>(n)] = v;
            if (n > 4 && v == 0.0) break;
        }
    } else {
        out = j_miller(nmax, ax);
    }
    if (x < 0.0) {
        for (int n = 1; n <= nmax; n += 2) out[static_cast<size_t>(n)] = -out[static_cast<size_t>(n)];
    }
    return out;
}

double y(SecondKind kind, double x) {
    return kind == SecondKind::Y0 ? y0(x) : y1(x);
}

double y0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel::y0: argument must be positive");
    return x <= kSeriesCutoff ? y0_series(x) : y_asymptotic(0, x);
}

double y1(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel::y1: argument must be positive");
    return x <= kSeriesCutoff ? y1_series(x) : y_asymptotic(1, x);
}

double j_zero(int n, int m) {
    check_order(n, kMaxOrder, "bessel::j_zero");
    if (m < 1 || m > kMaxZeroIndex) throw std::out_of_range("bessel::j_zero: index m outside [1, 64]");

    std::lock_guard<std::mutex> lock(g_zero_mutex);
    auto it = g_zero_table.find({n, m});
    if (it != g_zero_table.end()) return it->second;

    // Fill the ladder for this order sequentially; each zero is the
    // next sign change above the previous one, so indexing stays exact.
    int have = 0;
    double prev = (n == 0) ? 1e-3 : n + std::cbrt(static_cast<double>(n));
    for (int k = 1; k < m; ++k) {
        auto jt = g_zero_table.find({n, k});
        if (jt == g_zero_table.end()) break;
        prev = jt->second + 1e-9;
        have = k;
    }
    for (int k = have + 1; k <= m; ++k) {
        prev = next_zero_above(n, (k == have + 1 && have == 0)
                                      ? ((n == 0) ? 1e-3 : n + std::cbrt(static_cast<double>(n)))
                                      : prev + 1e-9);
        g_zero_table[{n, k}] = prev;
    }
    return g_zero_table[{n, m}];
}

double beta_constant(int n) {
    if (n < 0 || n > kMaxBetaOrder) throw std::out_of_range("bessel::beta_constant: n outside [0, 20]");
    if (n == 0) return 1.0 / std::sqrt(2.0);
    return static_cast<double>(std::pow(2.0L, n - 1) * factorial_ld(n));
}

std::map<std::pair<int, int>, double> zero_table_snapshot() {
    std::lock_guard<std::mutex> lock(g_zero_mutex);
    return g_zero_table;
}

}  // namespace rqmf::bessel
