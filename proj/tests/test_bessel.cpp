#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "rqmf/bessel.hpp"
#include "support/oracles.hpp"

using namespace rqmf;

TEST_SUITE("bessel") {

TEST_CASE("special values at the origin") {
    CHECK(bessel::j(0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bessel::j(1, 0.0) == 0.0);
    CHECK(bessel::j(7, 0.0) == 0.0);
    CHECK(bessel::j_prime(0, 0.0) == 0.0);
    CHECK(bessel::j_prime(1, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("agreement with the series oracle across its sound range") {
    for (int n : {0, 1, 2, 5, 12, 33, 64}) {
        for (double x : {0.1, 1.0, 4.0, 11.9, 12.1, 16.0, 20.0}) {
            const double ref = oracle::bessel_j_series(n, x);
            CHECK(std::abs(bessel::j(n, x) - ref) < 1e-12);
        }
    }
}

TEST_CASE("agreement with the ODE oracle at large arguments") {
    for (int n : {0, 1, 5, 33, 64}) {
        for (double x : {25.0, 60.0, 100.0}) {
            const double ref = oracle::bessel_j_ode(n, x);
            CHECK(std::abs(bessel::j(n, x) - ref) < 1e-11);
        }
    }
}

TEST_CASE("negative arguments and parity") {
    CHECK(bessel::j(2, -3.7) == doctest::Approx(bessel::j(2, 3.7)).epsilon(1e-15));
    CHECK(bessel::j(3, -3.7) == doctest::Approx(-bessel::j(3, 3.7)).epsilon(1e-15));
}

TEST_CASE("near-zero value at the first J0 zero (series oracle)") {
    CHECK(std::abs(bessel::j(0, 2.404826)) < 1e-5);
}

TEST_CASE("derivative matches a central difference of j") {
    const double h = 1e-5;
    for (int n : {0, 1, 2, 6}) {
        for (double x : {0.4, 1.3, 7.7, 19.0}) {
            const double fd = (bessel::j(n, x + h) - bessel::j(n, x - h)) / (2.0 * h);
            CHECK(bessel::j_prime(n, x) == doctest::Approx(fd).epsilon(1e-8));
        }
    }
}

TEST_CASE("recurrence identities") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ux(0.2, 60.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = ux(rng);
        const int n = 1 + static_cast<int>(rng() % 20);
        const double lhs1 = 2.0 * bessel::j_prime(n, x);
        const double rhs1 = bessel::j(n - 1, x) - bessel::j(n + 1, x);
        CHECK(std::abs(lhs1 - rhs1) < 1e-11);
        const double lhs2 = 2.0 * n / x * bessel::j(n, x);
        const double rhs2 = bessel::j(n - 1, x) + bessel::j(n + 1, x);
        CHECK(std::abs(lhs2 - rhs2) < 1e-11);
    }
}

TEST_CASE("Bessel ODE residual with the recurrence second derivative") {
    // J'' from  J''_n = ((n^2 - x^2) J_n - x J'_n) / x^2 checked directly:
    // x^2 J'' + x J' + (x^2 - n^2) J = 0 with J'' built from recurrences
    for (int n : {0, 1, 3, 8}) {
        for (double x : {0.7, 2.9, 9.5, 21.0}) {
            const double jn = bessel::j(n, x);
            const double jp = bessel::j_prime(n, x);
            // J''_n = (J_{n-2} - 2 J_n + J_{n+2}) / 4 for n >= 2, else via J' chain
            double jpp;
            if (n >= 2) {
                jpp = 0.25 * (bessel::j(n - 2, x) - 2.0 * bessel::j(n, x) + bessel::j(n + 2, x));
            } else if (n == 1) {
                jpp = 0.5 * (bessel::j_prime(0, x) - bessel::j_prime(2, x));
            } else {
                jpp = -bessel::j_prime(1, x);
            }
            const double resid = x * x * jpp + x * jp + (x * x - n * n) * jn;
            CHECK(std::abs(resid) < 1e-9);
        }
    }
}

TEST_CASE("Y0/Y1 small-argument limits") {
    // Y0(x)/ln(x) converges like 1/ln(x): the deviation at x = 1e-6 is
    // still 0.84% (log(x/2) + gamma vs log x), so the 1e-3 band is only
    // reachable much deeper in.
    CHECK(bessel::y0(1e-6) / std::log(1e-6) ==
          doctest::Approx(2.0 / 3.14159265358979324).epsilon(1e-2));
    CHECK(bessel::y0(1e-80) / std::log(1e-80) ==
          doctest::Approx(2.0 / 3.14159265358979324).epsilon(1e-3));
    CHECK(1e-6 * bessel::y1(1e-6) == doctest::Approx(-2.0 / 3.14159265358979324).epsilon(1e-3));
}

TEST_CASE("Y by two independent strategies") {
    // library (ascending series / asymptotics) vs ODE integration seeded
    // at x = 30 by a separately coded asymptotic expansion
    for (double x : {1.0, 2.5, 7.0, 11.0, 14.0, 25.0}) {
        CHECK(bessel::y0(x) == doctest::Approx(oracle::bessel_y_ode(0, x)).epsilon(1e-10));
        CHECK(bessel::y1(x) == doctest::Approx(oracle::bessel_y_ode(1, x)).epsilon(1e-10));
    }
}

TEST_CASE("Y1 = -Y0' by finite difference") {
    const double h = 1e-6;
    for (double x : {0.8, 3.0, 9.0, 16.0}) {
        const double fd = (bessel::y0(x + h) - bessel::y0(x - h)) / (2.0 * h);
        CHECK(-fd == doctest::Approx(bessel::y1(x)).epsilon(1e-8));
    }
}

TEST_CASE("zeros against the bisection oracle") {
    CHECK(bessel::j_zero(0, 1) == doctest::Approx(oracle::bessel_j_zero_bisect(0, 1)).epsilon(1e-12));
    CHECK(bessel::j_zero(1, 1) == doctest::Approx(oracle::bessel_j_zero_bisect(1, 1)).epsilon(1e-12));
    CHECK(bessel::j_zero(0, 3) == doctest::Approx(oracle::bessel_j_zero_bisect(0, 3)).epsilon(1e-12));
    CHECK(bessel::j_zero(4, 2) == doctest::Approx(oracle::bessel_j_zero_bisect(4, 2)).epsilon(1e-12));
    CHECK(bessel::j_zero(0, 1) == doctest::Approx(2.404826).epsilon(1e-6));
    CHECK(bessel::j_zero(1, 1) == doctest::Approx(3.831706).epsilon(1e-6));
}

TEST_CASE("zero table invariants: residual, ordering, interlacing") {
    for (int n : {0, 1, 2, 7, 20, 64}) {
        for (int m : {1, 2, 3, 8}) {
            const double z = bessel::j_zero(n, m);
            CHECK(std::abs(bessel::j(std::min(n, 64), z)) < 1e-12);
        }
    }
    CHECK(bessel::j_zero(0, 2) > bessel::j_zero(0, 1));
    for (int n = 0; n < 10; ++n) {
        for (int m = 1; m < 8; ++m) {
            CHECK(bessel::j_zero(n, m) < bessel::j_zero(n + 1, m));
            CHECK(bessel::j_zero(n + 1, m) < bessel::j_zero(n, m + 1));
        }
    }
    const auto snapshot = bessel::zero_table_snapshot();
    CHECK(snapshot.size() > 40);
}

TEST_CASE("beta constants") {
    CHECK(bessel::beta_constant(0) == doctest::Approx(0.7071068).epsilon(1e-7));
    CHECK(bessel::beta_constant(1) == 1.0);
    CHECK(bessel::beta_constant(3) == 24.0);
    CHECK(bessel::beta_constant(20) > 0.0);
}

TEST_CASE("domain and range errors") {
    CHECK_THROWS_AS(bessel::j(0, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(bessel::j(65, 1.0), std::out_of_range);
    CHECK_THROWS_AS(bessel::j(-1, 1.0), std::out_of_range);
    CHECK_THROWS_AS(bessel::y0(0.0), std::domain_error);
    CHECK_THROWS_AS(bessel::y1(-2.0), std::domain_error);
    CHECK_THROWS_AS(bessel::j_zero(0, 0), std::out_of_range);
    CHECK_THROWS_AS(bessel::j_zero(0, 65), std::out_of_range);
    CHECK_THROWS_AS(bessel::beta_constant(21), std::out_of_range);
}

}  // TEST_SUITE
