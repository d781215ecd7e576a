#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phase_space.hpp" // gauss_legendre
#include "specfun.hpp"

#include <cmath>
#include <random>

using namespace qnc;

TEST_CASE("log_factorial small values") {
    CHECK(log_factorial(0) == doctest::Approx(0.0));
    CHECK(log_factorial(1) == doctest::Approx(0.0));
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
}

TEST_CASE("log_factorial matches exact integer factorial up to 20") {
    for (unsigned n = 0; n <= 20; ++n) {
        const double exact = factorial_exact(n).convert_to<double>();
        CHECK(std::exp(log_factorial(n)) == doctest::Approx(exact).epsilon(1e-13));
    }
}

TEST_CASE("log_factorial is monotone") {
    for (unsigned n = 1; n <= 64; ++n)
        CHECK(log_factorial(n) >= log_factorial(n - 1));
}

TEST_CASE("stirling2 table values") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 0) == 0);
    CHECK_THROWS_AS(stirling2(3, 4), std::domain_error);
}

TEST_CASE("stirling2 row sums are Bell numbers") {
    const long bell[11] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (unsigned r = 0; r <= 10; ++r) {
        BigCount sum = 0;
        for (unsigned k = 0; k <= r; ++k) sum += stirling2(r, k);
        CHECK(sum == bell[r]);
    }
}

TEST_CASE("hermite low orders") {
    CHECK(hermite(0, 1.7) == doctest::Approx(1.0));
    CHECK(hermite(1, 0.5) == doctest::Approx(1.0));
    CHECK(hermite(2, 1.0) == doctest::Approx(2.0));
    CHECK(hermite(3, 0.5) == doctest::Approx(-5.0)); // 8x^3 - 12x
}

TEST_CASE("hermite orthogonality under the Gaussian weight") {
    std::vector<double> t, w;
    gauss_legendre(400, t, w);
    const double half_width = 10.0;
    for (unsigned m = 0; m <= 6; ++m) {
        for (unsigned n = 0; n <= 6; ++n) {
            double integral = 0.0;
            for (std::size_t i = 0; i < t.size(); ++i) {
                const double x = half_width * t[i];
                integral += w[i] * hermite(m, x) * hermite(n, x) * std::exp(-x * x);
            }
            integral *= half_width;
            const double expected =
                (m == n) ? std::pow(2.0, n) * factorial_exact(n).convert_to<double>() *
                               std::sqrt(M_PI)
                         : 0.0;
            const double scale = std::pow(2.0, (m + n) / 2.0) *
                                 std::sqrt(factorial_exact(m).convert_to<double>() *
                                           factorial_exact(n).convert_to<double>());
            CHECK(std::abs(integral - expected) / scale < 1e-8);
        }
    }
}

TEST_CASE("assoc_laguerre low orders") {
    CHECK(assoc_laguerre(0, 3, 2.7) == doctest::Approx(1.0));
    CHECK(assoc_laguerre(1, 0, 2.0) == doctest::Approx(-1.0));
    CHECK(assoc_laguerre(2, 1, 0.0) == doctest::Approx(3.0)); // binom(n+alpha, n)
    CHECK_THROWS_AS(assoc_laguerre(1, -5, 1.0), std::domain_error);
}

TEST_CASE("assoc_laguerre satisfies its differential equation") {
    // z y'' + (alpha+1-z) y' + n y = 0 with y' = -L_{n-1}^{alpha+1}
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.1, 6.0);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(rng() % 9);
        const int alpha = static_cast<int>(rng() % 5);
        const double z = dist(rng);
        const double y = assoc_laguerre(n, alpha, z);
        const double yp = -assoc_laguerre(n - 1, alpha + 1, z);
        const double ypp = assoc_laguerre(n - 2, alpha + 2, z);
        const double residual = z * ypp + (alpha + 1.0 - z) * yp + n * y;
        const double scale = std::max({std::abs(y), std::abs(yp), std::abs(ypp), 1.0});
        CHECK(std::abs(residual) / scale < 1e-10);
    }
}
