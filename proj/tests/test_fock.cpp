#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fock.hpp"
#include "oracle.hpp"
#include "specfun.hpp"

#include <cmath>
#include <random>

using namespace qnc;

namespace {

double norm_sq(const QuditState& s) {
    double n2 = 0.0;
    for (const auto& a : s.amplitudes()) n2 += std::norm(a);
    return n2;
}

QuditState random_state(std::mt19937& rng, std::size_t dim, unsigned offset) {
    std::normal_distribution<double> g;
    std::vector<cdouble> amps(dim);
    for (auto& a : amps) a = {g(rng), g(rng)};
    return QuditState(std::move(amps), offset);
}

} // namespace

TEST_CASE("constructor normalizes") {
    QuditState s({{1, 0}, {1, 0}}, 0);
    CHECK(s.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(s.amplitudes()[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    QuditState t({{0, 0}, {0, 0}, {5, 0}}, 0);
    CHECK(t.amplitudes()[2].real() == doctest::Approx(1.0));

    QuditState u({{3, 0}, {0, 4}}, 2);
    CHECK(u.amplitudes()[0].real() == doctest::Approx(0.6));
    CHECK(u.amplitudes()[1].imag() == doctest::Approx(0.8));
    CHECK(u.offset() == 2);
}

TEST_CASE("all-zero amplitudes are rejected") {
    CHECK_THROWS_AS(QuditState({{0, 0}, {0, 0}}, 0), zero_state_error);
    CHECK_THROWS_AS(QuditState({}, 0), zero_state_error);
}

TEST_CASE("ngbs at q = 0 is the binomial state") {
    const auto s = ngbs({1, 0.25, 0.0});
    CHECK(s.amplitudes()[0].real() == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
    CHECK(s.amplitudes()[1].real() == doctest::Approx(0.5).epsilon(1e-14));

    for (unsigned M : {2u, 5u, 9u, 12u}) {
        for (double p = 0.1; p < 0.95; p += 0.2) {
            const auto state = ngbs({M, p, 0.0});
            for (unsigned n = 0; n <= M; ++n) {
                const double expected =
                    std::sqrt(binomial_exact(M, n).convert_to<double>() *
                              std::pow(p, n) * std::pow(1.0 - p, M - n));
                CHECK(std::abs(state.amplitudes()[n].real() - expected) < 1e-13);
            }
        }
    }
}

TEST_CASE("ngbs self-normalization across the parameter lattice") {
    // Mq <= p <= 1 + Mq keeps every (p+nq)/(1+Mq) factor inside [0,1] at
    // q = -0.01
    for (unsigned M = 1; M <= 12; ++M) {
        for (double p = 0.15; p < 0.87; p += 0.1) {
            for (double q : {-0.01, 0.0, 0.01}) {
                double dev = 1.0;
                const auto s = ngbs({M, p, q}, &dev);
                CHECK(dev < 1e-9);
                CHECK(norm_sq(s) == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("ngbs amplitudes are real nonnegative for q > 0") {
    const auto s = ngbs({10, 0.8, 0.01});
    for (const auto& a : s.amplitudes()) {
        CHECK(a.imag() == 0.0);
        CHECK(a.real() >= 0.0);
    }
}

TEST_CASE("ngbs parameter validation") {
    CHECK_THROWS_AS(ngbs({10, 0.0, 0.01}), domain_error);   // p = 0
    CHECK_THROWS_AS(ngbs({10, 0.5, -0.2}), domain_error);   // 1 + Mq <= 0
    CHECK_THROWS_AS(ngbs({10, 0.05, -0.01}), domain_error); // p + nq < 0 at large n
    CHECK_THROWS_WITH_AS(ngbs({10, 0.05, -0.01}), doctest::Contains("n = "), domain_error);
}

TEST_CASE("add_photons on simple states") {
    QuditState plus({{1, 0}, {1, 0}}, 0);
    const auto added = add_photons(plus, 1);
    CHECK(added.offset() == 1);
    CHECK(added.amplitudes()[0].real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(added.amplitudes()[1].real() == doctest::Approx(std::sqrt(2.0 / 3.0)));

    const auto same = add_photons(plus, 0);
    CHECK(same.amplitudes() == plus.amplitudes());

    QuditState vacuum({{1, 0}}, 0);
    const auto three = add_photons(vacuum, 3);
    CHECK(three.offset() == 3);
    CHECK(three.dim() == 1);
    CHECK(three.amplitudes()[0].real() == doctest::Approx(1.0));
}

TEST_CASE("subtract_photons on simple states") {
    QuditState plus({{1, 0}, {1, 0}}, 0);
    const auto sub = subtract_photons(plus, 1);
    CHECK(sub.offset() == 0);
    CHECK(sub.dim() == 1);
    CHECK(sub.amplitudes()[0].real() == doctest::Approx(1.0));

    QuditState vacuum({{1, 0}}, 0);
    CHECK_THROWS_AS(subtract_photons(vacuum, 1), zero_state_error);
}

TEST_CASE("subtracted ngbs matches the exact oracle amplitudes") {
    const auto s = subtract_photons(ngbs({10, 0.8, -0.01}), 3);
    CHECK(s.dim() == 8);
    CHECK(s.offset() == 0);
    const auto exact = oracle::exact_subtract_photons(
        oracle::exact_ngbs(10, oracle::Rat(4, 5), oracle::Rat(-1, 100)), 3);
    for (std::size_t j = 0; j < s.dim(); ++j) {
        const double expected = std::sqrt(exact.amps[j].mag.convert_to<double>());
        CHECK(std::abs(s.amplitudes()[j].real() - expected) < 1e-12);
    }
}

TEST_CASE("a a-dagger maps a Fock state to itself") {
    for (unsigned n : {0u, 1u, 4u, 9u}) {
        std::vector<cdouble> amp = {{1, 0}};
        QuditState fock(std::move(amp), n);
        const auto roundtrip = subtract_photons(add_photons(fock, 1), 1);
        CHECK(roundtrip.offset() == n);
        CHECK(roundtrip.dim() == 1);
        CHECK(std::abs(roundtrip.amplitudes()[0].real() - 1.0) < 1e-14);
    }
}

TEST_CASE("photon addition shifts the support up by exactly r") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_state(rng, 1 + rng() % 8, rng() % 4);
        const unsigned r = rng() % 5;
        const auto added = add_photons(s, r);
        CHECK(added.offset() == s.offset() + r);
        CHECK(added.dim() == s.dim());
        CHECK(norm_sq(added) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("state records round trip bit-exactly") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = random_state(rng, 1 + rng() % 10, rng() % 5);
        const auto text = serialize(s);
        const auto back = deserialize(text);
        REQUIRE(back.dim() == s.dim());
        CHECK(back.offset() == s.offset());
        for (std::size_t j = 0; j < s.dim(); ++j) {
            CHECK(back.amplitudes()[j].real() == s.amplitudes()[j].real());
            CHECK(back.amplitudes()[j].imag() == s.amplitudes()[j].imag());
        }
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("malformed state records are rejected") {
    CHECK_THROWS_AS(deserialize("nonsense"), domain_error);
    CHECK_THROWS_AS(deserialize("quditstate v1\noffset 0\ncount 2\n1 0\n"), domain_error);
}
