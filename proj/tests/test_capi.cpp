#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qudit_nc.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct StateHandle {
    qnc_state* s = nullptr;
    ~StateHandle() { qnc_state_free(s); }
};

} // namespace

TEST_CASE("build, inspect, and free a state") {
    const double re[2] = {1.0, 1.0};
    StateHandle h;
    REQUIRE(qnc_state_make(re, nullptr, 2, 0, &h.s) == QNC_OK);
    CHECK(qnc_state_dim(h.s) == 2);
    CHECK(qnc_state_offset(h.s) == 0);
    double ar = 0, ai = 1;
    REQUIRE(qnc_state_amplitude(h.s, 0, &ar, &ai) == QNC_OK);
    CHECK(ar == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(ai == doctest::Approx(0.0));
    CHECK(qnc_state_amplitude(h.s, 2, &ar, &ai) == QNC_ERR_INVALID);
}

TEST_CASE("error codes and messages") {
    qnc_state* out = nullptr;
    const double zeros[2] = {0.0, 0.0};
    CHECK(qnc_state_make(zeros, nullptr, 2, 0, &out) == QNC_ERR_DOMAIN);
    CHECK(out == nullptr);
    CHECK(std::strlen(qnc_last_error()) > 0);

    CHECK(qnc_state_make(nullptr, nullptr, 2, 0, &out) == QNC_ERR_INVALID);
    CHECK(qnc_state_ngbs(10, 0.0, 0.01, nullptr, &out) == QNC_ERR_DOMAIN);
    CHECK(qnc_state_ngbs(10, 0.5, -0.2, nullptr, &out) == QNC_ERR_DOMAIN);
    CHECK(qnc_state_deserialize("garbage", &out) == QNC_ERR_DOMAIN);
}

TEST_CASE("ngbs, ladder operations, moments, witnesses through the C surface") {
    StateHandle base, added;
    double dev = 1.0;
    REQUIRE(qnc_state_ngbs(10, 0.8, -0.01, &dev, &base.s) == QNC_OK);
    CHECK(dev < 1e-12);
    CHECK(qnc_state_dim(base.s) == 11);

    REQUIRE(qnc_state_add_photons(base.s, 1, &added.s) == QNC_OK);
    CHECK(qnc_state_offset(added.s) == 1);

    double re = 0, im = 1;
    REQUIRE(qnc_moment(added.s, 1, 1, &re, &im) == QNC_OK);
    CHECK(im == 0.0);
    CHECK(re > 0.0);

    double fm = 0, nm = 0;
    REQUIRE(qnc_factorial_moment(added.s, 2, &fm) == QNC_OK);
    REQUIRE(qnc_number_moment(added.s, 2, &nm) == QNC_OK);
    CHECK(fm > 0.0);
    CHECK(nm == doctest::Approx(fm + re)); // <N^2> = <N(N-1)> + <N>

    qnc_witness_result w{};
    REQUIRE(qnc_witness(added.s, QNC_WITNESS_HOA, 3, &w) == QNC_OK);
    CHECK(w.kind == QNC_WITNESS_HOA);
    CHECK(w.order == 3);
    CHECK(w.nonclassical == (w.value < 0.0));
    CHECK(qnc_witness(added.s, QNC_WITNESS_HOA, 0, &w) == QNC_ERR_DOMAIN);
    CHECK(qnc_witness(added.s, QNC_WITNESS_HOSPS_LITERAL, 1, &w) == QNC_ERR_DOMAIN);

    // subtraction below the support floor
    StateHandle vacuum;
    const double one = 1.0;
    REQUIRE(qnc_state_make(&one, nullptr, 1, 0, &vacuum.s) == QNC_OK);
    qnc_state* bad = nullptr;
    CHECK(qnc_state_subtract_photons(vacuum.s, 1, &bad) == QNC_ERR_DOMAIN);
}

TEST_CASE("serialize round trip through the C surface") {
    const double re[3] = {0.25, -0.5, 1.0};
    const double im[3] = {0.125, 0.0, -0.75};
    StateHandle s;
    REQUIRE(qnc_state_make(re, im, 3, 2, &s.s) == QNC_OK);

    size_t needed = 0;
    REQUIRE(qnc_state_serialize(s.s, nullptr, 0, &needed) == QNC_OK);
    REQUIRE(needed > 0);
    std::vector<char> buf(needed);
    REQUIRE(qnc_state_serialize(s.s, buf.data(), buf.size(), &needed) == QNC_OK);
    CHECK(qnc_state_serialize(s.s, buf.data(), 3, &needed) == QNC_ERR_INVALID);

    StateHandle back;
    REQUIRE(qnc_state_deserialize(buf.data(), &back.s) == QNC_OK);
    REQUIRE(qnc_state_dim(back.s) == 3);
    CHECK(qnc_state_offset(back.s) == 2);
    for (size_t i = 0; i < 3; ++i) {
        double ar, ai, br, bi;
        REQUIRE(qnc_state_amplitude(s.s, i, &ar, &ai) == QNC_OK);
        REQUIRE(qnc_state_amplitude(back.s, i, &br, &bi) == QNC_OK);
        CHECK(ar == br);
        CHECK(ai == bi);
    }
}

TEST_CASE("phase-space entry points") {
    StateHandle s;
    REQUIRE(qnc_state_ngbs(10, 0.8, -0.01, nullptr, &s.s) == QNC_OK);

    double w = 0;
    REQUIRE(qnc_wigner(s.s, 0.3, -0.2, &w) == QNC_OK);
    CHECK(std::abs(w) <= 1.0 / 3.14159265358979323846 + 1e-9);

    std::vector<double> field(16 * 16);
    REQUIRE(qnc_wigner_grid(s.s, -3, 3, -3, 3, 16, 16, field.data()) == QNC_OK);
    CHECK(qnc_wigner_grid(s.s, 3, -3, -3, 3, 16, 16, field.data()) == QNC_ERR_DOMAIN);

    double tg = -1;
    REQUIRE(qnc_tomogram(s.s, 0.5, 0.7, &tg) == QNC_OK);
    CHECK(tg >= 0.0);

    double dev = 1;
    REQUIRE(qnc_radon_check(s.s, 0.9, 200, &dev) == QNC_OK);
    CHECK(dev < 1e-6);
    CHECK(qnc_radon_check(s.s, 0.9, 8, &dev) == QNC_ERR_INVALID);

    qnc_quadrature_report report{};
    REQUIRE(qnc_nonclassical_volume(s.s, 1e-5, &report) == QNC_OK);
    CHECK(report.converged == 1);
    CHECK(report.value >= 0.0);
    CHECK(report.nodes_per_axis >= 256);
}
