// C API shim over the C++ core. qnc_state wraps an immutable QuditState.

#include "qudit_nc.h"

#include "fock.hpp"
#include "moments.hpp"
#include "phase_space.hpp"
#include "witnesses.hpp"

#include <cstring>
#include <new>
#include <string>

struct qnc_state {
    qnc::QuditState impl;
};

namespace {

thread_local std::string g_last_error;

qnc_status fail(qnc_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
qnc_status guard(Fn&& fn) {
    try {
        return fn();
    } catch (const qnc::zero_state_error& e) {
        return fail(QNC_ERR_DOMAIN, e.what());
    } catch (const qnc::domain_error& e) {
        return fail(QNC_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QNC_ERR_INVALID, "out of memory");
    } catch (const std::exception& e) {
        return fail(QNC_ERR_INVALID, e.what());
    }
}

qnc_status wrap(qnc::QuditState&& s, qnc_state** out) {
    *out = new qnc_state{std::move(s)};
    return QNC_OK;
}

} // namespace

extern "C" {

const char* qnc_last_error(void) { return g_last_error.c_str(); }

qnc_status qnc_state_make(const double* re, const double* im, size_t len,
                          unsigned offset, qnc_state** out) {
    if (!re || !out || len == 0) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        std::vector<qnc::cdouble> amps(len);
        for (size_t i = 0; i < len; ++i) amps[i] = {re[i], im ? im[i] : 0.0};
        return wrap(qnc::QuditState(std::move(amps), offset), out);
    });
}

qnc_status qnc_state_ngbs(unsigned M, double p, double q,
                          double* pre_norm_deviation, qnc_state** out) {
    if (!out) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        return wrap(qnc::ngbs({M, p, q}, pre_norm_deviation), out);
    });
}

qnc_status qnc_state_add_photons(const qnc_state* s, unsigned r, qnc_state** out) {
    if (!s || !out) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] { return wrap(qnc::add_photons(s->impl, r), out); });
}

qnc_status qnc_state_subtract_photons(const qnc_state* s, unsigned t, qnc_state** out) {
    if (!s || !out) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] { return wrap(qnc::subtract_photons(s->impl, t), out); });
}

void qnc_state_free(qnc_state* s) { delete s; }

size_t qnc_state_dim(const qnc_state* s) { return s ? s->impl.dim() : 0; }

unsigned qnc_state_offset(const qnc_state* s) { return s ? s->impl.offset() : 0; }

qnc_status qnc_state_amplitude(const qnc_state* s, size_t i, double* re, double* im) {
    if (!s || !re || !im) return fail(QNC_ERR_INVALID, "null argument");
    if (i >= s->impl.dim()) return fail(QNC_ERR_INVALID, "amplitude index out of range");
    const auto a = s->impl.amplitudes()[i];
    *re = a.real();
    *im = a.imag();
    return QNC_OK;
}

qnc_status qnc_state_serialize(const qnc_state* s, char* buf, size_t cap,
                               size_t* needed) {
    if (!s || !needed) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        const std::string text = qnc::serialize(s->impl);
        *needed = text.size() + 1;
        if (!buf) return QNC_OK;
        if (cap < *needed) return fail(QNC_ERR_INVALID, "buffer too small");
        std::memcpy(buf, text.c_str(), *needed);
        return QNC_OK;
    });
}

qnc_status qnc_state_deserialize(const char* text, qnc_state** out) {
    if (!text || !out) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] { return wrap(qnc::deserialize(text), out); });
}

qnc_status qnc_moment(const qnc_state* s, unsigned k, unsigned l,
                      double* re, double* im) {
    if (!s || !re || !im) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        const auto v = qnc::moment(s->impl, k, l);
        *re = v.real();
        *im = v.imag();
        return QNC_OK;
    });
}

qnc_status qnc_factorial_moment(const qnc_state* s, unsigned m, double* out) {
    if (!s || !out) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        *out = qnc::factorial_moment(s->impl, m);
        return QNC_OK;
    });
}

qnc_status qnc_number_moment(const qnc_state* s, unsigned m, double* out) {
    if (!s || !out) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        *out = qnc::number_moment(s->impl, m);
        return QNC_OK;
    });
}

qnc_status qnc_witness(const qnc_state* s, qnc_witness_kind kind, int order,
                       qnc_witness_result* out) {
    if (!s || !out) return fail(QNC_ERR_INVALID, "null argument");
    if (order < 1) return fail(QNC_ERR_DOMAIN, "witness order must be >= 1");
    return guard([&] {
        qnc::WitnessResult r{};
        const auto l = static_cast<unsigned>(order);
        switch (kind) {
            case QNC_WITNESS_HOA: r = qnc::hoa(s->impl, l); break;
            case QNC_WITNESS_HOS_HILLERY: r = qnc::hos_hillery(s->impl, l); break;
            case QNC_WITNESS_HOSPS_LITERAL: r = qnc::hosps_literal(s->impl, l); break;
            case QNC_WITNESS_HOSPS_DEFINITION: r = qnc::hosps_definition(s->impl, l); break;
            default: return fail(QNC_ERR_INVALID, "unknown witness kind");
        }
        out->kind = kind;
        out->order = r.order;
        out->value = r.value;
        out->nonclassical = r.nonclassical ? 1 : 0;
        return QNC_OK;
    });
}

qnc_status qnc_wigner(const qnc_state* s, double x, double p, double* w) {
    if (!s || !w) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        *w = qnc::wigner(s->impl, x, p);
        return QNC_OK;
    });
}

qnc_status qnc_wigner_grid(const qnc_state* s, double x_min, double x_max,
                           double p_min, double p_max, int nx, int np,
                           double* out) {
    if (!s || !out) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        const auto field = qnc::wigner_grid(s->impl, {x_min, x_max, p_min, p_max, nx, np});
        std::memcpy(out, field.data(), field.size() * sizeof(double));
        return QNC_OK;
    });
}

qnc_status qnc_tomogram(const qnc_state* s, double X, double theta, double* w) {
    if (!s || !w) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        *w = qnc::tomogram(s->impl, X, theta);
        return QNC_OK;
    });
}

qnc_status qnc_radon_check(const qnc_state* s, double theta, int quad_nodes,
                           double* max_dev) {
    if (!s || !max_dev) return fail(QNC_ERR_INVALID, "null argument");
    if (quad_nodes < 64) return fail(QNC_ERR_INVALID, "quad_nodes must be >= 64");
    return guard([&] {
        *max_dev = qnc::radon_check(s->impl, theta, quad_nodes);
        return QNC_OK;
    });
}

qnc_status qnc_nonclassical_volume(const qnc_state* s, double tolerance,
                                   qnc_quadrature_report* out) {
    if (!s || !out) return fail(QNC_ERR_INVALID, "null argument");
    return guard([&] {
        const auto r = qnc::nonclassical_volume(s->impl, tolerance);
        out->value = r.value;
        out->error_estimate = r.error_estimate;
        out->radius = r.radius;
        out->nodes_per_axis = r.nodes_per_axis;
        out->converged = r.converged ? 1 : 0;
        if (!r.converged)
            return fail(QNC_ERR_NO_CONVERGE, "nonclassical volume quadrature did not converge");
        return QNC_OK;
    });
}

} // extern "C"
