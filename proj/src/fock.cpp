#include "fock.hpp"
#include "specfun.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>

namespace qnc {

namespace {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t hash_state(const std::vector<cdouble>& amps, unsigned offset) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(&offset, sizeof offset, h);
    h = fnv1a(amps.data(), amps.size() * sizeof(cdouble), h);
    return h;
}

double norm_sq(const std::vector<cdouble>& amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

// sqrt(b! / a!) for b >= a, in log space
double sqrt_factorial_ratio(unsigned b, unsigned a) {
    return std::exp(0.5 * (log_factorial(b) - log_factorial(a)));
}

} // namespace

QuditState::QuditState(std::vector<cdouble> amplitudes, unsigned offset)
    : amps_(std::move(amplitudes)), offset_(offset), fingerprint_(0) {
    if (amps_.empty()) throw zero_state_error();
    const double n2 = norm_sq(amps_);
    if (n2 <= 0.0 || !std::isfinite(n2)) throw zero_state_error();
    // skip the division when already normalized so that deserialization
    // round trips bit-exactly
    if (std::abs(n2 - 1.0) > 1e-12) {
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& a : amps_) a *= inv;
    }
    fingerprint_ = hash_state(amps_, offset_);
}

void NgbsParams::validate() const {
    const double denom = 1.0 + static_cast<double>(M) * q;
    if (denom <= 0.0)
        throw domain_error("ngbs: 1 + M q must be positive");
    if (p <= 0.0)
        throw domain_error("ngbs: p must be positive (p = 0 gives the zero state)");
    for (unsigned n = 0; n <= M; ++n) {
        const double b = (p + static_cast<double>(n) * q) / denom;
        if (b < 0.0 || b > 1.0)
            throw domain_error("ngbs: factor (p+nq)/(1+Mq) outside [0,1] at n = " +
                               std::to_string(n));
    }
}

QuditState ngbs(const NgbsParams& params, double* pre_norm_deviation) {
    params.validate();
    const double denom = 1.0 + static_cast<double>(params.M) * params.q;
    std::vector<cdouble> amps(params.M + 1);
    double sum = 0.0;
    for (unsigned n = 0; n <= params.M; ++n) {
        const double b = (params.p + static_cast<double>(n) * params.q) / denom;
        const double term = params.p / denom *
                            binomial_exact(params.M, n).convert_to<double>() *
                            std::pow(b, static_cast<double>(n) - 1.0) *
                            std::pow(1.0 - b, static_cast<double>(params.M - n));
        if (term < 0.0 || !std::isfinite(term))
            throw domain_error("ngbs: negative amplitude square at n = " + std::to_string(n));
        amps[n] = std::sqrt(term);
        sum += term;
    }
    if (pre_norm_deviation) *pre_norm_deviation = std::abs(sum - 1.0);
    return QuditState(std::move(amps), 0);
}

QuditState add_photons(const QuditState& state, unsigned r) {
    if (r == 0) return state;
    const auto& c = state.amplitudes();
    std::vector<cdouble> out(c.size());
    double closed_sq = 0.0; // sum |C_n|^2 (n+r)!/n!, the closed-form 1/N_r^2
    for (std::size_t j = 0; j < c.size(); ++j) {
        const unsigned n = state.offset() + static_cast<unsigned>(j);
        const double f = sqrt_factorial_ratio(n + r, n);
        out[j] = c[j] * f;
        closed_sq += std::norm(c[j]) * f * f;
    }
    QuditState result(std::move(out), state.offset() + r);
    // closed-form normalization constant must agree with the explicit norm
    double explicit_sq = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const unsigned n = state.offset() + static_cast<unsigned>(j);
        const double f = sqrt_factorial_ratio(n + r, n);
        explicit_sq += std::norm(c[j] * f);
    }
    if (std::abs(closed_sq - explicit_sq) > 1e-12 * closed_sq)
        throw std::runtime_error("add_photons: normalization constant mismatch");
    return result;
}

QuditState subtract_photons(const QuditState& state, unsigned t) {
    if (t == 0) return state;
    const auto& c = state.amplitudes();
    std::vector<cdouble> out;
    unsigned new_offset = 0;
    double closed_sq = 0.0; // sum |C_n|^2 n!/(n-t)!, the closed-form 1/N_t^2
    bool first = true;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const unsigned n = state.offset() + static_cast<unsigned>(j);
        if (n < t) continue;
        if (first) {
            new_offset = n - t;
            first = false;
        }
        const double f = sqrt_factorial_ratio(n, n - t);
        out.push_back(c[j] * f);
        closed_sq += std::norm(c[j]) * f * f;
    }
    if (out.empty() || closed_sq <= 0.0) throw zero_state_error();
    double explicit_sq = 0.0;
    for (const auto& a : out) explicit_sq += std::norm(a);
    if (std::abs(closed_sq - explicit_sq) > 1e-12 * closed_sq)
        throw std::runtime_error("subtract_photons: normalization constant mismatch");
    return QuditState(std::move(out), new_offset);
}

std::string serialize(const QuditState& state) {
    std::string out = "quditstate v1\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "offset %u\ncount %zu\n", state.offset(), state.dim());
    out += buf;
    for (const auto& a : state.amplitudes()) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", a.real(), a.imag());
        out += buf;
    }
    return out;
}

QuditState deserialize(const std::string& text) {
    std::istringstream in(text);
    std::string magic, version, key;
    in >> magic >> version;
    if (magic != "quditstate" || version != "v1")
        throw domain_error("deserialize: bad state record header");
    unsigned offset = 0;
    std::size_t count = 0;
    in >> key >> offset;
    if (key != "offset") throw domain_error("deserialize: expected offset");
    in >> key >> count;
    if (key != "count" || count == 0) throw domain_error("deserialize: expected count");
    std::vector<cdouble> amps(count);
    for (std::size_t j = 0; j < count; ++j) {
        double re = 0.0, im = 0.0;
        if (!(in >> re >> im)) throw domain_error("deserialize: truncated amplitude list");
        amps[j] = {re, im};
    }
    return QuditState(std::move(amps), offset);
}

} // namespace qnc
