#include "moments.hpp"
#include "specfun.hpp"

#include <cmath>

namespace qnc {

cdouble moment(const QuditState& state, unsigned k, unsigned l) {
    // <a^dag^k a^l> = sum_n conj(C_{n-l+k}) C_n sqrt(n!/(n-l)!) sqrt((n-l+k)!/(n-l)!)
    const auto& c = state.amplitudes();
    cdouble sum = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const unsigned n = state.offset() + static_cast<unsigned>(j);
        if (n < l) continue;
        const long target = static_cast<long>(n) - static_cast<long>(l) + static_cast<long>(k);
        const long idx = target - static_cast<long>(state.offset());
        if (idx < 0 || idx >= static_cast<long>(c.size())) continue;
        const double lf = std::exp(0.5 * (log_factorial(n) - log_factorial(n - l)) +
                                   0.5 * (log_factorial(static_cast<unsigned>(target)) -
                                          log_factorial(n - l)));
        sum += std::conj(c[static_cast<std::size_t>(idx)]) * c[j] * lf;
    }
    if (k == l) return {sum.real(), 0.0}; // diagonal moments are exactly real
    return sum;
}

double moment_antinormal(const QuditState& state, unsigned l) {
    const auto& c = state.amplitudes();
    double sum = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        const unsigned n = state.offset() + static_cast<unsigned>(j);
        sum += std::norm(c[j]) * std::exp(log_factorial(n + l) - log_factorial(n));
    }
    return sum;
}

double factorial_moment(const QuditState& state, unsigned m) {
    return moment(state, m, m).real();
}

double number_moment(const QuditState& state, unsigned m) {
    double sum = 0.0;
    for (unsigned k = 0; k <= m; ++k) {
        const double s2 = stirling2(m, k).convert_to<double>();
        if (s2 == 0.0) continue;
        sum += s2 * factorial_moment(state, k);
    }
    return sum;
}

} // namespace qnc
