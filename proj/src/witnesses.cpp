#include "witnesses.hpp"
#include "moments.hpp"
#include "specfun.hpp"

#include <cmath>
#include <vector>

namespace qnc {

namespace {

// D(k) with the D(-1) = 0 and D(0) = 0 conventions
double antibunch(const MomentTable& table, int k) {
    if (k <= 0) return 0.0;
    const double mean = table.get(1, 1).real();
    return table.get(k + 1, k + 1).real() - std::pow(mean, k + 1);
}

WitnessResult make_result(WitnessKind kind, unsigned l, double value) {
    return {kind, static_cast<int>(l), value, value < 0.0};
}

} // namespace

WitnessResult hoa(const QuditState& state, unsigned l) {
    if (l < 1) throw domain_error("hoa: order must be >= 1");
    MomentTable table(state);
    return make_result(WitnessKind::Hoa, l, antibunch(table, static_cast<int>(l)));
}

WitnessResult hos_hillery(const QuditState& state, unsigned l) {
    if (l < 1) throw domain_error("hos_hillery: order must be >= 1");
    // (dY1)^2 = ( 2 Re<a^{2l}> + <a^l a^dag^l> + <a^dag^l a^l> )/4 - (Re<a^l>)^2
    // |<[Y1,Y2]>|/2 = |<a^l a^dag^l> - <a^dag^l a^l>|/4
    const double a2l = moment(state, 0, 2 * l).real();
    const double normal = moment(state, l, l).real();
    const double anti = moment_antinormal(state, l);
    const double mean_y1 = moment(state, 0, l).real();
    const double variance = 0.25 * (2.0 * a2l + anti + normal) - mean_y1 * mean_y1;
    const double value = variance - 0.25 * std::abs(anti - normal);
    return make_result(WitnessKind::HosHillery, l, value);
}

WitnessResult hosps_literal(const QuditState& state, unsigned l) {
    if (l < 2) throw domain_error("hosps: order must be >= 2");
    MomentTable table(state);
    const double mean = table.get(1, 1).real();
    double sum = 0.0;
    for (unsigned e = 0; e <= l; ++e) {
        const double outer = binomial_exact(l, e).convert_to<double>() *
                             ((e % 2) ? -1.0 : 1.0) * std::pow(mean, l - e);
        for (unsigned k = 0; k <= e; ++k) {
            const double s2 = stirling2(e, k).convert_to<double>();
            if (s2 == 0.0) continue;
            sum += s2 * outer * antibunch(table, static_cast<int>(k) - 1);
        }
    }
    return make_result(WitnessKind::HospsLiteral, l, sum);
}

WitnessResult hosps_definition(const QuditState& state, unsigned l) {
    if (l < 2) throw domain_error("hosps: order must be >= 2");
    MomentTable table(state);
    const double mean = table.get(1, 1).real();
    // raw moments of N for the state, and for a Poisson distribution at the
    // same mean via Touchard's formula <N^j> = sum_k S2(j,k) mean^k
    std::vector<double> raw(l + 1), poisson_raw(l + 1);
    for (unsigned j = 0; j <= l; ++j) {
        double rj = 0.0, pj = 0.0;
        for (unsigned k = 0; k <= j; ++k) {
            const double s2 = stirling2(j, k).convert_to<double>();
            if (s2 == 0.0) continue;
            rj += s2 * table.get(k, k).real();
            pj += s2 * std::pow(mean, k);
        }
        raw[j] = rj;
        poisson_raw[j] = pj;
    }
    double central = 0.0, poisson_central = 0.0;
    for (unsigned j = 0; j <= l; ++j) {
        const double w = binomial_exact(l, j).convert_to<double>() *
                         std::pow(-mean, l - j);
        central += w * raw[j];
        poisson_central += w * poisson_raw[j];
    }
    return make_result(WitnessKind::HospsDefinition, l, central - poisson_central);
}

} // namespace qnc
