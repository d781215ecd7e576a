// witnesses.hpp
// Higher-order nonclassicality witnesses: antibunching, Hillery-type
// amplitude-powered squeezing, and sub-Poissonian photon statistics.
// Negativity of the witness value signals nonclassicality.

#pragma once

#include "fock.hpp"

namespace qnc {

enum class WitnessKind {
    Hoa,
    HosHillery,
    HospsLiteral,
    HospsDefinition,
};

struct WitnessResult {
    WitnessKind kind;
    int order;
    double value;
    bool nonclassical; // value < 0
};

// Antibunching: D(l) = <a^dag^{l+1} a^{l+1}> - <a^dag a>^{l+1}, l >= 1.
WitnessResult hoa(const QuditState& state, unsigned l);

// Hillery squeezing of the amplitude-powered quadrature Y1 = (a^l + a^dag^l)/2:
// A = (dY1)^2 - |<[Y1, Y2]>|/2, with the commutator taken as
// <a^l a^dag^l> - <a^dag^l a^l>.
WitnessResult hos_hillery(const QuditState& state, unsigned l);

// Sub-Poissonian statistics, literal double-sum form with the Stirling
// numbers; collapses to D(1) at l = 2. Requires l >= 2.
WitnessResult hosps_literal(const QuditState& state, unsigned l);

// Sub-Poissonian statistics from the definition: l-th central moment of N
// minus the same central moment of a Poisson distribution at equal mean.
// Requires l >= 2.
WitnessResult hosps_definition(const QuditState& state, unsigned l);

} // namespace qnc
