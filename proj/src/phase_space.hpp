// phase_space.hpp
// Wigner function, optical tomogram, Radon consistency check, and the
// nonclassical-volume quantifier.
//
// Convention: W(x,p) = (1/pi) Int e^{2ipy} psi*(x+y) psi(x-y) dy with the
// position wavefunction <X|n> = H_n(X) e^{-X^2/2} / sqrt(2^n n! sqrt(pi)).
// Under this convention the tomogram is exactly the Radon transform of W.

#pragma once

#include "fock.hpp"

#include <vector>

namespace qnc {

struct PhaseSpaceGrid {
    double x_min, x_max;
    double p_min, p_max;
    int nx, np;

    void validate() const {
        if (!(x_min < x_max) || !(p_min < p_max) || nx < 2 || np < 2)
            throw domain_error("phase-space grid: need x_min < x_max, p_min < p_max, nx,np >= 2");
    }
};

struct QuadratureReport {
    double value;
    double error_estimate;
    double radius;
    int nodes_per_axis;
    bool converged;
};

// Pointwise Wigner function value; |W| <= 1/pi for any pure state.
double wigner(const QuditState& state, double x, double p);

// Row-major nx-by-np field of pointwise Wigner values.
std::vector<double> wigner_grid(const QuditState& state, const PhaseSpaceGrid& grid);

// delta(psi) = IntInt |W| dx dp - 1 by tensor Gauss-Legendre on [-R,R]^2,
// doubling the node count until successive values agree to `tolerance`.
QuadratureReport nonclassical_volume(const QuditState& state, double tolerance);

// Optical tomogram w(X, theta): the homodyne quadrature distribution.
double tomogram(const QuditState& state, double X, double theta);

// Max over an X-grid of |line integral of W - w(X,theta)|; certifies that
// the Wigner and tomogram conventions agree.
double radon_check(const QuditState& state, double theta, int quad_nodes);

// Gauss-Legendre nodes/weights on [-1, 1] (Newton on the Legendre recurrence).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace qnc
