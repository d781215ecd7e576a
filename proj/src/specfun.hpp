// specfun.hpp
// Exact combinatorics (factorials, binomials, Stirling numbers) and the
// polynomial evaluations (Hermite, associated Laguerre) used throughout.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>

namespace qnc {

using BigCount = boost::multiprecision::cpp_int;

// n! as an exact integer.
BigCount factorial_exact(unsigned n);

// Binomial coefficient C(n, k), exact; zero when k > n.
BigCount binomial_exact(unsigned n, unsigned k);

// ln(n!). Exact integer factorial for n <= 20, lgamma above.
double log_factorial(unsigned n);

// Stirling number of the second kind S2(r, k) via the triangle recurrence.
// Throws std::domain_error when k > r.
BigCount stirling2(unsigned r, unsigned k);

// Physicists' Hermite polynomial H_n(X).
double hermite(unsigned n, double x);

// Generalized Laguerre polynomial L_n^alpha(z) by the three-term recurrence.
// Throws std::domain_error when n + alpha < 0.
std::complex<double> assoc_laguerre(unsigned n, int alpha, std::complex<double> z);
double assoc_laguerre(unsigned n, int alpha, double z);

} // namespace qnc
