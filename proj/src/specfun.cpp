#include "specfun.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace qnc {

BigCount factorial_exact(unsigned n) {
    BigCount f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigCount binomial_exact(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

double log_factorial(unsigned n) {
    static const std::array<double, 21> small = [] {
        std::array<double, 21> t{};
        BigCount f = 1;
        for (unsigned i = 0; i <= 20; ++i) {
            if (i > 0) f *= i;
            t[i] = std::log(f.convert_to<double>());
        }
        return t;
    }();
    if (n <= 20) return small[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

BigCount stirling2(unsigned r, unsigned k) {
    if (k > r) throw std::domain_error("stirling2: k > r");
    if (r == 0) return 1;
    if (k == 0) return 0;
    // row-by-row triangle, keeping only the previous row
    std::vector<BigCount> prev(r + 1), cur(r + 1);
    prev[0] = 1;
    for (unsigned i = 1; i <= r; ++i) {
        cur[0] = 0;
        for (unsigned j = 1; j <= i; ++j)
            cur[j] = BigCount(j) * prev[j] + prev[j - 1];
        std::swap(prev, cur);
    }
    return prev[k];
}

double hermite(unsigned n, double x) {
    if (n == 0) return 1.0;
    double hm = 1.0, h = 2.0 * x;
    for (unsigned k = 1; k < n; ++k) {
        double hn = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = hn;
    }
    return h;
}

template <typename T>
static T laguerre_impl(unsigned n, int alpha, T z) {
    if (static_cast<int>(n) + alpha < 0)
        throw std::domain_error("assoc_laguerre: n + alpha < 0");
    if (n == 0) return T(1);
    T lm = T(1);
    T l = T(1.0 + alpha) - z;
    for (unsigned k = 1; k < n; ++k) {
        T ln = ((T(2.0 * k + 1.0 + alpha) - z) * l - T(static_cast<double>(k) + alpha) * lm) / T(k + 1.0);
        lm = l;
        l = ln;
    }
    return l;
}

std::complex<double> assoc_laguerre(unsigned n, int alpha, std::complex<double> z) {
    return laguerre_impl(n, alpha, z);
}

double assoc_laguerre(unsigned n, int alpha, double z) {
    return laguerre_impl(n, alpha, z);
}

} // namespace qnc
