#include "phase_space.hpp"
#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace qnc {

namespace {

constexpr double kPi = std::numbers::pi;

int worker_count() {
    if (const char* env = std::getenv("QNC_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Static row chunking; results land in caller-owned slots, so the output
// is bit-identical regardless of scheduling.
template <typename Fn>
void parallel_rows(int rows, Fn&& fn) {
    const int workers = std::min(worker_count(), rows);
    if (workers <= 1) {
        for (int i = 0; i < rows; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < rows; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Precomputed pair data for the finite-superposition Wigner closed form:
// W(x,p) = e^{-r^2}/pi * sum_{n<=m} g(n,m) Re[conj(C_n) C_m z^{m-n} L_n^{m-n}(2r^2)],
// z = x - i p, g = (-1)^n sqrt(2^{m-n} n!/m!), off-diagonal terms doubled.
class WignerEvaluator {
public:
    explicit WignerEvaluator(const QuditState& state)
        : amps_(state.amplitudes()), offset_(state.offset()) {
        d_ = static_cast<int>(amps_.size());
        pref_.resize(static_cast<std::size_t>(d_) * d_);
        for (int i = 0; i < d_; ++i) {
            const unsigned n = offset_ + static_cast<unsigned>(i);
            for (int j = i; j < d_; ++j) {
                const unsigned m = offset_ + static_cast<unsigned>(j);
                const double g =
                    ((n % 2) ? -1.0 : 1.0) *
                    std::exp(0.5 * ((m - n) * std::numbers::ln2 + log_factorial(n) -
                                    log_factorial(m)));
                pref_[static_cast<std::size_t>(i) * d_ + j] =
                    g * std::conj(amps_[static_cast<std::size_t>(i)]) *
                    amps_[static_cast<std::size_t>(j)];
            }
        }
    }

    double operator()(double x, double p) const {
        const double r2 = x * x + p * p;
        const double u = 2.0 * r2;
        const int dmax = d_ - 1;
        // powers of z = x - i p
        std::vector<cdouble> zp(static_cast<std::size_t>(dmax) + 1);
        zp[0] = 1.0;
        const cdouble z(x, -p);
        for (int k = 1; k <= dmax; ++k) zp[static_cast<std::size_t>(k)] = zp[static_cast<std::size_t>(k - 1)] * z;
        // L_n^{alpha}(u) for all n in the support row, all alpha = m-n
        // via the three-term recurrence, one upward sweep per alpha
        std::vector<double> lag(static_cast<std::size_t>(d_) * d_);
        for (int alpha = 0; alpha <= dmax; ++alpha) {
            const int ntop = static_cast<int>(offset_) + d_ - 1 - alpha;
            double lm = 0.0, l = 1.0;
            for (int n = 0; n <= ntop; ++n) {
                if (n >= static_cast<int>(offset_))
                    lag[static_cast<std::size_t>(alpha) * d_ + (n - static_cast<int>(offset_))] = l;
                const double next = ((2.0 * n + 1.0 + alpha - u) * l - (n + alpha) * lm) / (n + 1.0);
                lm = l;
                l = next;
            }
        }
        double w = 0.0;
        for (int i = 0; i < d_; ++i) {
            for (int j = i; j < d_; ++j) {
                const int alpha = j - i;
                const cdouble term = pref_[static_cast<std::size_t>(i) * d_ + j] *
                                     zp[static_cast<std::size_t>(alpha)] *
                                     lag[static_cast<std::size_t>(alpha) * d_ + i];
                w += (i == j) ? term.real() : 2.0 * term.real();
            }
        }
        return w * std::exp(-r2) / kPi;
    }

    unsigned max_n() const { return offset_ + static_cast<unsigned>(d_) - 1; }

private:
    std::vector<cdouble> amps_;
    unsigned offset_;
    int d_;
    std::vector<cdouble> pref_;
};

// Radius beyond which the pointwise envelope bound
// (d * (2r^2)^{n_max} / n_max! * e^{-r^2} / pi) drops below 1e-12.
double envelope_radius(const QuditState& state) {
    const unsigned nmax = state.max_n();
    const double lognf = log_factorial(nmax);
    double r = 5.0;
    while (r < 24.0) {
        const double logb = std::log(static_cast<double>(state.dim())) +
                            nmax * std::log(2.0 * r * r) - lognf - r * r - std::log(kPi);
        if (logb < std::log(1e-12)) break;
        r += 0.25;
    }
    return std::max(r, 7.0);
}

double abs_wigner_integral(const WignerEvaluator& eval, double radius, int nodes) {
    std::vector<double> t, w;
    gauss_legendre(nodes, t, w);
    std::vector<double> row_sums(static_cast<std::size_t>(nodes));
    parallel_rows(nodes, [&](int i) {
        const double x = radius * t[static_cast<std::size_t>(i)];
        double s = 0.0;
        for (int j = 0; j < nodes; ++j) {
            const double p = radius * t[static_cast<std::size_t>(j)];
            s += w[static_cast<std::size_t>(j)] * std::abs(eval(x, p));
        }
        row_sums[static_cast<std::size_t>(i)] = s;
    });
    double total = 0.0;
    for (int i = 0; i < nodes; ++i) total += w[static_cast<std::size_t>(i)] * row_sums[static_cast<std::size_t>(i)];
    return total * radius * radius;
}

} // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double wgt = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[static_cast<std::size_t>(i)] = wgt;
        weights[static_cast<std::size_t>(n - 1 - i)] = wgt;
    }
}

double wigner(const QuditState& state, double x, double p) {
    return WignerEvaluator(state)(x, p);
}

std::vector<double> wigner_grid(const QuditState& state, const PhaseSpaceGrid& grid) {
    grid.validate();
    const WignerEvaluator eval(state);
    std::vector<double> out(static_cast<std::size_t>(grid.nx) * grid.np);
    const double dx = (grid.x_max - grid.x_min) / (grid.nx - 1);
    const double dp = (grid.p_max - grid.p_min) / (grid.np - 1);
    parallel_rows(grid.nx, [&](int i) {
        const double x = grid.x_min + i * dx;
        for (int j = 0; j < grid.np; ++j)
            out[static_cast<std::size_t>(i) * grid.np + j] = eval(x, grid.p_min + j * dp);
    });
    return out;
}

QuadratureReport nonclassical_volume(const QuditState& state, double tolerance) {
    if (!(tolerance > 0.0)) throw domain_error("nonclassical_volume: tolerance must be positive");
    const WignerEvaluator eval(state);
    const double radius = envelope_radius(state);
    QuadratureReport report{0.0, 0.0, radius, 0, false};
    double prev = abs_wigner_integral(eval, radius, 256) - 1.0;
    for (int nodes = 512; nodes <= 4096; nodes *= 2) {
        const double cur = abs_wigner_integral(eval, radius, nodes) - 1.0;
        report.value = cur;
        report.error_estimate = std::abs(cur - prev);
        report.nodes_per_axis = nodes;
        if (report.error_estimate < tolerance) {
            report.converged = true;
            return report;
        }
        prev = cur;
    }
    return report; // converged == false: never silently wrong
}

double tomogram(const QuditState& state, double X, double theta) {
    const auto& c = state.amplitudes();
    const unsigned nmax = state.max_n();
    // H_n(X) for all n up to the support maximum
    std::vector<double> h(nmax + 1);
    h[0] = 1.0;
    if (nmax >= 1) h[1] = 2.0 * X;
    for (unsigned n = 1; n < nmax; ++n) h[n + 1] = 2.0 * X * h[n] - 2.0 * n * h[n - 1];

    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const unsigned n = state.offset() + static_cast<unsigned>(i);
        sum += std::norm(c[i]) * h[n] * h[n] *
               std::exp(-(n * std::numbers::ln2 + log_factorial(n)));
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        const unsigned n = state.offset() + static_cast<unsigned>(i);
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const unsigned k = state.offset() + static_cast<unsigned>(j);
            const double mag = std::abs(c[i]) * std::abs(c[j]);
            if (mag == 0.0) continue;
            const double phase = std::arg(c[i]) - std::arg(c[j]);
            const double weight =
                std::exp(-0.5 * ((n + k - 2.0) * std::numbers::ln2 + log_factorial(n) +
                                 log_factorial(k)));
            sum += mag * std::cos((static_cast<double>(n) - k) * theta - phase) * h[n] * h[k] *
                   weight;
        }
    }
    return std::exp(-X * X) / std::sqrt(kPi) * sum;
}

double radon_check(const QuditState& state, double theta, int quad_nodes) {
    if (quad_nodes < 64) throw domain_error("radon_check: need at least 64 quadrature nodes");
    const WignerEvaluator eval(state);
    const double radius = envelope_radius(state);
    std::vector<double> t, w;
    gauss_legendre(quad_nodes, t, w);
    const double ct = std::cos(theta), st = std::sin(theta);
    double worst = 0.0;
    for (double X = -4.0; X <= 4.0 + 1e-9; X += 0.5) {
        double line = 0.0;
        for (int j = 0; j < quad_nodes; ++j) {
            const double eta = radius * t[static_cast<std::size_t>(j)];
            line += w[static_cast<std::size_t>(j)] * eval(X * ct - eta * st, X * st + eta * ct);
        }
        line *= radius;
        worst = std::max(worst, std::abs(line - tomogram(state, X, theta)));
    }
    return worst;
}

} // namespace qnc
