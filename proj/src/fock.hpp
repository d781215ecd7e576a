// fock.hpp
// Finite Fock-basis qudit states, the generalized binomial family, and
// photon addition / subtraction.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnc {

using cdouble = std::complex<double>;

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct zero_state_error : std::domain_error {
    zero_state_error() : std::domain_error("state has zero norm") {}
};

// Normalized finite Fock superposition. Entry j holds the amplitude of
// |offset + j>; the amplitude list is never zero-padded below the support.
class QuditState {
public:
    // Normalizes the given amplitudes. Throws zero_state_error when all
    // entries vanish.
    QuditState(std::vector<cdouble> amplitudes, unsigned offset);

    const std::vector<cdouble>& amplitudes() const { return amps_; }
    unsigned offset() const { return offset_; }
    std::size_t dim() const { return amps_.size(); }
    // Largest occupied Fock index.
    unsigned max_n() const { return offset_ + static_cast<unsigned>(amps_.size()) - 1; }

    // Amplitude of |n> for an absolute Fock index n (zero outside support).
    cdouble at_fock(unsigned n) const {
        if (n < offset_ || n > max_n()) return {0.0, 0.0};
        return amps_[n - offset_];
    }

    // Hash of (offset, amplitude bytes); memoization key.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    std::vector<cdouble> amps_;
    unsigned offset_;
    std::uint64_t fingerprint_;
};

// Parameters of the generalized binomial amplitude family. Validation
// requires 1 + M q > 0 and every bracketed probability-like factor
// (p + n q)/(1 + M q) to lie in [0, 1].
struct NgbsParams {
    unsigned M = 0;
    double p = 0.0;
    double q = 0.0;

    // Throws domain_error naming the offending n when a factor is invalid.
    void validate() const;
};

// Builds the generalized binomial state. `pre_norm_deviation`, when
// non-null, receives |sum C_n^2 - 1| before the explicit renormalization
// (analytically zero for valid parameters).
QuditState ngbs(const NgbsParams& params, double* pre_norm_deviation = nullptr);

// a^dagger^r with renormalization; r = 0 is the identity.
QuditState add_photons(const QuditState& state, unsigned r);

// a^t with renormalization; throws zero_state_error when the whole
// support lies below t.
QuditState subtract_photons(const QuditState& state, unsigned t);

// Structured text record {offset, [re, im] pairs}; round trips bit-exactly
// at double precision.
std::string serialize(const QuditState& state);
QuditState deserialize(const std::string& text);

} // namespace qnc
