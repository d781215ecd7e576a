// moments.hpp
// Field-operator moments <a^dag^k a^l> on finite Fock states, computed as
// the direct amplitude sum over the support.

#pragma once

#include "fock.hpp"

#include <map>
#include <mutex>

namespace qnc {

// <a^dag^k a^l>; out-of-support terms contribute zero. Exactly real
// when k == l.
cdouble moment(const QuditState& state, unsigned k, unsigned l);

// <a^l a^dag^l>, the antinormally ordered counterpart (the squared norm
// growth of a^dag^l |psi>).
double moment_antinormal(const QuditState& state, unsigned l);

// Factorial moment <N^(m)> = <a^dag^m a^m>.
double factorial_moment(const QuditState& state, unsigned m);

// Raw photon-number moment <N^m> = sum_k S2(m,k) <a^dag^k a^k>.
double number_moment(const QuditState& state, unsigned m);

// Append-only memo of moments for one state, keyed by (k, l). Concurrent
// readers are fine; insertion is serialized.
class MomentTable {
public:
    explicit MomentTable(const QuditState& state) : state_(state) {}

    std::uint64_t fingerprint() const { return state_.fingerprint(); }

    cdouble get(unsigned k, unsigned l) const {
        const auto key = std::make_pair(k, l);
        {
            std::lock_guard lock(mu_);
            if (auto it = entries_.find(key); it != entries_.end()) return it->second;
        }
        const cdouble v = moment(state_, k, l);
        std::lock_guard lock(mu_);
        entries_.emplace(key, v);
        return v;
    }

private:
    const QuditState& state_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<unsigned, unsigned>, cdouble> entries_;
};

} // namespace qnc
