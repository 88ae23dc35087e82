#pragma once

#include "unibern/partition.hpp"
#include "unibern/polynomial.hpp"
#include "unibern/series.hpp"

#include <vector>

namespace unibern {

// u(t) = t + sum_{n>=1} c_n t^{n+1}/(n+1), truncated at the given order.
OrdinarySeries<UniPoly> universal_u_series(unsigned order);

// B_0..B_max_n via reversion of u(t) and the expansion u/t(u) = sum B_n u^n/n!.
std::vector<UniPoly> universal_bernoulli_reversion(unsigned max_n,
                                                   unsigned long weight_cap = kDefaultWeightCap);

// B_n/n as the partition sum over w(U) = n of tau_U c^U.
UniPoly universal_bernoulli_schur(unsigned n, unsigned long weight_cap = kDefaultWeightCap);

// [t^n] h(t)^d for h(t) = u(t)/t - 1: sum over degree-d weight-n partitions of
// binom(d,U) c^U / Lambda^U.
UniPoly h_power_coefficient(unsigned d, unsigned n, unsigned long weight_cap = kDefaultWeightCap);

// B_0..B_max_n specialized at c_n = (-1)^n; equals the classical Bernoulli
// numbers with B_1 = -1/2.
std::vector<Rat> specialize_classical(unsigned max_n,
                                      unsigned long weight_cap = kDefaultWeightCap);

// Memoizing provider for B_n/n polynomials (Schur route by default); shared by
// the congruence checks so sweeps reuse work. Thread-safe for concurrent reads
// after warm-up; warm() is not re-entrant.
class BernoulliProvider {
public:
    explicit BernoulliProvider(unsigned long weight_cap = kDefaultWeightCap)
        : weight_cap_(weight_cap) {}

    const UniPoly& over_n(unsigned n);  // B_n/n, n >= 1
    bool has(unsigned n) const { return n < present_.size() && present_[n]; }
    void warm(unsigned max_n);
    unsigned long weight_cap() const { return weight_cap_; }

    // Preload an externally computed value (e.g. from the on-disk cache).
    void put(unsigned n, UniPoly over_n_value);

private:
    unsigned long weight_cap_;
    std::vector<UniPoly> cache_;       // index n -> B_n/n
    std::vector<bool> present_;
};

}  // namespace unibern
