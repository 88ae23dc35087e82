#pragma once

#include "unibern/exact_arith.hpp"
#include "unibern/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace unibern {

// One evaluated instance of the factorial-sum congruences. shift is q >= 0
// for the proved sum and -r0 < 0 for the conjectural variant; verdicts use
// distinct vocabulary for the two ("pass"/"fail" vs
// "consistent"/"COUNTEREXAMPLE").
struct LemmaInstance {
    long p = 0;
    long a = 0;
    long shift = 0;
    long n = 0;
    Int sum;
    long claimed_m = 0;
    std::optional<long> achieved;  // nullopt when sum == 0
    bool conjecture = false;

    std::optional<long> margin() const {
        return achieved ? std::optional<long>(*achieved - claimed_m) : std::nullopt;
    }
    bool ok() const { return !achieved || *achieved >= claimed_m; }
    std::string verdict() const;

    std::string to_text() const;
    std::string to_record() const;
};

// The shared modulus exponent M of both factorial-sum lemmas.
long claimed_modulus_exponent(long p, long a, long n);

// sum_{r=0}^{a} ((r+q)p+n)!/((r+q)! p^{r+q}) C(a,r), checked against p^M.
// Every term is asserted to be an exact integer.
LemmaInstance lemma321_sum(long p, long a, long q, long n);

// sum_{r=r0}^{a} ((r-r0)p+n)!/((r-r0)! p^{r-r0}) C(a,r) with 0 < r0 <= a and
// n >= r0*p; conjectural, so verdicts never claim proof.
LemmaInstance conjecture328_sum(long p, long a, long r0, long n);

struct SweepSummary {
    unsigned long instances = 0;
    std::optional<long> min_margin;
    std::optional<LemmaInstance> min_instance;
    std::vector<LemmaInstance> counterexamples;  // bounded buffer
    bool ok() const { return counterexamples.empty(); }
};

inline constexpr unsigned long kSweepInstanceBudget = 10'000'000;
inline constexpr std::size_t kCounterexampleBuffer = 100;

// Every admissible (p, a, r0, n) with p in primes, 1 <= a <= a_max,
// 1 <= r0 <= a, r0*p <= n <= n_max, in deterministic order; emit (when given)
// sees each instance in that order regardless of the parallelism degree.
SweepSummary conjecture_sweep(const std::vector<long>& primes, long a_max, long n_max,
                              unsigned jobs = 1,
                              const std::function<void(const LemmaInstance&)>& emit = nullptr);

// ((d/dv)^p + 1)^a applied to v^n exp(v^p/p), as a truncated Hurwitz series
// over the rationals; coefficients are asserted integral. Applied by repeated
// exact differentiation (Hurwitz coefficient shift) and addition.
HurwitzSeries<Rat> operator_expand(long p, long a, long n, unsigned trunc);

// The Hurwitz coefficient of v^{qp+n} in operator_expand equals
// lemma321_sum(p, a, q, n).sum.
bool operator_coefficient_identity(long p, long a, long q, long n, unsigned trunc);

}  // namespace unibern
