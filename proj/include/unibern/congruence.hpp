#pragma once

#include "unibern/bernoulli.hpp"
#include "unibern/partition.hpp"
#include "unibern/polynomial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unibern {

enum class Verdict { pass, fail, vacuous };

std::string verdict_name(Verdict v);

// One congruence check: the claimed modulus exponent versus the achieved
// minimum p-adic valuation over all coefficients, with the worst monomial.
struct CongruenceReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;  // ordered, as given
    long claimed = 0;
    std::optional<long> achieved;  // nullopt = all coefficients zero
    Verdict verdict = Verdict::pass;
    std::optional<Partition> worst;
    std::string note;

    std::optional<long> margin() const {
        return achieved ? std::optional<long>(*achieved - claimed) : std::nullopt;
    }
    bool ok() const { return verdict != Verdict::fail; }

    std::string to_text() const;
    std::string to_record() const;  // one JSON object per line
};

// Thm-style Kummer congruence: the alternating binomial sum of c_{p-1}-twisted
// B_{n+r(p-1)}/(n+r(p-1)) is 0 mod p^{floor(a/2)}. Out-of-hypothesis
// parameters report "vacuous".
CongruenceReport kummer_check(BernoulliProvider& bern, long p, long a, long n);

// Adelberg congruence: c_{p-1}^{p^{a-1}} B_n/n = B_{n+p^{a-1}(p-1)}/(...) mod p^a.
// p = 3 is vacuous.
CongruenceReport adelberg_check(BernoulliProvider& bern, long p, long a, long n);

// The case-split fractional representative of B_n/n mod Z[c1,c2,...]
// (universal von Staudt-Clausen); n >= 3.
UniPoly clarke_rhs(unsigned n);

// B_n/n agrees with clarke_rhs(n) mod Z[c1,c2,...]; n in {1,2} compared
// exactly to the closed forms.
CongruenceReport clarke_check(BernoulliProvider& bern, unsigned n);

// ord_p(tau_U) >= floor((w(U)+d(U)-2)/(2p)) for U with U_{p-1} = 0, d(U) > 0.
CongruenceReport lemma331_check(long p, const Partition& u);

// Exhaustive version over all w(U) <= max_weight; reports the minimum margin
// and the partition attaining it.
CongruenceReport lemma331_sweep(long p, unsigned long max_weight);

// The partition U_1 = p, U_{2p-1} = (p-5)/2 whose tau-valuation meets the
// lemma331 bound with equality; p >= 7.
struct SharpnessWitness {
    Partition u;
    long ord;
    long bound;
};
SharpnessWitness sharpness_witness(long p);

// ord_p C(p^{a-1}, r) = a-1-ord_p(r) for all 0 < r < p^{a-1}; a >= 2.
CongruenceReport binom_valuation_check(long p, long a);

}  // namespace unibern
