#include "unibern/lemmas.hpp"

#include "unibern/parallel.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace unibern {

std::string LemmaInstance::verdict() const {
    if (conjecture) {
        return ok() ? "consistent" : "COUNTEREXAMPLE";
    }
    return ok() ? "pass" : "fail";
}

std::string LemmaInstance::to_text() const {
    std::ostringstream out;
    out << (conjecture ? "conjecture328" : "lemma321") << " p=" << p << " a=" << a;
    if (conjecture) {
        out << " r0=" << -shift;
    } else {
        out << " q=" << shift;
    }
    out << " n=" << n << " M=" << claimed_m;
    if (achieved) {
        out << " ord=" << *achieved << " margin=" << (*achieved - claimed_m);
    } else {
        out << " ord=all-zero";
    }
    out << " verdict=" << verdict();
    return out.str();
}

std::string LemmaInstance::to_record() const {
    nlohmann::ordered_json rec;
    rec["check"] = conjecture ? "conjecture328" : "lemma321";
    rec["params"] = {{"p", std::to_string(p)},
                     {"a", std::to_string(a)},
                     {conjecture ? "r0" : "q", std::to_string(conjecture ? -shift : shift)},
                     {"n", std::to_string(n)}};
    rec["sum"] = int_to_string(sum);
    rec["claimed"] = claimed_m;
    if (achieved) {
        rec["achieved"] = *achieved;
        rec["margin"] = *achieved - claimed_m;
    } else {
        rec["achieved"] = "all-zero";
    }
    rec["conjecture"] = conjecture;
    rec["verdict"] = verdict();
    return rec.dump();
}

long claimed_modulus_exponent(long p, long a, long n) {
    require_odd_prime(p);
    if (a < 0 || n < 0) {
        throw UsageError("claimed_modulus_exponent: a, n must be nonnegative");
    }
    const long ord_n_fact = ord_p_factorial(static_cast<unsigned long>(n), p);
    if (n >= a * p) {
        return ord_n_fact;
    }
    const long floor_np = n / p;
    return a - floor_np + ord_n_fact - (a - floor_np) / p;
}

namespace {

// ((k)p+n)! / (k! p^k); exact integer by the factorial valuation identity.
Int factorial_sum_term(long p, long k, long n) {
    const Int numerator = factorial(static_cast<unsigned long>(k * p + n));
    Int p_power;
    mpz_ui_pow_ui(p_power.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(k));
    const Int denominator = factorial(static_cast<unsigned long>(k)) * p_power;
    Int quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                denominator.get_mpz_t());
    if (remainder != 0) {
        throw std::logic_error("factorial-sum term is not an exact integer");
    }
    return quotient;
}

void finish(LemmaInstance& inst) {
    if (inst.sum != 0) {
        inst.achieved = ord_p_int(inst.sum, inst.p);
    }
}

}  // namespace

LemmaInstance lemma321_sum(long p, long a, long q, long n) {
    require_odd_prime(p);
    if (a < 0 || q < 0 || n < 0) {
        throw UsageError("lemma321_sum: a, q, n must be nonnegative");
    }
    LemmaInstance inst{.p = p, .a = a, .shift = q, .n = n};
    inst.claimed_m = claimed_modulus_exponent(p, a, n);
    for (long r = 0; r <= a; ++r) {
        inst.sum += factorial_sum_term(p, r + q, n) * binomial(a, r);
    }
    finish(inst);
    return inst;
}

LemmaInstance conjecture328_sum(long p, long a, long r0, long n) {
    require_odd_prime(p);
    if (a < 1) {
        throw UsageError("conjecture328_sum: a must be positive");
    }
    if (r0 <= 0 || r0 > a) {
        throw UsageError("conjecture328_sum: requires 0 < r0 <= a");
    }
    if (n < r0 * p) {
        throw UsageError("conjecture328_sum: requires n >= r0*p");
    }
    LemmaInstance inst{.p = p, .a = a, .shift = -r0, .n = n, .conjecture = true};
    inst.claimed_m = claimed_modulus_exponent(p, a, n);
    for (long r = r0; r <= a; ++r) {
        inst.sum += factorial_sum_term(p, r - r0, n) * binomial(a, r);
    }
    finish(inst);
    return inst;
}

SweepSummary conjecture_sweep(const std::vector<long>& primes, long a_max, long n_max,
                              unsigned jobs,
                              const std::function<void(const LemmaInstance&)>& emit) {
    struct Tuple {
        long p, a, r0, n;
    };
    std::vector<Tuple> tuples;
    for (const long p : primes) {
        require_odd_prime(p);
        for (long a = 1; a <= a_max; ++a) {
            for (long r0 = 1; r0 <= a; ++r0) {
                for (long n = r0 * p; n <= n_max; ++n) {
                    tuples.push_back({p, a, r0, n});
                    if (tuples.size() > kSweepInstanceBudget) {
                        throw UsageError("conjecture_sweep: instance budget exceeded");
                    }
                }
            }
        }
    }
    std::vector<LemmaInstance> results(tuples.size());
    parallel_for(tuples.size(), jobs, [&](std::size_t i) {
        const auto& t = tuples[i];
        results[i] = conjecture328_sum(t.p, t.a, t.r0, t.n);
    });

    SweepSummary summary;
    summary.instances = results.size();
    for (const auto& inst : results) {
        if (emit) {
            emit(inst);
        }
        const auto m = inst.margin();
        if (m && (!summary.min_margin || *m < *summary.min_margin)) {
            summary.min_margin = *m;
            summary.min_instance = inst;
        }
        if (!inst.ok() && summary.counterexamples.size() < kCounterexampleBuffer) {
            summary.counterexamples.push_back(inst);
        }
    }
    return summary;
}

HurwitzSeries<Rat> operator_expand(long p, long a, long n, unsigned trunc) {
    require_odd_prime(p);
    if (a < 0 || n < 0) {
        throw UsageError("operator_expand: a, n must be nonnegative");
    }
    if (static_cast<long>(trunc) < n + a * p * (p - 1)) {
        throw UsageError("operator_expand: insufficient truncation order");
    }
    const unsigned long ap = static_cast<unsigned long>(a * p);
    const unsigned long budget = trunc + ap;  // each differentiation costs p coefficients

    // v^n exp(v^p/p) as a Hurwitz series: b_{n+rp} = (n+rp)!/(r! p^r).
    std::vector<Rat> coeffs(budget + 1, Rat(0));
    for (unsigned long r = 0; n + static_cast<long>(r) * p <= static_cast<long>(budget); ++r) {
        const unsigned long m = static_cast<unsigned long>(n) + r * p;
        Int p_power;
        mpz_ui_pow_ui(p_power.get_mpz_t(), static_cast<unsigned long>(p), r);
        coeffs[m] = make_rat(factorial(m), factorial(r) * p_power);
    }

    // ((d/dv)^p + 1) a times: Hurwitz differentiation is a coefficient shift.
    for (long step = 0; step < a; ++step) {
        const unsigned long new_top = coeffs.size() - 1 - static_cast<unsigned long>(p);
        std::vector<Rat> next(new_top + 1, Rat(0));
        for (unsigned long m = 0; m <= new_top; ++m) {
            next[m] = coeffs[m + static_cast<unsigned long>(p)] + coeffs[m];
        }
        coeffs = std::move(next);
    }

    HurwitzSeries<Rat> out(trunc);
    for (unsigned long m = 0; m <= trunc; ++m) {
        if (coeffs[m].get_den() != 1) {
            throw std::logic_error("operator_expand: non-integral Hurwitz coefficient");
        }
        out.set_coeff(static_cast<unsigned>(m), coeffs[m]);
    }
    return out;
}

bool operator_coefficient_identity(long p, long a, long q, long n, unsigned trunc) {
    if (q < 0 || n < 0) {
        throw UsageError("operator_coefficient_identity: q, n must be nonnegative");
    }
    const unsigned long index = static_cast<unsigned long>(q * p + n);
    if (index > trunc) {
        throw UsageError("operator_coefficient_identity: q*p+n beyond truncation order");
    }
    const auto expansion = operator_expand(p, a, n, trunc);
    const Rat& coeff = expansion.coeff(static_cast<unsigned>(index));
    const LemmaInstance direct = lemma321_sum(p, a, q, n);
    return coeff.get_den() == 1 && coeff.get_num() == direct.sum;
}

}  // namespace unibern
