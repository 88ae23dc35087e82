#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "unibern/lemmas.hpp"

using namespace unibern;

TEST_CASE("claimed modulus exponent") {
    // n >= ap branch.
    CHECK(claimed_modulus_exponent(3, 1, 3) == 1);
    // n < ap branch: a - floor(n/p) + ord_p(n!) - floor((a - floor(n/p))/p).
    CHECK(claimed_modulus_exponent(3, 2, 1) == 2);
    CHECK(claimed_modulus_exponent(3, 2, 3) == 2);
    // Both branches agree at n = ap.
    for (long p : {3L, 5L, 7L}) {
        for (long a = 0; a <= 6; ++a) {
            const long n = a * p;
            const long low = a - n / p + ord_p_factorial(static_cast<unsigned long>(n), p) -
                             (a - n / p) / p;
            CHECK(low == ord_p_factorial(static_cast<unsigned long>(n), p));
            CHECK(claimed_modulus_exponent(p, a, n) ==
                  ord_p_factorial(static_cast<unsigned long>(n), p));
        }
    }
    CHECK_THROWS_AS(claimed_modulus_exponent(2, 1, 1), UsageError);
}

TEST_CASE("lemma321 sum") {
    const auto a = lemma321_sum(3, 2, 0, 1);
    CHECK(a.sum == 297);  // terms 1, 16, 280
    CHECK(a.claimed_m == 2);
    CHECK(a.achieved == 3);
    CHECK(a.ok());
    CHECK(a.margin() == 1);

    const auto b = lemma321_sum(3, 1, 0, 3);
    CHECK(b.sum == 246);  // 6 + 240
    CHECK(b.claimed_m == 1);
    CHECK(b.achieved == 1);
    CHECK(b.margin() == 0);

    const auto c = lemma321_sum(3, 0, 0, 0);
    CHECK(c.sum == 1);
    CHECK(c.claimed_m == 0);
    CHECK(c.ok());

    CHECK_THROWS_AS(lemma321_sum(2, 1, 0, 1), UsageError);
    CHECK_THROWS_AS(lemma321_sum(3, -1, 0, 1), UsageError);
}

TEST_CASE("conjectural sum") {
    const auto a = conjecture328_sum(3, 2, 1, 3);
    CHECK(a.sum == 252);  // 12 + 240
    CHECK(a.claimed_m == 2);
    CHECK(a.achieved == 2);
    CHECK(a.ok());
    CHECK(a.verdict() == "consistent");

    const auto b = conjecture328_sum(3, 1, 1, 3);
    CHECK(b.sum == 6);
    CHECK(b.claimed_m == 1);
    CHECK(b.achieved == 1);

    CHECK(conjecture328_sum(5, 3, 2, 10).ok());

    CHECK_THROWS_AS(conjecture328_sum(3, 2, 0, 3), UsageError);   // r0 > 0 required
    CHECK_THROWS_AS(conjecture328_sum(3, 2, 3, 30), UsageError);  // r0 <= a required
    CHECK_THROWS_AS(conjecture328_sum(3, 2, 1, 2), UsageError);   // n >= r0*p required
}

TEST_CASE("conjecture sweep") {
    std::vector<LemmaInstance> seen;
    const auto summary = conjecture_sweep({3}, 2, 9, 1,
                                          [&](const LemmaInstance& i) { seen.push_back(i); });
    CHECK(summary.instances == seen.size());
    CHECK(summary.counterexamples.empty());
    CHECK(summary.min_margin.has_value());
    for (const auto& inst : seen) {
        CHECK(inst.ok());
        CHECK(inst.conjecture);
    }

    const auto empty = conjecture_sweep({}, 4, 30);
    CHECK(empty.instances == 0);
    CHECK_FALSE(empty.min_margin.has_value());
    CHECK(empty.ok());

    // Deterministic order regardless of the parallelism degree.
    std::vector<std::string> serial;
    std::vector<std::string> parallel;
    conjecture_sweep({3, 5}, 3, 25, 1,
                     [&](const LemmaInstance& i) { serial.push_back(i.to_record()); });
    conjecture_sweep({3, 5}, 3, 25, 8,
                     [&](const LemmaInstance& i) { parallel.push_back(i.to_record()); });
    CHECK(serial == parallel);

    CHECK_THROWS_AS(conjecture_sweep({2}, 2, 9), UsageError);
}

TEST_CASE("operator expansion") {
    // a = 0, n = 0: F(v) itself, coefficient of v^{rp} is (rp)!/(r! p^r).
    const auto f = operator_expand(3, 0, 0, 12);
    for (unsigned long r = 0; 3 * r <= 12; ++r) {
        Int p_power;
        mpz_ui_pow_ui(p_power.get_mpz_t(), 3, r);
        CHECK(f.coeff(static_cast<unsigned>(3 * r)) ==
              make_rat(factorial(3 * r), factorial(r) * p_power));
    }
    CHECK(f.coeff(1) == 0);
    CHECK(f.coeff(2) == 0);

    // a = 0, n = 2, p = 3: coefficient of v^5 is 5!/(1!*3) = 40.
    CHECK(operator_expand(3, 0, 2, 11).coeff(5) == 40);

    // a = 1, p = 3, n = 1: coefficient of v^1 is 1 + 4!/3 = 9.
    CHECK(operator_expand(3, 1, 1, 10).coeff(1) == 9);

    CHECK_THROWS_AS(operator_expand(3, 2, 1, 5), UsageError);  // trunc too small
}

TEST_CASE("operator coefficient identity") {
    CHECK(operator_coefficient_identity(3, 2, 0, 1, 40));
    CHECK(operator_coefficient_identity(3, 1, 1, 3, 40));
    CHECK(operator_coefficient_identity(5, 2, 0, 2, 80));
}

TEST_CASE("lowest nonzero operator coefficient") {
    for (long p : {3L, 5L}) {
        for (long a = 0; a <= 2; ++a) {
            for (long n = 0; n <= 10; ++n) {
                const unsigned trunc = static_cast<unsigned>(n + a * p * (p - 1)) + 4;
                const auto series = operator_expand(p, a, n, trunc);
                long lowest = -1;
                for (unsigned m = 0; m <= series.order(); ++m) {
                    if (series.coeff(m) != 0) {
                        lowest = static_cast<long>(m);
                        break;
                    }
                }
                const long expected = n >= a * p ? n - a * p : n % p;
                CHECK(lowest == expected);
            }
        }
    }
}

TEST_CASE("lemma verdicts use conjecture vocabulary only when conjectural") {
    CHECK(lemma321_sum(3, 1, 0, 3).verdict() == "pass");
    CHECK(conjecture328_sum(3, 1, 1, 3).verdict() == "consistent");
}
