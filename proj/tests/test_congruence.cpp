#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "unibern/bernoulli.hpp"
#include "unibern/congruence.hpp"

using namespace unibern;

namespace {

UniPoly cmono(const std::string& u, long num, long den = 1) {
    return UniPoly::monomial(Partition::parse(u), make_rat(num, den));
}

}  // namespace

TEST_CASE("kummer check") {
    BernoulliProvider bern;
    const auto trivial = kummer_check(bern, 5, 1, 3);
    CHECK(trivial.claimed == 0);
    CHECK(trivial.verdict == Verdict::pass);

    const auto small = kummer_check(bern, 3, 2, 3);
    CHECK(small.claimed == 1);
    CHECK(small.verdict == Verdict::pass);

    const auto deep = kummer_check(bern, 7, 3, 5);
    CHECK(deep.claimed == 1);
    CHECK(deep.verdict == Verdict::pass);

    CHECK(kummer_check(bern, 5, 2, 4).verdict == Verdict::vacuous);   // n = 0 mod p-1
    CHECK(kummer_check(bern, 5, 3, 2).verdict == Verdict::vacuous);   // n <= a
    CHECK_THROWS_AS(kummer_check(bern, 2, 1, 3), UsageError);
    CHECK_THROWS_AS(kummer_check(bern, 9, 1, 3), UsageError);
}

TEST_CASE("kummer sum agrees across the two Bernoulli pipelines") {
    BernoulliProvider schur_side;
    BernoulliProvider reversion_side;
    const auto by_reversion = universal_bernoulli_reversion(15);
    for (unsigned n = 1; n <= 15; ++n) {
        reversion_side.put(n, by_reversion[n] * make_rat(1, n));
    }
    for (const auto& [p, a, n] : {std::tuple<long, long, long>{3, 2, 3},
                                  {3, 1, 5},
                                  {5, 2, 3},
                                  {7, 1, 4}}) {
        const auto lhs = kummer_check(schur_side, p, a, n);
        const auto rhs = kummer_check(reversion_side, p, a, n);
        CHECK(lhs.to_text() == rhs.to_text());
        CHECK(lhs.to_record() == rhs.to_record());
    }
}

TEST_CASE("adelberg check") {
    BernoulliProvider bern;
    const auto a1 = adelberg_check(bern, 5, 1, 3);
    CHECK(a1.claimed == 1);
    CHECK(a1.verdict == Verdict::pass);

    CHECK(adelberg_check(bern, 3, 1, 5).verdict == Verdict::vacuous);
    CHECK(adelberg_check(bern, 3, 4, 11).verdict == Verdict::vacuous);

    const auto a2 = adelberg_check(bern, 5, 2, 3);  // indices 3 and 23
    CHECK(a2.claimed == 2);
    CHECK(a2.verdict == Verdict::pass);

    CHECK(adelberg_check(bern, 5, 1, 4).verdict == Verdict::vacuous);  // n = 0 mod 4
    CHECK(adelberg_check(bern, 5, 1, 5).verdict == Verdict::vacuous);  // n = 1 mod 4
}

TEST_CASE("clarke right-hand sides") {
    CHECK(clarke_rhs(3) == cmono("1:3", 1, 2) + cmono("3:1", 1, 2));
    CHECK(clarke_rhs(4) == cmono("1:4", 1, 8) + cmono("2:2", 2, 3) + cmono("4:1", 1, 5));
    // n = 6: odd-prime terms 1/9 c2^3 (p=3) and 1/7 c6 (p=7), plus the
    // n = 2 mod 4 extras 1/2 c3^2 and -(6/8) c1^6 (fractional part -3/4).
    const auto rhs6 = clarke_rhs(6);
    CHECK(rhs6.coefficient(Partition::parse("2:3")) == make_rat(1, 9));
    CHECK(rhs6.coefficient(Partition::parse("6:1")) == make_rat(1, 7));
    CHECK(rhs6.coefficient(Partition::parse("1:4,3:1")) == 0);
    CHECK(rhs6.coefficient(Partition::parse("3:2")) == make_rat(1, 2));
    const Rat c16 = rhs6.coefficient(Partition::parse("1:6"));
    CHECK(Rat(c16 + make_rat(3, 4)).get_den() == 1);  // -6/8 up to an integer
    CHECK_THROWS_AS(clarke_rhs(2), UsageError);
}

TEST_CASE("clarke check") {
    BernoulliProvider bern;
    for (unsigned n = 1; n <= 12; ++n) {
        const auto report = clarke_check(bern, n);
        CHECK(report.verdict == Verdict::pass);
    }
    // The n = 3 difference is exactly -c1*c2.
    const UniPoly diff = bern.over_n(3) - clarke_rhs(3);
    CHECK(diff == cmono("1:1,2:1", -1));
}

TEST_CASE("lemma331 check") {
    CHECK(lemma331_check(5, Partition::parse("2:1")).verdict == Verdict::pass);
    const auto witness = lemma331_check(7, Partition::parse("1:7,13:1"));
    CHECK(witness.claimed == 1);
    CHECK(witness.achieved == 1);
    CHECK(witness.margin() == 0);
    const auto fives = lemma331_check(5, Partition::parse("1:5"));
    CHECK(fives.claimed == 0);
    CHECK(fives.achieved == 0);
    CHECK_THROWS_AS(lemma331_check(5, Partition::parse("4:1")), UsageError);
    CHECK_THROWS_AS(lemma331_check(5, Partition()), UsageError);

    // Part 8 at p = 3 (8 + 1 = 3^2 <= 2*(2*3 + 1)) falls outside the bound's
    // scope; the raw valuation genuinely dips below the would-be bound there.
    const auto out_of_scope = lemma331_check(3, Partition::parse("8:1"));
    CHECK(out_of_scope.verdict == Verdict::vacuous);
    CHECK(out_of_scope.claimed == 1);
    CHECK(out_of_scope.achieved == 0);
    CHECK(tau_U(Partition::parse("8:1")) == 560);  // 7!/9, not divisible by 3
    // At p = 5 the analogous part 24 stays in scope (25 > 2*(2*5 + 1)).
    CHECK(lemma331_check(5, Partition::parse("24:1")).verdict == Verdict::pass);
}

TEST_CASE("lemma331 sweep") {
    CHECK(lemma331_sweep(5, 12).verdict == Verdict::pass);
    CHECK(lemma331_sweep(3, 10).verdict == Verdict::pass);
    const auto seven = lemma331_sweep(7, 20);
    CHECK(seven.verdict == Verdict::pass);
    CHECK(seven.achieved == 0);  // minimum margin 0: the bound is sharp
}

TEST_CASE("sharpness witness") {
    const auto w7 = sharpness_witness(7);
    CHECK(w7.u == Partition::parse("1:7,13:1"));
    CHECK(w7.ord == 1);
    CHECK(w7.bound == 1);
    const auto w11 = sharpness_witness(11);
    CHECK(w11.u == Partition::parse("1:11,21:3"));
    CHECK(w11.ord == 3);
    CHECK(w11.bound == 3);
    CHECK_THROWS_AS(sharpness_witness(5), UsageError);
}

TEST_CASE("binomial valuation identity") {
    CHECK(ord_p_int(binomial(3, 1), 3) == 1);
    CHECK(ord_p_int(binomial(9, 3), 3) == 1);  // C(9,3) = 84
    CHECK(binomial(9, 3) == 84);
    for (long p : {3L, 5L}) {
        for (long a = 2; a <= 4; ++a) {
            const auto report = binom_valuation_check(p, a);
            CHECK(report.verdict == Verdict::pass);
            CHECK(report.margin() == 0);  // identity, not just a bound
        }
    }
    CHECK_THROWS_AS(binom_valuation_check(3, 1), UsageError);
}

TEST_CASE("report serialization carries the worst monomial") {
    BernoulliProvider bern;
    const auto report = kummer_check(bern, 3, 2, 3);
    CHECK(report.to_text().find("worst=") != std::string::npos);
    CHECK(report.to_record().find("\"check\":\"kummer\"") != std::string::npos);
}
