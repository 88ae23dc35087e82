#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "unibern/polynomial.hpp"

#include <optional>
#include <random>

using namespace unibern;

namespace {

UniPoly cmono(const std::string& u, long num, long den = 1) {
    return UniPoly::monomial(Partition::parse(u), make_rat(num, den));
}

UniPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 4);
    std::uniform_int_distribution<unsigned long> weight(0, 8);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    UniPoly f;
    const int k = terms(rng);
    for (int i = 0; i < k; ++i) {
        const auto parts = partitions_of_weight(weight(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        f += UniPoly::monomial(parts[pick(rng)], make_rat(num(rng), den(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("add") {
    CHECK((cmono("1:1", 1) + cmono("1:1", -1)).is_zero());
    CHECK(cmono("1:1", 1, 2) + cmono("1:1", 1, 2) == cmono("1:1", 1));
    const UniPoly f = cmono("1:3", 1, 2) + cmono("1:1,2:1", -1);
    const UniPoly g = cmono("1:1,2:1", 1) + cmono("3:1", 1, 2);
    CHECK(f + g == cmono("1:3", 1, 2) + cmono("3:1", 1, 2));
}

TEST_CASE("mul") {
    const UniPoly f = cmono("1:3", 1, 2) + cmono("2:2", -1, 3);
    CHECK(f * UniPoly::constant(1) == f);
    CHECK(cmono("1:1", 1) * cmono("1:1", 1) == cmono("1:2", 1));
    const UniPoly sum = cmono("1:1", 1) + cmono("2:1", 1);
    CHECK(sum * sum == cmono("1:2", 1) + cmono("1:1,2:1", 2) + cmono("2:2", 1));
}

TEST_CASE("monomial") {
    CHECK(UniPoly::monomial(Partition(), Rat(5)) == UniPoly::constant(5));
    CHECK(cmono("2:1", 1, 3).coefficient(Partition::parse("2:1")) == make_rat(1, 3));
    CHECK(UniPoly::monomial(Partition::parse("1:7,13:1"), Rat(0)).is_zero());
}

TEST_CASE("min_valuation_p") {
    CHECK(UniPoly().min_valuation_p(3).all_zero);
    const auto v1 = (cmono("2:1", 1, 3) + cmono("1:2", -1, 4)).min_valuation_p(3);
    CHECK_FALSE(v1.all_zero);
    CHECK(v1.min_ord == -1);
    CHECK(v1.worst == Partition::parse("2:1"));
    const auto v2 = (cmono("1:1", 27) + cmono("2:2", 9)).min_valuation_p(3);
    CHECK(v2.min_ord == 2);
}

TEST_CASE("congruences") {
    const UniPoly f = cmono("1:3", 1, 2) + cmono("1:1,2:1", -1);
    CHECK(f.congruent_mod_p_power(f, 5, 100));
    CHECK(cmono("1:1", 5).congruent_mod_p_power(UniPoly(), 5, 1));
    CHECK_FALSE(cmono("1:1", 5).congruent_mod_p_power(UniPoly(), 5, 2));
    CHECK_FALSE(cmono("1:2", 1, 4).congruent_mod_p_power(cmono("1:2", 1, 4) + cmono("4:1", 1, 5),
                                                         5, 0));

    CHECK(f.congruent_mod_integers(f));
    const UniPoly clarke3 = cmono("1:3", 1, 2) + cmono("1:1,2:1", -1) + cmono("3:1", 1, 2);
    const UniPoly rhs3 = cmono("1:3", 1, 2) + cmono("3:1", 1, 2);
    CHECK(clarke3.congruent_mod_integers(rhs3));
    CHECK_FALSE(cmono("2:1", 1, 3).congruent_mod_integers(UniPoly()));
}

TEST_CASE("specialize") {
    const auto minus_one_pow = [](std::uint32_t j) -> std::optional<Rat> {
        return Rat(j % 2 == 0 ? 1 : -1);
    };
    CHECK(cmono("1:1", 1, 2).specialize(minus_one_pow) == make_rat(-1, 2));
    CHECK(UniPoly::constant(make_rat(7, 3)).specialize(
              [](std::uint32_t) -> std::optional<Rat> { return std::nullopt; }) ==
          make_rat(7, 3));
    CHECK((cmono("1:2", -1, 4) + cmono("2:1", 1, 3)).specialize(minus_one_pow) ==
          make_rat(1, 12));
    CHECK_THROWS_AS(cmono("5:1", 1).specialize(
                        [](std::uint32_t) -> std::optional<Rat> { return std::nullopt; }),
                    UsageError);
}

TEST_CASE("serialization") {
    CHECK(UniPoly().to_string() == "0");
    CHECK(cmono("1:1", 1, 2).to_string() == "1/2*c1");
    const UniPoly b3 = cmono("1:3", 1, 2) + cmono("1:1,2:1", -1) + cmono("3:1", 1, 2);
    CHECK(b3.to_string() == "1/2*c1^3 - 1*c1*c2 + 1/2*c3");
    CHECK(UniPoly::parse(b3.to_string()) == b3);
    CHECK(UniPoly::parse("0").is_zero());

    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const UniPoly f = random_poly(rng);
        CHECK(UniPoly::parse(f.to_string()) == f);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(31337);
    for (int i = 0; i < 200; ++i) {
        const UniPoly f = random_poly(rng);
        const UniPoly g = random_poly(rng);
        const UniPoly h = random_poly(rng);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK(f + g == g + f);
    }
}

TEST_CASE("congruence iff valuation") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 100; ++i) {
        const UniPoly f = random_poly(rng);
        const UniPoly g = random_poly(rng);
        for (long p : {2L, 3L, 5L}) {
            for (long d = -2; d <= 2; ++d) {
                const auto v = (f - g).min_valuation_p(p);
                const bool expected = v.all_zero || v.min_ord >= d;
                CHECK(f.congruent_mod_p_power(g, p, d) == expected);
            }
        }
    }
}

TEST_CASE("specialize is a ring homomorphism") {
    const auto assign = [](std::uint32_t j) -> std::optional<Rat> {
        return make_rat(static_cast<long>(j) - 2, static_cast<long>(j) + 1);
    };
    std::mt19937 rng(555);
    for (int i = 0; i < 50; ++i) {
        const UniPoly f = random_poly(rng);
        const UniPoly g = random_poly(rng);
        CHECK((f * g).specialize(assign) == f.specialize(assign) * g.specialize(assign));
        CHECK((f + g).specialize(assign) == f.specialize(assign) + g.specialize(assign));
    }
}
