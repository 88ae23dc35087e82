#include "unibern/congruence.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace unibern {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass:
            return "pass";
        case Verdict::fail:
            return "fail";
        case Verdict::vacuous:
            return "vacuous";
    }
    return "?";
}

std::string CongruenceReport::to_text() const {
    std::ostringstream out;
    out << check;
    for (const auto& [key, value] : params) {
        out << " " << key << "=" << value;
    }
    out << " claimed=" << claimed;
    if (achieved) {
        out << " achieved=" << *achieved << " margin=" << (*achieved - claimed);
    } else {
        out << " achieved=all-zero";
    }
    out << " verdict=" << verdict_name(verdict);
    if (worst) {
        out << " worst=" << (worst->empty() ? "1" : worst->to_string());
    }
    if (!note.empty()) {
        out << " note=\"" << note << "\"";
    }
    return out.str();
}

std::string CongruenceReport::to_record() const {
    nlohmann::ordered_json rec;
    rec["check"] = check;
    nlohmann::ordered_json par = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) {
        par[key] = value;
    }
    rec["params"] = par;
    rec["claimed"] = claimed;
    if (achieved) {
        rec["achieved"] = *achieved;
        rec["margin"] = *achieved - claimed;
    } else {
        rec["achieved"] = "all-zero";
    }
    rec["verdict"] = verdict_name(verdict);
    if (worst) {
        rec["worst"] = worst->to_string();
    }
    if (!note.empty()) {
        rec["note"] = note;
    }
    return rec.dump();
}

namespace {

void fill_valuation(CongruenceReport& report, const UniPoly& f, long p) {
    const auto v = f.min_valuation_p(p);
    if (v.all_zero) {
        report.achieved.reset();
        report.verdict = Verdict::pass;
    } else {
        report.achieved = v.min_ord;
        report.worst = v.worst;
        report.verdict = v.min_ord >= report.claimed ? Verdict::pass : Verdict::fail;
    }
}

std::vector<std::pair<std::string, std::string>> pan(long p, long a, long n) {
    return {{"p", std::to_string(p)}, {"a", std::to_string(a)}, {"n", std::to_string(n)}};
}

// The valuation bound on tau_U counts carries of p through (w+d-2)!/gamma_U.
// A part j with p^k | j+1 (k >= 2) only contributes enough carries when
// j+1 > 2(kp+1); among odd primes the single exception is p = 3, j = 8,
// where the bound genuinely fails (tau_{8:1} = 7!/9 = 560 has ord_3 = 0
// against a claimed bound of 1, and {8:m} drifts further below as m grows).
// Partitions using such a part are outside the bound's scope.
bool part_outside_bound_scope(long p, std::uint32_t j) {
    unsigned long m = j + 1ul;
    long k = 0;
    while (m % static_cast<unsigned long>(p) == 0) {
        m /= static_cast<unsigned long>(p);
        ++k;
    }
    return k >= 2 && j + 1ul <= 2ul * static_cast<unsigned long>(k * p + 1);
}

std::optional<std::uint32_t> first_out_of_scope_part(long p, const Partition& u) {
    for (const auto& [part, mult] : u.entries()) {
        if (part_outside_bound_scope(p, part)) {
            return part;
        }
    }
    return std::nullopt;
}

}  // namespace

CongruenceReport kummer_check(BernoulliProvider& bern, long p, long a, long n) {
    require_odd_prime(p);
    if (a < 1 || n < 1) {
        throw UsageError("kummer_check: a and n must be positive");
    }
    CongruenceReport report{.check = "kummer", .params = pan(p, a, n), .claimed = a / 2};
    if (n <= a) {
        report.verdict = Verdict::vacuous;
        report.note = "requires n > a";
        return report;
    }
    if (n % (p - 1) == 0) {
        report.verdict = Verdict::vacuous;
        report.note = "requires n != 0 mod p-1";
        return report;
    }
    const unsigned long top = static_cast<unsigned long>(n + a * (p - 1));
    if (top > bern.weight_cap()) {
        throw UsageError("kummer_check: index " + std::to_string(top) + " exceeds weight cap");
    }
    UniPoly sum;
    for (long r = 0; r <= a; ++r) {
        const Partition twist({{static_cast<std::uint32_t>(p - 1),
                                static_cast<std::uint32_t>(a - r)}});
        Rat coeff(binomial(a, r));
        if (r % 2 != 0) {
            coeff = -coeff;
        }
        sum += UniPoly::monomial(twist, coeff) *
               bern.over_n(static_cast<unsigned>(n + r * (p - 1)));
    }
    fill_valuation(report, sum, p);
    return report;
}

CongruenceReport adelberg_check(BernoulliProvider& bern, long p, long a, long n) {
    require_odd_prime(p);
    if (a < 1 || n < 1) {
        throw UsageError("adelberg_check: a and n must be positive");
    }
    CongruenceReport report{.check = "adelberg", .params = pan(p, a, n), .claimed = a};
    if (p == 3) {
        report.verdict = Verdict::vacuous;
        report.note = "statement is vacuous at p=3";
        return report;
    }
    if (n % (p - 1) == 0 || n % (p - 1) == 1) {
        report.verdict = Verdict::vacuous;
        report.note = "requires n != 0,1 mod p-1";
        return report;
    }
    if (n <= a) {
        report.verdict = Verdict::vacuous;
        report.note = "requires n > a";
        return report;
    }
    Int stride_big;
    mpz_ui_pow_ui(stride_big.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(a - 1));
    if (!stride_big.fits_ulong_p()) {
        throw UsageError("adelberg_check: p^(a-1) out of desk-scale range");
    }
    const unsigned long power = stride_big.get_ui();  // p^{a-1}
    const unsigned long shifted = static_cast<unsigned long>(n) + power * (p - 1);
    if (shifted > bern.weight_cap()) {
        throw UsageError("adelberg_check: index " + std::to_string(shifted) +
                         " exceeds weight cap");
    }
    const Partition twist({{static_cast<std::uint32_t>(p - 1),
                            static_cast<std::uint32_t>(power)}});
    const UniPoly diff = UniPoly::monomial(twist, 1) * bern.over_n(static_cast<unsigned>(n)) -
                         bern.over_n(static_cast<unsigned>(shifted));
    fill_valuation(report, diff, p);
    return report;
}

UniPoly clarke_rhs(unsigned n) {
    if (n < 3) {
        throw UsageError("clarke_rhs: n >= 3 (B1, B2 have closed forms)");
    }
    UniPoly rhs;
    const bool include_even_primes = (n % 4 == 0);  // p = 2 enters only when 4 | n
    if (n % 2 == 0) {
        // Prime sum over (p-1) | n, a = n/(p-1).
        for (unsigned long e = 1; e <= n; ++e) {
            if (n % e != 0 || !is_prime(static_cast<long>(e + 1))) {
                continue;
            }
            const long p = static_cast<long>(e + 1);
            if (p == 2 && !include_even_primes) {
                continue;
            }
            const Int a(static_cast<unsigned long>(n / e));
            const long ord_a = ord_p_int(a, p);
            Int modulus;
            mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(1 + ord_a));
            const Int numerator = mod_inverse(p_free_part(a, p), modulus);
            const Partition mono({{static_cast<std::uint32_t>(p - 1),
                                   static_cast<std::uint32_t>(a.get_ui())}});
            rhs += UniPoly::monomial(mono, make_rat(numerator, modulus));
        }
        if (n % 4 == 2) {
            // Extra terms of the n = 2 mod 4 case (n >= 6 here).
            rhs += UniPoly::monomial(
                Partition({{1, static_cast<std::uint32_t>(n - 6)}, {3, 2}}), make_rat(1, 2));
            rhs += UniPoly::monomial(Partition({{1, static_cast<std::uint32_t>(n)}}),
                                     make_rat(-static_cast<long>(n), 8));
        }
    } else {
        rhs += UniPoly::monomial(Partition({{1, static_cast<std::uint32_t>(n)}}),
                                 make_rat(1, 2));
        rhs += UniPoly::monomial(
            Partition({{1, static_cast<std::uint32_t>(n - 3)}, {3, 1}}), make_rat(1, 2));
    }
    return rhs;
}

CongruenceReport clarke_check(BernoulliProvider& bern, unsigned n) {
    if (n < 1) {
        throw UsageError("clarke_check: n must be >= 1");
    }
    CongruenceReport report{.check = "clarke",
                            .params = {{"n", std::to_string(n)}},
                            .claimed = 0,
                            .note = "congruence mod Z[c1,c2,...]"};
    const UniPoly& lhs = bern.over_n(n);
    bool pass = false;
    if (n == 1) {
        pass = lhs == UniPoly::monomial(Partition({{1, 1}}), make_rat(1, 2));
    } else if (n == 2) {
        pass = lhs == UniPoly::monomial(Partition({{1, 2}}), make_rat(-1, 4)) +
                          UniPoly::monomial(Partition({{2, 1}}), make_rat(1, 3));
    } else {
        pass = lhs.congruent_mod_integers(clarke_rhs(n));
    }
    report.verdict = pass ? Verdict::pass : Verdict::fail;
    if (!pass && n >= 3) {
        // Surface the first non-integral coefficient of the difference.
        const UniPoly diff = lhs - clarke_rhs(n);
        for (const auto& [u, coeff] : diff.terms()) {
            if (coeff.get_den() != 1) {
                report.worst = u;
                break;
            }
        }
    }
    return report;
}

CongruenceReport lemma331_check(long p, const Partition& u) {
    require_odd_prime(p);
    if (u.multiplicity(static_cast<std::uint32_t>(p - 1)) != 0) {
        throw UsageError("lemma331_check: hypothesis U_{p-1} = 0 violated");
    }
    if (u.degree() == 0) {
        throw UsageError("lemma331_check: requires d(U) > 0");
    }
    const long bound =
        static_cast<long>((u.weight() + u.degree() - 2) / (2 * static_cast<unsigned long>(p)));
    CongruenceReport report{
        .check = "lemma331",
        .params = {{"p", std::to_string(p)}, {"U", u.to_string()}},
        .claimed = bound};
    report.achieved = ord_p_rat(tau_U(u), p);
    report.worst = u;
    if (const auto part = first_out_of_scope_part(p, u)) {
        report.verdict = Verdict::vacuous;
        report.note = "part " + std::to_string(*part) +
                      " is outside the bound's scope at p=" + std::to_string(p);
        return report;
    }
    report.verdict = *report.achieved >= bound ? Verdict::pass : Verdict::fail;
    return report;
}

CongruenceReport lemma331_sweep(long p, unsigned long max_weight) {
    require_odd_prime(p);
    CongruenceReport report{
        .check = "lemma331-sweep",
        .params = {{"p", std::to_string(p)}, {"max_weight", std::to_string(max_weight)}},
        .claimed = 0};
    std::optional<long> min_margin;
    Partition witness;
    unsigned long count = 0;
    unsigned long skipped = 0;
    for (unsigned long w = 1; w <= max_weight; ++w) {
        for_each_partition(w, {static_cast<std::uint32_t>(p - 1)}, [&](const Partition& u) {
            const auto one = lemma331_check(p, u);
            if (one.verdict == Verdict::vacuous) {
                ++skipped;
                return;
            }
            const long margin = *one.achieved - one.claimed;
            ++count;
            if (!min_margin || margin < *min_margin) {
                min_margin = margin;
                witness = u;
            }
        }, max_weight);
    }
    report.note = "instances=" + std::to_string(count);
    if (skipped != 0) {
        report.note += " out_of_scope=" + std::to_string(skipped);
    }
    if (min_margin) {
        report.achieved = *min_margin;  // claimed 0: achieved doubles as min margin
        report.worst = witness;
        report.verdict = *min_margin >= 0 ? Verdict::pass : Verdict::fail;
    } else {
        report.verdict = Verdict::vacuous;
        report.note += " (empty sweep)";
    }
    return report;
}

SharpnessWitness sharpness_witness(long p) {
    require_prime(p);
    if (p < 7) {
        throw UsageError("sharpness_witness: requires p >= 7");
    }
    const Partition u({{1, static_cast<std::uint32_t>(p)},
                       {static_cast<std::uint32_t>(2 * p - 1),
                        static_cast<std::uint32_t>((p - 5) / 2)}});
    SharpnessWitness w;
    w.u = u;
    w.ord = ord_p_rat(tau_U(u), p);
    w.bound =
        static_cast<long>((u.weight() + u.degree() - 2) / (2 * static_cast<unsigned long>(p)));
    if (w.ord != (p - 5) / 2 || w.bound != (p - 5) / 2) {
        throw std::logic_error("sharpness witness valuation mismatch at p = " +
                               std::to_string(p));
    }
    return w;
}

CongruenceReport binom_valuation_check(long p, long a) {
    require_odd_prime(p);
    if (a < 2) {
        throw UsageError("binom_valuation_check: requires a >= 2");
    }
    Int top_big;
    mpz_ui_pow_ui(top_big.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(a - 1));
    if (top_big > 100000) {
        throw UsageError("binom_valuation_check: p^(a-1) beyond desk-scale bound 10^5");
    }
    const unsigned long top = top_big.get_ui();
    CongruenceReport report{.check = "binomval", .params = {{"p", std::to_string(p)},
                                                           {"a", std::to_string(a)}},
                            .claimed = 0};
    for (unsigned long r = 1; r < top; ++r) {
        const long expected = a - 1 - ord_p_int(Int(r), p);
        const long got = ord_p_int(binomial(Int(top), Int(r)), p);
        if (got != expected) {
            report.verdict = Verdict::fail;
            report.note = "mismatch at r=" + std::to_string(r) + ": ord=" +
                          std::to_string(got) + " expected=" + std::to_string(expected);
            return report;
        }
    }
    report.achieved = 0;
    report.verdict = Verdict::pass;
    report.note = "checked r=1.." + std::to_string(top - 1);
    return report;
}

}  // namespace unibern
