#pragma once

#include "unibern/exact_arith.hpp"
#include "unibern/partition.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace unibern {

// Sparse polynomial in Q[c_1, c_2, ...]: Partition (monomial exponent vector)
// -> nonzero rational coefficient. Terms iterate in serialization order
// (descending graded-lex); the empty partition keys the constant term.
class UniPoly {
public:
    using TermMap = std::map<Partition, Rat, GrlexFirst>;

    UniPoly() = default;

    static UniPoly constant(const Rat& value);
    static UniPoly monomial(const Partition& u, const Rat& coeff);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coefficient(const Partition& u) const;

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly operator*(const Rat& scalar) const;
    UniPoly& operator+=(const UniPoly& other);

    bool operator==(const UniPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const UniPoly& other) const { return !(*this == other); }

    struct Valuation {
        bool all_zero = false;
        long min_ord = 0;
        Partition worst;  // monomial attaining the minimum
    };
    // Minimum of ord_p over all coefficients; all_zero for the zero polynomial.
    Valuation min_valuation_p(long p) const;

    // Every coefficient of this - g has ord_p >= d.
    bool congruent_mod_p_power(const UniPoly& g, long p, long d) const;

    // Every coefficient of this - g is an integer.
    bool congruent_mod_integers(const UniPoly& g) const;

    // Evaluates at the assignment; the assignment must cover every part index
    // that occurs, otherwise the first unassigned indeterminate is reported.
    Rat specialize(const std::function<std::optional<Rat>(std::uint32_t)>& assignment) const;

    // Canonical text form, e.g. "1/2*c1^3 - 1*c1*c2 + 1/2*c3"; "0" when zero.
    std::string to_string() const;
    static UniPoly parse(const std::string& text);

private:
    void insert_term(const Partition& u, const Rat& coeff);  // merges, prunes zeros
    TermMap terms_;
};

inline UniPoly operator*(const Rat& scalar, const UniPoly& f) { return f * scalar; }

}  // namespace unibern
