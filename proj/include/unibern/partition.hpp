#pragma once

#include "unibern/exact_arith.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace unibern {

// Sparse multiset of parts: part index j >= 1 -> multiplicity U_j >= 1,
// stored in ascending j. Doubles as the exponent vector of a monomial in
// c_1, c_2, ...: part j corresponds to the exponent of c_j.
class Partition {
public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (part, multiplicity)

    Partition() = default;
    explicit Partition(std::vector<Entry> entries);  // normalizes: sorts, merges, drops zeros

    // Parses the text form "j1:m1,j2:m2,..." ("" is the empty partition).
    static Partition parse(const std::string& text);
    std::string to_string() const;

    unsigned long weight() const { return weight_; }
    unsigned long degree() const { return degree_; }
    bool empty() const { return entries_.empty(); }
    std::uint32_t multiplicity(std::uint32_t part) const;
    const std::vector<Entry>& entries() const { return entries_; }

    // U with multiplicity of part j increased by r.
    Partition with_part_added(std::uint32_t part, std::uint32_t count) const;
    // U with part j removed entirely.
    Partition without_part(std::uint32_t part) const;
    // Exponent-vector sum; the monomial product c^U * c^V.
    Partition merged_with(const Partition& other) const;

    bool operator==(const Partition& other) const { return entries_ == other.entries_; }
    bool operator!=(const Partition& other) const { return !(*this == other); }

    // Canonical graded-lex precedence for monomials: higher degree first,
    // ties broken by the larger exponent on the smaller part index.
    // precedes(a, b) == true means a is listed before b in serialized form.
    static bool precedes(const Partition& a, const Partition& b);

private:
    std::vector<Entry> entries_;
    unsigned long weight_ = 0;
    unsigned long degree_ = 0;
};

// Comparator for ordered containers keyed by Partition in serialization order.
struct GrlexFirst {
    bool operator()(const Partition& a, const Partition& b) const {
        return Partition::precedes(a, b);
    }
};

// All partitions of weight n avoiding the forbidden parts, each exactly once,
// in ascending graded-lex order (reverse of serialization order). The weight
// cap guards against accidental p(n) blowups.
inline constexpr unsigned long kDefaultWeightCap = 64;

std::vector<Partition> partitions_of_weight(unsigned long n,
                                            const std::set<std::uint32_t>& forbidden_parts = {},
                                            unsigned long weight_cap = kDefaultWeightCap);

void for_each_partition(unsigned long n,
                        const std::set<std::uint32_t>& forbidden_parts,
                        const std::function<void(const Partition&)>& fn,
                        unsigned long weight_cap = kDefaultWeightCap);

// Lambda^U = prod_j (j+1)^{U_j}.
Int lambda_U(const Partition& u);

// U! = prod_j U_j!.
Int u_factorial(const Partition& u);

// binom(d, U) = d!/U!; requires d = degree(U).
Int multinomial(unsigned long d, const Partition& u);

// gamma_U = Lambda^U * U!.
Int gamma_U(const Partition& u);

// tau_U = (-1)^{d(U)-1} (w(U)+d(U)-2)! / gamma_U; requires degree(U) >= 1.
Rat tau_U(const Partition& u);

}  // namespace unibern
