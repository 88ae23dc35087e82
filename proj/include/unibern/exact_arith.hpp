#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace unibern {

// Arbitrary-precision integers and rationals. Rationals are kept in lowest
// terms with a positive denominator (mpq canonical form).
using Int = mpz_class;
using Rat = mpq_class;

// Thrown on violated preconditions (bad prime, zero where nonzero required, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Rat make_rat(const Int& num, const Int& den);

// Deterministic trial division; intended for desk-scale p < 10^6.
bool is_prime(long p);
void require_prime(long p);
void require_odd_prime(long p);

// n!; memoized per process up to the largest index requested.
Int factorial(unsigned long n);

// (n)_r = n(n-1)...(n-r+1); empty product for r = 0.
Int falling_factorial(const Int& n, unsigned long r);

// C(n,k) for n >= 0; 0 when k < 0 or k > n.
Int binomial(const Int& n, const Int& k);

// S_p(n), the sum of base-p digits of n >= 0.
long digit_sum(const Int& n, long p);

// Exact exponent of p in m; rejects m = 0.
long ord_p_int(const Int& m, long p);

// ord_p(n!) = (n - S_p(n))/(p-1), without forming n!.
long ord_p_factorial(unsigned long n, long p);

// ord_p(num) - ord_p(den); may be negative; rejects q = 0.
long ord_p_rat(const Rat& q, long p);

// a with all factors of p removed; a >= 1.
Int p_free_part(const Int& a, long p);

// Unique representative of x^-1 mod m in [0, m); gcd(x, m) = 1 required.
Int mod_inverse(const Int& x, const Int& m);

// k mod p in [0, p); p >= 1.
Int least_nonneg_residue(const Int& k, const Int& p);

// Decimal-string forms used verbatim in cache files and reports:
// integers as plain decimal, rationals as "num/den" with "/den" omitted when 1.
std::string int_to_string(const Int& n);
std::string rat_to_string(const Rat& q);
Int int_from_string(const std::string& s);
Rat rat_from_string(const std::string& s);

}  // namespace unibern
