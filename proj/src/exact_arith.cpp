#include "unibern/exact_arith.hpp"

#include <deque>
#include <mutex>

namespace unibern {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw UsageError("make_rat: zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_prime(long p) {
    if (p < 2) {
        return false;
    }
    if (p < 4) {
        return true;
    }
    if (p % 2 == 0) {
        return false;
    }
    for (long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

void require_prime(long p) {
    if (!is_prime(p)) {
        throw UsageError("expected a prime, got " + std::to_string(p));
    }
}

void require_odd_prime(long p) {
    require_prime(p);
    if (p == 2) {
        throw UsageError("expected an odd prime, got 2");
    }
}

namespace {

// deque keeps element addresses stable while the table grows.
std::deque<Int> g_factorials{1};
std::mutex g_factorial_mutex;

}  // namespace

Int factorial(unsigned long n) {
    std::lock_guard<std::mutex> lock(g_factorial_mutex);
    while (g_factorials.size() <= n) {
        const unsigned long k = g_factorials.size();
        g_factorials.push_back(g_factorials.back() * k);
    }
    return g_factorials[n];
}

Int falling_factorial(const Int& n, unsigned long r) {
    Int result = 1;
    Int factor = n;
    for (unsigned long i = 0; i < r; ++i) {
        result *= factor;
        factor -= 1;
    }
    return result;
}

Int binomial(const Int& n, const Int& k) {
    if (n < 0) {
        throw UsageError("binomial: n must be nonnegative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    Int result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return result;
}

long digit_sum(const Int& n, long p) {
    if (n < 0) {
        throw UsageError("digit_sum: n must be nonnegative");
    }
    if (p < 2) {
        throw UsageError("digit_sum: base must be >= 2");
    }
    Int rest = n;
    Int base = p;
    long sum = 0;
    while (rest > 0) {
        Int digit = rest % base;
        sum += digit.get_si();
        rest /= base;
    }
    return sum;
}

long ord_p_int(const Int& m, long p) {
    require_prime(p);
    if (m == 0) {
        throw UsageError("ord_p_int: valuation of zero is undefined here");
    }
    Int rest = abs(m);
    Int prime = p;
    long ord = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
        rest /= prime;
        ++ord;
    }
    return ord;
}

long ord_p_factorial(unsigned long n, long p) {
    if (p < 2) {
        throw UsageError("ord_p_factorial: p must be >= 2");
    }
    require_prime(p);
    return (static_cast<long>(n) - digit_sum(Int(static_cast<unsigned long>(n)), p)) / (p - 1);
}

long ord_p_rat(const Rat& q, long p) {
    if (q == 0) {
        throw UsageError("ord_p_rat: valuation of zero is undefined here");
    }
    return ord_p_int(q.get_num(), p) - ord_p_int(q.get_den(), p);
}

Int p_free_part(const Int& a, long p) {
    if (a <= 0) {
        throw UsageError("p_free_part: a must be positive");
    }
    Int rest = a;
    Int prime = p;
    require_prime(p);
    while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
        rest /= prime;
    }
    return rest;
}

Int mod_inverse(const Int& x, const Int& m) {
    if (m < 2) {
        throw UsageError("mod_inverse: modulus must be >= 2");
    }
    Int result;
    if (mpz_invert(result.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw UsageError("mod_inverse: arguments are not coprime");
    }
    return result;
}

Int least_nonneg_residue(const Int& k, const Int& p) {
    if (p < 1) {
        throw UsageError("least_nonneg_residue: modulus must be >= 1");
    }
    Int result;
    mpz_mod(result.get_mpz_t(), k.get_mpz_t(), p.get_mpz_t());
    return result;
}

std::string int_to_string(const Int& n) {
    return n.get_str();
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int int_from_string(const std::string& s) {
    Int n;
    if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0) {
        throw UsageError("bad integer literal: '" + s + "'");
    }
    return n;
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
        throw UsageError("bad rational literal: '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw UsageError("bad rational literal (zero denominator): '" + s + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace unibern
