#pragma once

#include "unibern/exact_arith.hpp"
#include "unibern/polynomial.hpp"

#include <vector>

namespace unibern {

template <class R>
struct CoeffOps;

template <>
struct CoeffOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static bool is_one(const Rat& x) { return x == 1; }
    static Rat scale(const Rat& x, const Rat& s) { return x * s; }
    static Rat invert_unit(const Rat& x) {
        if (x == 0) {
            throw UsageError("series: constant term is not invertible");
        }
        Rat inv;
        mpq_inv(inv.get_mpq_t(), x.get_mpq_t());
        return inv;
    }
};

template <>
struct CoeffOps<UniPoly> {
    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly::constant(1); }
    static bool is_zero(const UniPoly& x) { return x.is_zero(); }
    static bool is_one(const UniPoly& x) { return x == one(); }
    static UniPoly scale(const UniPoly& x, const Rat& s) { return x * s; }
    static UniPoly invert_unit(const UniPoly& x) {
        // Only constants are units in Q[c1, c2, ...].
        if (x.terms().size() != 1 || !x.terms().begin()->first.empty()) {
            throw UsageError("series: constant term is not invertible");
        }
        return UniPoly::constant(CoeffOps<Rat>::invert_unit(x.terms().begin()->second));
    }
};

// Truncated ordinary power series sum b_n z^n, n = 0..order. Trailing zeros
// are stored explicitly: the truncation order is part of the value's identity,
// and arithmetic never silently extends it (results carry the min of the
// operand orders).
template <class R>
class OrdinarySeries {
public:
    using Ops = CoeffOps<R>;

    explicit OrdinarySeries(unsigned order)
        : coeffs_(static_cast<std::size_t>(order) + 1, Ops::zero()) {}

    static OrdinarySeries one(unsigned order) {
        OrdinarySeries s(order);
        s.coeffs_[0] = Ops::one();
        return s;
    }
    static OrdinarySeries identity(unsigned order) {
        OrdinarySeries s(order);
        if (order >= 1) {
            s.coeffs_[1] = Ops::one();
        }
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const R& coeff(unsigned n) const {
        if (n >= coeffs_.size()) {
            throw UsageError("series coefficient beyond truncation order");
        }
        return coeffs_[n];
    }
    void set_coeff(unsigned n, R value) {
        if (n >= coeffs_.size()) {
            throw UsageError("series coefficient beyond truncation order");
        }
        coeffs_[n] = std::move(value);
    }

    OrdinarySeries truncated(unsigned new_order) const {
        OrdinarySeries s(new_order);
        for (unsigned n = 0; n <= std::min(new_order, order()); ++n) {
            s.coeffs_[n] = coeffs_[n];
        }
        return s;
    }

    OrdinarySeries operator+(const OrdinarySeries& g) const {
        OrdinarySeries s(std::min(order(), g.order()));
        for (unsigned n = 0; n <= s.order(); ++n) {
            s.coeffs_[n] = coeffs_[n] + g.coeffs_[n];
        }
        return s;
    }

    OrdinarySeries operator-(const OrdinarySeries& g) const {
        OrdinarySeries s(std::min(order(), g.order()));
        for (unsigned n = 0; n <= s.order(); ++n) {
            s.coeffs_[n] = coeffs_[n] - g.coeffs_[n];
        }
        return s;
    }

    // Cauchy product to the min truncation order.
    OrdinarySeries operator*(const OrdinarySeries& g) const {
        OrdinarySeries s(std::min(order(), g.order()));
        for (unsigned i = 0; i <= s.order(); ++i) {
            if (Ops::is_zero(coeffs_[i])) {
                continue;
            }
            for (unsigned j = 0; i + j <= s.order(); ++j) {
                if (Ops::is_zero(g.coeffs_[j])) {
                    continue;
                }
                s.coeffs_[i + j] = s.coeffs_[i + j] + coeffs_[i] * g.coeffs_[j];
            }
        }
        return s;
    }

    OrdinarySeries scaled(const Rat& s) const {
        OrdinarySeries out(order());
        for (unsigned n = 0; n <= order(); ++n) {
            out.coeffs_[n] = Ops::scale(coeffs_[n], s);
        }
        return out;
    }

    // Divide by z^k; the k lowest coefficients must vanish. Order drops by k.
    OrdinarySeries shifted_down(unsigned k) const {
        if (order() < k) {
            throw UsageError("shifted_down: truncation order too small");
        }
        for (unsigned n = 0; n < k; ++n) {
            if (!Ops::is_zero(coeffs_[n])) {
                throw UsageError("shifted_down: low coefficient is nonzero");
            }
        }
        OrdinarySeries s(order() - k);
        for (unsigned n = 0; n <= s.order(); ++n) {
            s.coeffs_[n] = coeffs_[n + k];
        }
        return s;
    }

    // 1/this; requires an invertible constant term.
    OrdinarySeries reciprocal() const {
        const R inv0 = Ops::invert_unit(coeffs_[0]);
        OrdinarySeries s(order());
        s.coeffs_[0] = inv0;
        for (unsigned n = 1; n <= order(); ++n) {
            R acc = Ops::zero();
            for (unsigned k = 1; k <= n; ++k) {
                acc = acc + coeffs_[k] * s.coeffs_[n - k];
            }
            s.coeffs_[n] = Ops::scale(inv0 * acc, Rat(-1));
        }
        return s;
    }

    // this/g to the min truncation order; g needs an invertible constant term.
    OrdinarySeries operator/(const OrdinarySeries& g) const {
        const R inv0 = Ops::invert_unit(g.coeffs_[0]);
        OrdinarySeries s(std::min(order(), g.order()));
        for (unsigned n = 0; n <= s.order(); ++n) {
            R acc = coeffs_[n];
            for (unsigned k = 0; k < n; ++k) {
                acc = acc - s.coeffs_[k] * g.coeffs_[n - k];
            }
            s.coeffs_[n] = inv0 * acc;
        }
        return s;
    }

    // Integer power; negative exponents go through the reciprocal.
    OrdinarySeries pow(long e) const {
        if (e < 0) {
            return reciprocal().pow(-e);
        }
        OrdinarySeries result = one(order());
        for (long i = 0; i < e; ++i) {
            result = result * *this;
        }
        return result;
    }

    // this(inner); inner must have zero constant term.
    OrdinarySeries compose(const OrdinarySeries& inner) const {
        if (!Ops::is_zero(inner.coeffs_[0])) {
            throw UsageError("compose: inner constant term must vanish");
        }
        const unsigned ord = std::min(order(), inner.order());
        const OrdinarySeries inn = inner.truncated(ord);
        OrdinarySeries result(ord);
        for (unsigned k = order() + 1; k-- > 0;) {  // Horner from the top coefficient
            result = result * inn;
            result.coeffs_[0] = result.coeffs_[0] + coeffs_[k];
        }
        return result;
    }

    bool operator==(const OrdinarySeries& g) const { return coeffs_ == g.coeffs_; }

private:
    std::vector<R> coeffs_;
};

// Truncated Hurwitz series sum a_n z^n/n!; same truncation discipline as
// OrdinarySeries. The Hurwitz/ordinary distinction is type-level with explicit
// conversion, so factorials enter only where a constructor says so.
template <class R>
class HurwitzSeries {
public:
    using Ops = CoeffOps<R>;

    explicit HurwitzSeries(unsigned order)
        : coeffs_(static_cast<std::size_t>(order) + 1, Ops::zero()) {}

    static HurwitzSeries one(unsigned order) {
        HurwitzSeries s(order);
        s.coeffs_[0] = Ops::one();
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const R& coeff(unsigned n) const {
        if (n >= coeffs_.size()) {
            throw UsageError("series coefficient beyond truncation order");
        }
        return coeffs_[n];
    }
    void set_coeff(unsigned n, R value) {
        if (n >= coeffs_.size()) {
            throw UsageError("series coefficient beyond truncation order");
        }
        coeffs_[n] = std::move(value);
    }

    HurwitzSeries operator+(const HurwitzSeries& g) const {
        HurwitzSeries s(std::min(order(), g.order()));
        for (unsigned n = 0; n <= s.order(); ++n) {
            s.coeffs_[n] = coeffs_[n] + g.coeffs_[n];
        }
        return s;
    }

    HurwitzSeries operator-(const HurwitzSeries& g) const {
        HurwitzSeries s(std::min(order(), g.order()));
        for (unsigned n = 0; n <= s.order(); ++n) {
            s.coeffs_[n] = coeffs_[n] - g.coeffs_[n];
        }
        return s;
    }

    // Binomial convolution sum C(n,k) a_k b_{n-k}.
    HurwitzSeries operator*(const HurwitzSeries& g) const {
        HurwitzSeries s(std::min(order(), g.order()));
        for (unsigned n = 0; n <= s.order(); ++n) {
            R acc = Ops::zero();
            for (unsigned k = 0; k <= n; ++k) {
                if (Ops::is_zero(coeffs_[k]) || Ops::is_zero(g.coeffs_[n - k])) {
                    continue;
                }
                acc = acc + Ops::scale(coeffs_[k] * g.coeffs_[n - k],
                                       Rat(binomial(Int(static_cast<unsigned long>(n)),
                                                    Int(static_cast<unsigned long>(k)))));
            }
            s.coeffs_[n] = acc;
        }
        return s;
    }

    // this/g under the binomial convolution; g needs an invertible a_0.
    HurwitzSeries operator/(const HurwitzSeries& g) const {
        const R inv0 = Ops::invert_unit(g.coeffs_[0]);
        HurwitzSeries s(std::min(order(), g.order()));
        for (unsigned n = 0; n <= s.order(); ++n) {
            R acc = coeffs_[n];
            for (unsigned k = 0; k < n; ++k) {
                acc = acc - Ops::scale(s.coeffs_[k] * g.coeffs_[n - k],
                                       Rat(binomial(Int(static_cast<unsigned long>(n)),
                                                    Int(static_cast<unsigned long>(k)))));
            }
            s.coeffs_[n] = inv0 * acc;
        }
        return s;
    }

    OrdinarySeries<R> to_ordinary() const {
        OrdinarySeries<R> s(order());
        for (unsigned n = 0; n <= order(); ++n) {
            s.set_coeff(n, Ops::scale(coeffs_[n], make_rat(1, factorial(n))));
        }
        return s;
    }

    static HurwitzSeries from_ordinary(const OrdinarySeries<R>& f) {
        HurwitzSeries s(f.order());
        for (unsigned n = 0; n <= f.order(); ++n) {
            s.coeffs_[n] = Ops::scale(f.coeff(n), Rat(factorial(n)));
        }
        return s;
    }

    bool operator==(const HurwitzSeries& g) const { return coeffs_ == g.coeffs_; }

private:
    std::vector<R> coeffs_;
};

namespace detail {
template <class R>
void require_reversion_shape(const OrdinarySeries<R>& phi) {
    if (phi.order() < 1 || !CoeffOps<R>::is_zero(phi.coeff(0)) ||
        !CoeffOps<R>::is_one(phi.coeff(1))) {
        throw UsageError("reversion: series must be u + higher-order terms");
    }
}
}  // namespace detail

// Compositional inverse psi with phi(psi(t)) = t to the truncation order,
// computed by per-coefficient Lagrange extraction: psi_n = (1/n)[u^{n-1}](u/phi)^n.
template <class R>
OrdinarySeries<R> reversion(const OrdinarySeries<R>& phi) {
    detail::require_reversion_shape(phi);
    const unsigned ord = phi.order();
    const OrdinarySeries<R> g = phi.shifted_down(1).reciprocal();  // u/phi(u), order ord-1
    OrdinarySeries<R> psi(ord);
    OrdinarySeries<R> g_power = OrdinarySeries<R>::one(ord - 1);
    for (unsigned n = 1; n <= ord; ++n) {
        g_power = g_power * g;  // g^n
        psi.set_coeff(n, CoeffOps<R>::scale(g_power.coeff(n - 1),
                                            make_rat(1, static_cast<unsigned long>(n))));
    }
    return psi;
}

// [u^n](u/phi(u))^l, by direct expansion.
template <class R>
R lagrange_coeff_lhs(const OrdinarySeries<R>& phi, long l, unsigned n) {
    detail::require_reversion_shape(phi);
    if (n > phi.order() - 1) {
        throw UsageError("lagrange_coeff_lhs: insufficient truncation order");
    }
    const OrdinarySeries<R> base = phi.shifted_down(1);  // phi/u, unit constant term
    return base.pow(-l).coeff(n);
}

// (l/(l-n))[t^n](psi(t)/t)^{l-n}; negative l-n expands the reciprocal series.
template <class R>
R lagrange_coeff_rhs(const OrdinarySeries<R>& psi, long l, unsigned n) {
    detail::require_reversion_shape(psi);
    if (l == static_cast<long>(n)) {
        throw UsageError("lagrange_coeff_rhs: formula is singular at l = n");
    }
    if (n > psi.order() - 1) {
        throw UsageError("lagrange_coeff_rhs: insufficient truncation order");
    }
    const OrdinarySeries<R> base = psi.shifted_down(1);  // psi/t
    const R raw = base.pow(l - static_cast<long>(n)).coeff(n);
    return CoeffOps<R>::scale(raw, make_rat(l, l - static_cast<long>(n)));
}

}  // namespace unibern
