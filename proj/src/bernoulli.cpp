#include "unibern/bernoulli.hpp"

namespace unibern {

OrdinarySeries<UniPoly> universal_u_series(unsigned order) {
    OrdinarySeries<UniPoly> u(order);
    if (order >= 1) {
        u.set_coeff(1, UniPoly::constant(1));
    }
    for (unsigned n = 1; n + 1 <= order; ++n) {
        const Partition cn({{n, 1}});
        u.set_coeff(n + 1, UniPoly::monomial(cn, make_rat(1, n + 1)));
    }
    return u;
}

std::vector<UniPoly> universal_bernoulli_reversion(unsigned max_n, unsigned long weight_cap) {
    if (max_n > weight_cap) {
        throw UsageError("max index " + std::to_string(max_n) + " exceeds weight cap " +
                         std::to_string(weight_cap));
    }
    // t(u) = reversion of u(t); then u/t(u) = 1/(t(u)/u).
    const auto t_of_u = reversion(universal_u_series(max_n + 1));
    const auto expansion = t_of_u.shifted_down(1).reciprocal();  // order max_n
    std::vector<UniPoly> result;
    result.reserve(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        result.push_back(expansion.coeff(n) * Rat(factorial(n)));
    }
    return result;
}

UniPoly universal_bernoulli_schur(unsigned n, unsigned long weight_cap) {
    if (n < 1) {
        throw UsageError("universal_bernoulli_schur: n must be >= 1");
    }
    UniPoly sum;
    for_each_partition(n, {}, [&](const Partition& u) {
        sum += UniPoly::monomial(u, tau_U(u));
    }, weight_cap);
    return sum;
}

UniPoly h_power_coefficient(unsigned d, unsigned n, unsigned long weight_cap) {
    UniPoly sum;
    for_each_partition(n, {}, [&](const Partition& u) {
        if (u.degree() != d) {
            return;
        }
        sum += UniPoly::monomial(u, make_rat(multinomial(d, u), lambda_U(u)));
    }, weight_cap);
    return sum;
}

std::vector<Rat> specialize_classical(unsigned max_n, unsigned long weight_cap) {
    const auto polys = universal_bernoulli_reversion(max_n, weight_cap);
    std::vector<Rat> result;
    result.reserve(polys.size());
    for (const auto& poly : polys) {
        result.push_back(poly.specialize([](std::uint32_t part) -> std::optional<Rat> {
            return Rat(part % 2 == 0 ? 1 : -1);
        }));
    }
    return result;
}

const UniPoly& BernoulliProvider::over_n(unsigned n) {
    if (n < 1) {
        throw UsageError("BernoulliProvider: n must be >= 1");
    }
    if (cache_.size() <= n) {
        cache_.resize(n + 1);
        present_.resize(n + 1, false);
    }
    if (!present_[n]) {
        cache_[n] = universal_bernoulli_schur(n, weight_cap_);
        present_[n] = true;
    }
    return cache_[n];
}

void BernoulliProvider::warm(unsigned max_n) {
    for (unsigned n = 1; n <= max_n; ++n) {
        over_n(n);
    }
}

void BernoulliProvider::put(unsigned n, UniPoly over_n_value) {
    if (cache_.size() <= n) {
        cache_.resize(n + 1);
        present_.resize(n + 1, false);
    }
    cache_[n] = std::move(over_n_value);
    present_[n] = true;
}

}  // namespace unibern
