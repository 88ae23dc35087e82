#include "unibern/polynomial.hpp"

#include <sstream>

namespace unibern {

UniPoly UniPoly::constant(const Rat& value) {
    return monomial(Partition(), value);
}

UniPoly UniPoly::monomial(const Partition& u, const Rat& coeff) {
    UniPoly f;
    if (coeff != 0) {
        f.terms_.emplace(u, coeff);
    }
    return f;
}

Rat UniPoly::coefficient(const Partition& u) const {
    const auto it = terms_.find(u);
    return it == terms_.end() ? Rat(0) : it->second;
}

void UniPoly::insert_term(const Partition& u, const Rat& coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(u, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    UniPoly result = *this;
    result += other;
    return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    for (const auto& [u, coeff] : other.terms_) {
        insert_term(u, coeff);
    }
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly result;
    for (const auto& [u, coeff] : terms_) {
        result.terms_.emplace(u, -coeff);
    }
    return result;
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    UniPoly result = *this;
    for (const auto& [u, coeff] : other.terms_) {
        result.insert_term(u, -coeff);
    }
    return result;
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    UniPoly result;
    for (const auto& [u, a] : terms_) {
        for (const auto& [v, b] : other.terms_) {
            result.insert_term(u.merged_with(v), a * b);
        }
    }
    return result;
}

UniPoly UniPoly::operator*(const Rat& scalar) const {
    UniPoly result;
    if (scalar == 0) {
        return result;
    }
    for (const auto& [u, coeff] : terms_) {
        result.terms_.emplace(u, coeff * scalar);
    }
    return result;
}

UniPoly::Valuation UniPoly::min_valuation_p(long p) const {
    Valuation v;
    if (terms_.empty()) {
        v.all_zero = true;
        return v;
    }
    bool first = true;
    for (const auto& [u, coeff] : terms_) {
        const long ord = ord_p_rat(coeff, p);
        if (first || ord < v.min_ord) {
            v.min_ord = ord;
            v.worst = u;
            first = false;
        }
    }
    return v;
}

bool UniPoly::congruent_mod_p_power(const UniPoly& g, long p, long d) const {
    const Valuation v = (*this - g).min_valuation_p(p);
    return v.all_zero || v.min_ord >= d;
}

bool UniPoly::congruent_mod_integers(const UniPoly& g) const {
    const UniPoly diff = *this - g;
    for (const auto& [u, coeff] : diff.terms()) {
        if (coeff.get_den() != 1) {
            return false;
        }
    }
    return true;
}

Rat UniPoly::specialize(
    const std::function<std::optional<Rat>(std::uint32_t)>& assignment) const {
    Rat total = 0;
    for (const auto& [u, coeff] : terms_) {
        Rat term = coeff;
        for (const auto& [part, mult] : u.entries()) {
            const auto value = assignment(part);
            if (!value) {
                throw UsageError("specialize: no assignment for c" + std::to_string(part));
            }
            for (std::uint32_t i = 0; i < mult; ++i) {
                term *= *value;
            }
        }
        total += term;
    }
    return total;
}

namespace {

std::string monomial_to_string(const Partition& u) {
    std::string out;
    for (const auto& [part, mult] : u.entries()) {
        if (!out.empty()) {
            out += '*';
        }
        out += "c" + std::to_string(part);
        if (mult > 1) {
            out += "^" + std::to_string(mult);
        }
    }
    return out;
}

Partition monomial_from_string(const std::string& text) {
    std::vector<Partition::Entry> entries;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, '*')) {
        if (piece.size() < 2 || piece[0] != 'c') {
            throw UsageError("bad monomial factor '" + piece + "'");
        }
        const auto caret = piece.find('^');
        unsigned long part = 0;
        unsigned long mult = 1;
        try {
            part = std::stoul(piece.substr(1, caret == std::string::npos
                                                  ? std::string::npos
                                                  : caret - 1));
            if (caret != std::string::npos) {
                mult = std::stoul(piece.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw UsageError("bad monomial factor '" + piece + "'");
        }
        entries.emplace_back(static_cast<std::uint32_t>(part),
                             static_cast<std::uint32_t>(mult));
    }
    return Partition(std::move(entries));
}

}  // namespace

std::string UniPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [u, coeff] : terms_) {
        Rat abs_coeff = coeff < 0 ? Rat(-coeff) : coeff;
        if (first) {
            out += (coeff < 0 ? "-" : "");
        } else {
            out += (coeff < 0 ? " - " : " + ");
        }
        first = false;
        if (u.empty()) {
            out += rat_to_string(abs_coeff);
        } else {
            out += rat_to_string(abs_coeff) + "*" + monomial_to_string(u);
        }
    }
    return out;
}

UniPoly UniPoly::parse(const std::string& text) {
    if (text == "0") {
        return UniPoly();
    }
    UniPoly result;
    std::stringstream in(text);
    std::string token;
    int sign = 1;
    bool expect_term = true;
    while (in >> token) {
        if (!expect_term) {
            if (token == "+") {
                sign = 1;
            } else if (token == "-") {
                sign = -1;
            } else {
                throw UsageError("bad polynomial text near '" + token + "'");
            }
            expect_term = true;
            continue;
        }
        int term_sign = sign;
        if (token.size() > 1 && token[0] == '-') {
            term_sign = -term_sign;
            token = token.substr(1);
        }
        const auto star = token.find("*c");
        Rat coeff;
        Partition mono;
        if (token[0] == 'c') {
            coeff = 1;
            mono = monomial_from_string(token);
        } else if (star == std::string::npos) {
            coeff = rat_from_string(token);
        } else {
            coeff = rat_from_string(token.substr(0, star));
            mono = monomial_from_string(token.substr(star + 1));
        }
        if (term_sign < 0) {
            coeff = -coeff;
        }
        result.insert_term(mono, coeff);
        expect_term = false;
        sign = 1;
    }
    if (expect_term) {
        throw UsageError("bad polynomial text: '" + text + "'");
    }
    return result;
}

}  // namespace unibern
