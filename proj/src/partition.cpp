#include "unibern/partition.hpp"

#include <algorithm>
#include <sstream>

namespace unibern {

namespace {

void recompute(const std::vector<Partition::Entry>& entries, unsigned long& weight,
               unsigned long& degree) {
    weight = 0;
    degree = 0;
    for (const auto& [part, mult] : entries) {
        weight += static_cast<unsigned long>(part) * mult;
        degree += mult;
    }
}

}  // namespace

Partition::Partition(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    for (const auto& [part, mult] : entries) {
        if (part == 0) {
            throw UsageError("Partition: part indices start at 1");
        }
        if (mult == 0) {
            continue;
        }
        if (!entries_.empty() && entries_.back().first == part) {
            entries_.back().second += mult;
        } else {
            entries_.emplace_back(part, mult);
        }
    }
    recompute(entries_, weight_, degree_);
}

Partition Partition::parse(const std::string& text) {
    std::vector<Entry> entries;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw UsageError("bad partition entry '" + item + "' (expected j:m)");
        }
        unsigned long part = 0;
        unsigned long mult = 0;
        try {
            part = std::stoul(item.substr(0, colon));
            mult = std::stoul(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw UsageError("bad partition entry '" + item + "' (expected j:m)");
        }
        if (part == 0) {
            throw UsageError("bad partition entry '" + item + "': part index must be >= 1");
        }
        entries.emplace_back(static_cast<std::uint32_t>(part), static_cast<std::uint32_t>(mult));
    }
    return Partition(std::move(entries));
}

std::string Partition::to_string() const {
    std::string out;
    for (const auto& [part, mult] : entries_) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(part) + ":" + std::to_string(mult);
    }
    return out;
}

std::uint32_t Partition::multiplicity(std::uint32_t part) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), part,
                                     [](const Entry& e, std::uint32_t p) { return e.first < p; });
    if (it != entries_.end() && it->first == part) {
        return it->second;
    }
    return 0;
}

Partition Partition::with_part_added(std::uint32_t part, std::uint32_t count) const {
    if (part == 0) {
        throw UsageError("with_part_added: part index must be >= 1");
    }
    if (count == 0) {
        return *this;
    }
    auto entries = entries_;
    entries.emplace_back(part, count);
    return Partition(std::move(entries));
}

Partition Partition::without_part(std::uint32_t part) const {
    std::vector<Entry> entries;
    entries.reserve(entries_.size());
    for (const auto& e : entries_) {
        if (e.first != part) {
            entries.push_back(e);
        }
    }
    return Partition(std::move(entries));
}

Partition Partition::merged_with(const Partition& other) const {
    auto entries = entries_;
    entries.insert(entries.end(), other.entries_.begin(), other.entries_.end());
    return Partition(std::move(entries));
}

bool Partition::precedes(const Partition& a, const Partition& b) {
    if (a.degree_ != b.degree_) {
        return a.degree_ > b.degree_;
    }
    // Equal degree: walk exponents from part 1 upward; the larger exponent at
    // the first differing part wins.
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
        if (ia->first != ib->first) {
            // The side whose next entry has the smaller part index has a
            // nonzero exponent where the other has zero.
            return ia->first < ib->first;
        }
        if (ia->second != ib->second) {
            return ia->second > ib->second;
        }
        ++ia;
        ++ib;
    }
    return ia != a.entries_.end();
}

std::vector<Partition> partitions_of_weight(unsigned long n,
                                            const std::set<std::uint32_t>& forbidden_parts,
                                            unsigned long weight_cap) {
    if (n > weight_cap) {
        throw UsageError("partition weight " + std::to_string(n) + " exceeds weight cap " +
                         std::to_string(weight_cap));
    }
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }

    // Iterative DFS over descending part lists; each frame owns at most one
    // currently chosen part.
    struct Frame {
        unsigned long rem;
        std::uint32_t next;
        bool chosen = false;
    };
    std::vector<std::uint32_t> parts;
    std::vector<Frame> stack;
    stack.push_back({n, static_cast<std::uint32_t>(n)});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.chosen) {
            parts.pop_back();
            f.chosen = false;
        }
        std::uint32_t p = static_cast<std::uint32_t>(std::min<unsigned long>(f.next, f.rem));
        while (p >= 1 && forbidden_parts.count(p) != 0) {
            --p;
        }
        if (p == 0) {
            stack.pop_back();
            continue;
        }
        f.next = p - 1;
        f.chosen = true;
        parts.push_back(p);
        if (f.rem == p) {
            std::vector<Partition::Entry> entries;
            for (const auto part : parts) {
                if (!entries.empty() && entries.back().first == part) {
                    ++entries.back().second;
                } else {
                    entries.emplace_back(part, 1);
                }
            }
            out.emplace_back(std::move(entries));
        } else {
            const unsigned long rem = f.rem - p;
            stack.push_back({rem, p});
        }
    }

    // Ascending graded-lex: exact reverse of the serialization order.
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return Partition::precedes(b, a);
    });
    return out;
}

void for_each_partition(unsigned long n, const std::set<std::uint32_t>& forbidden_parts,
                        const std::function<void(const Partition&)>& fn,
                        unsigned long weight_cap) {
    for (const auto& u : partitions_of_weight(n, forbidden_parts, weight_cap)) {
        fn(u);
    }
}

Int lambda_U(const Partition& u) {
    Int result = 1;
    for (const auto& [part, mult] : u.entries()) {
        Int base = static_cast<unsigned long>(part) + 1;
        Int power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), mult);
        result *= power;
    }
    return result;
}

Int u_factorial(const Partition& u) {
    Int result = 1;
    for (const auto& [part, mult] : u.entries()) {
        result *= factorial(mult);
    }
    return result;
}

Int multinomial(unsigned long d, const Partition& u) {
    if (d != u.degree()) {
        throw UsageError("multinomial: d must equal degree(U)");
    }
    Int result = factorial(d) / u_factorial(u);
    return result;
}

Int gamma_U(const Partition& u) {
    return lambda_U(u) * u_factorial(u);
}

Rat tau_U(const Partition& u) {
    if (u.degree() == 0) {
        throw UsageError("tau_U: requires degree(U) >= 1");
    }
    const unsigned long top = u.weight() + u.degree() - 2;
    Rat value = make_rat(factorial(top), gamma_U(u));
    if (u.degree() % 2 == 0) {
        value = -value;
    }
    return value;
}

}  // namespace unibern
