#include "unibern/cache.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace unibern {

namespace {

nlohmann::ordered_json partition_to_json(const Partition& u) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [part, mult] : u.entries()) {
        arr.push_back({part, mult});
    }
    return arr;
}

Partition partition_from_json(const nlohmann::json& arr) {
    std::vector<Partition::Entry> entries;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2) {
            throw CacheError("cache: malformed partition entry");
        }
        entries.emplace_back(pair[0].get<std::uint32_t>(), pair[1].get<std::uint32_t>());
    }
    return Partition(std::move(entries));
}

}  // namespace

std::string cache_to_text(const CacheFile& cache) {
    nlohmann::ordered_json doc;
    doc["format"] = CacheFile::kFormatTag;
    doc["max_n"] = cache.max_n;
    doc["method"] = cache.method;
    auto entries = nlohmann::ordered_json::array();
    for (unsigned n = 0; n < cache.entries.size(); ++n) {
        nlohmann::ordered_json entry;
        entry["n"] = n;
        auto terms = nlohmann::ordered_json::array();
        // Term maps iterate in canonical graded-lex order already.
        for (const auto& [u, coeff] : cache.entries[n].terms()) {
            terms.push_back({partition_to_json(u), int_to_string(coeff.get_num()),
                             int_to_string(coeff.get_den())});
        }
        entry["terms"] = terms;
        entries.push_back(entry);
    }
    doc["entries"] = entries;
    return doc.dump(2) + "\n";
}

CacheFile cache_from_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CacheError(std::string("cache: parse failure: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != CacheFile::kFormatTag) {
            throw CacheError("cache: bad format tag");
        }
        CacheFile cache;
        cache.max_n = doc.at("max_n").get<unsigned>();
        cache.method = doc.at("method").get<std::string>();
        const auto& entries = doc.at("entries");
        if (entries.size() != static_cast<std::size_t>(cache.max_n) + 1) {
            throw CacheError("cache: entry count does not match max_n");
        }
        cache.entries.reserve(entries.size());
        for (unsigned n = 0; n < entries.size(); ++n) {
            const auto& entry = entries[n];
            if (entry.at("n").get<unsigned>() != n) {
                throw CacheError("cache: entries out of order");
            }
            UniPoly poly;
            for (const auto& term : entry.at("terms")) {
                if (!term.is_array() || term.size() != 3) {
                    throw CacheError("cache: malformed term");
                }
                const Partition u = partition_from_json(term[0]);
                const Int num = int_from_string(term[1].get<std::string>());
                const Int den = int_from_string(term[2].get<std::string>());
                if (den <= 0) {
                    throw CacheError("cache: nonpositive denominator");
                }
                poly += UniPoly::monomial(u, make_rat(num, den));
            }
            cache.entries.push_back(std::move(poly));
        }
        return cache;
    } catch (const CacheError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheError(std::string("cache: malformed document: ") + e.what());
    }
}

CacheFile load_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CacheError("cache: cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return cache_from_text(buffer.str());
}

void save_cache_atomic(const std::string& path, const CacheFile& cache) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw CacheError("cache: cannot write " + tmp);
        }
        out << cache_to_text(cache);
        if (!out.flush()) {
            throw CacheError("cache: write failure on " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw CacheError("cache: rename failed: " + ec.message());
    }
}

bool cache_roundtrip(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CacheError("cache: cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string original = buffer.str();
    const CacheFile cache = cache_from_text(original);
    return cache_to_text(cache) == original;
}

std::string cache_path_for(const std::string& cache_dir, const std::string& method) {
    return (std::filesystem::path(cache_dir) / ("unibern-cache-" + method + ".json")).string();
}

namespace {

std::vector<UniPoly> compute_fresh(const std::string& method, unsigned max_n,
                                   unsigned long weight_cap) {
    if (method == "reversion") {
        return universal_bernoulli_reversion(max_n, weight_cap);
    }
    if (method == "schur") {
        std::vector<UniPoly> out;
        out.reserve(max_n + 1);
        out.push_back(UniPoly::constant(1));
        for (unsigned n = 1; n <= max_n; ++n) {
            out.push_back(universal_bernoulli_schur(n, weight_cap) * Rat(n));
        }
        return out;
    }
    throw UsageError("unknown method '" + method + "' (expected reversion or schur)");
}

}  // namespace

std::vector<UniPoly> compute_with_cache(const std::string& cache_dir, const std::string& method,
                                        unsigned max_n, unsigned long weight_cap) {
    if (cache_dir.empty()) {
        return compute_fresh(method, max_n, weight_cap);
    }
    std::filesystem::create_directories(cache_dir);
    const std::string path = cache_path_for(cache_dir, method);
    if (std::filesystem::exists(path)) {
        CacheFile cache = load_cache(path);  // corruption propagates as CacheError
        if (cache.method != method) {
            throw CacheError("cache: method tag mismatch in " + path);
        }
        if (cache.max_n >= max_n) {
            cache.entries.resize(max_n + 1);
            return cache.entries;
        }
    }
    CacheFile cache;
    cache.method = method;
    cache.max_n = max_n;
    cache.entries = compute_fresh(method, max_n, weight_cap);
    save_cache_atomic(path, cache);
    return cache.entries;
}

BernoulliProvider make_provider(const std::string& cache_dir, unsigned long weight_cap) {
    BernoulliProvider provider(weight_cap);
    if (!cache_dir.empty()) {
        const std::string path = cache_path_for(cache_dir, "schur");
        if (std::filesystem::exists(path)) {
            const CacheFile cache = load_cache(path);
            for (unsigned n = 1; n < cache.entries.size(); ++n) {
                provider.put(n, cache.entries[n] * make_rat(1, n));
            }
        }
    }
    return provider;
}

}  // namespace unibern
