#pragma once

#include "unibern/bernoulli.hpp"
#include "unibern/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace unibern {

// Corrupt or unreadable on-disk state; maps to exit code 3 at the CLI.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Persistent store of computed B_n polynomials, keyed by method so the two
// pipelines can be cross-validated from disk.
struct CacheFile {
    static constexpr const char* kFormatTag = "unibern-cache-v1";

    std::string method;  // "reversion" | "schur"
    unsigned max_n = 0;
    std::vector<UniPoly> entries;  // index n -> B_n, n = 0..max_n
};

// Canonical serialized form; load + reserialize is byte-identical.
std::string cache_to_text(const CacheFile& cache);
CacheFile cache_from_text(const std::string& text);  // throws CacheError

CacheFile load_cache(const std::string& path);                 // throws CacheError
void save_cache_atomic(const std::string& path, const CacheFile& cache);  // temp + rename

// Parse and reserialize; true iff byte-identical with the file contents.
bool cache_roundtrip(const std::string& path);

std::string cache_path_for(const std::string& cache_dir, const std::string& method);

// B_0..B_max_n by the given method, reusing/extending the on-disk cache when
// cache_dir is nonempty.
std::vector<UniPoly> compute_with_cache(const std::string& cache_dir, const std::string& method,
                                        unsigned max_n, unsigned long weight_cap);

// Provider for B_n/n warmed from the schur cache file when one is present.
BernoulliProvider make_provider(const std::string& cache_dir, unsigned long weight_cap);

}  // namespace unibern
