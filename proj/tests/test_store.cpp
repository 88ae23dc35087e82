#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "unibern.h"
#include "unibern/bernoulli.hpp"
#include "unibern/cache.hpp"

#include <filesystem>
#include <fstream>
#include <string>

using namespace unibern;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("unibern-test-" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

}  // namespace

TEST_CASE("cache round-trip and reload") {
    TempDir dir;
    const auto fresh = compute_with_cache(dir.path.string(), "schur", 8, 64);
    const std::string path = cache_path_for(dir.path.string(), "schur");
    REQUIRE(fs::exists(path));
    CHECK(cache_roundtrip(path));

    // Reloading yields identical polynomials.
    const auto reloaded = compute_with_cache(dir.path.string(), "schur", 8, 64);
    REQUIRE(reloaded.size() == fresh.size());
    for (std::size_t n = 0; n < fresh.size(); ++n) {
        CHECK(reloaded[n] == fresh[n]);
    }

    // A warm cache serves smaller requests without recomputation artifacts.
    const auto smaller = compute_with_cache(dir.path.string(), "schur", 5, 64);
    CHECK(smaller.size() == 6);
    CHECK(smaller[5] == fresh[5]);

    // Cross-method equality through the store.
    const auto rev = compute_with_cache(dir.path.string(), "reversion", 8, 64);
    for (std::size_t n = 0; n < rev.size(); ++n) {
        CHECK(rev[n] == fresh[n]);
    }
}

TEST_CASE("cache corruption is detected") {
    TempDir dir;
    compute_with_cache(dir.path.string(), "schur", 4, 64);
    const std::string path = cache_path_for(dir.path.string(), "schur");

    SUBCASE("truncated file") {
        const std::string text = slurp(path);
        std::ofstream(path, std::ios::binary | std::ios::trunc)
            << text.substr(0, text.size() / 2);
        CHECK_THROWS_AS(load_cache(path), CacheError);
        CHECK_THROWS_AS(compute_with_cache(dir.path.string(), "schur", 4, 64), CacheError);
    }
    SUBCASE("bad format tag") {
        std::string text = slurp(path);
        const auto pos = text.find("unibern-cache-v1");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 16, "unibern-cache-v9");
        std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
        CHECK_THROWS_AS(load_cache(path), CacheError);
    }
    SUBCASE("non-canonical whitespace fails the byte round-trip") {
        std::string text = slurp(path);
        text += "\n";
        std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
        CHECK_FALSE(cache_roundtrip(path));
    }
}

TEST_CASE("make_provider warms from the schur cache") {
    TempDir dir;
    const auto fresh = compute_with_cache(dir.path.string(), "schur", 6, 64);
    auto provider = make_provider(dir.path.string(), 64);
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(provider.has(n));
        CHECK(provider.over_n(n) * Rat(static_cast<long>(n)) == fresh[n]);
    }
    CHECK_FALSE(provider.has(7));
}

TEST_CASE("C API basics") {
    ub_context* ctx = ub_context_new();
    REQUIRE(ctx != nullptr);

    char* out = nullptr;
    CHECK(ub_compute(ctx, 2, "schur", &out) == UB_OK);
    REQUIRE(out != nullptr);
    CHECK(std::string(out) == "B_0 = 1\nB_1 = 1/2*c1\nB_2 = -1/2*c1^2 + 2/3*c2\n");
    ub_string_free(out);

    CHECK(ub_compute(ctx, 2, "newton", &out) == UB_EUSAGE);
    CHECK(std::string(ub_context_last_error(ctx)).find("method") != std::string::npos);

    CHECK(ub_verify_kummer(ctx, 4, 1, 1, 3, 5, &out) == UB_EUSAGE);
    CHECK(ub_context_set_jobs(ctx, 0) == UB_EUSAGE);
    CHECK(ub_context_set_weight_cap(ctx, 0) == UB_EUSAGE);

    CHECK(ub_verify_kummer(ctx, 5, 2, 2, 3, 7, &out) == UB_OK);
    REQUIRE(out != nullptr);
    CHECK(std::string(out).find("verdict=pass") != std::string::npos);
    ub_string_free(out);

    CHECK(ub_witness(ctx, 7, &out) == UB_OK);
    CHECK(std::string(out) == "witness p=7 U=1:7,13:1 ord=1 bound=1\n");
    ub_string_free(out);

    CHECK(ub_tau(ctx, "2:1", 0, &out) == UB_OK);
    CHECK(std::string(out).find("1/3") != std::string::npos);
    ub_string_free(out);

    const long primes[] = {3};
    CHECK(ub_conjecture(ctx, primes, 1, 2, 9, &out) == UB_OK);
    ub_string_free(out);
    const long even[] = {2};
    CHECK(ub_conjecture(ctx, even, 1, 2, 9, &out) == UB_EUSAGE);

    ub_context_free(ctx);
}

TEST_CASE("C API store errors map to UB_ESTORE") {
    TempDir dir;
    ub_context* ctx = ub_context_new();
    ub_context_set_cache_dir(ctx, dir.path.string().c_str());

    char* out = nullptr;
    CHECK(ub_compute(ctx, 4, "schur", &out) == UB_OK);
    ub_string_free(out);

    const std::string path = cache_path_for(dir.path.string(), "schur");
    CHECK(ub_cache_roundtrip(ctx, path.c_str()) == UB_OK);

    std::string text = slurp(path);
    std::ofstream(path, std::ios::binary | std::ios::trunc) << text.substr(0, text.size() / 3);
    CHECK(ub_cache_roundtrip(ctx, path.c_str()) == UB_ESTORE);
    CHECK(ub_compute(ctx, 4, "schur", &out) == UB_ESTORE);
    CHECK(std::string(ub_context_last_error(ctx)).find("cache") != std::string::npos);

    ub_context_free(ctx);
}

TEST_CASE("verify output is independent of the jobs setting") {
    ub_context* one = ub_context_new();
    ub_context* eight = ub_context_new();
    ub_context_set_jobs(one, 1);
    ub_context_set_jobs(eight, 8);

    char* out1 = nullptr;
    char* out8 = nullptr;
    CHECK(ub_verify_kummer(one, 5, 1, 3, 2, 10, &out1) == UB_OK);
    CHECK(ub_verify_kummer(eight, 5, 1, 3, 2, 10, &out8) == UB_OK);
    CHECK(std::string(out1) == std::string(out8));
    ub_string_free(out1);
    ub_string_free(out8);

    CHECK(ub_verify_lemma321(one, 3, 3, 2, 20, &out1) == UB_OK);
    CHECK(ub_verify_lemma321(eight, 3, 3, 2, 20, &out8) == UB_OK);
    CHECK(std::string(out1) == std::string(out8));
    ub_string_free(out1);
    ub_string_free(out8);

    ub_context_free(one);
    ub_context_free(eight);
}
