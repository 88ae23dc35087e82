// unibern: universal Bernoulli numbers and their congruences.
#include "unibern.h"

#include "CLI11.hpp"

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Range {
    long lo = 0;
    long hi = 0;
};

// "--n 7" or "--n 3..12"
Range parse_range(const std::string& text) {
    Range r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stol(text);
        } else {
            r.lo = std::stol(text.substr(0, dots));
            r.hi = std::stol(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected an integer or a range lo..hi, got '" + text + "'");
    }
    return r;
}

struct ContextDeleter {
    void operator()(ub_context* ctx) const { ub_context_free(ctx); }
};

int finish(ub_context* ctx, int status, char* out) {
    if (out != nullptr) {
        std::fputs(out, stdout);
        ub_string_free(out);
    }
    if (status == UB_EUSAGE || status == UB_ESTORE) {
        std::fprintf(stderr, "unibern: %s\n", ub_context_last_error(ctx));
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal Bernoulli numbers: exact computation and congruence checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir;
    unsigned jobs = 1;
    unsigned long weight_cap = 0;
    std::string out_format = "text";
    app.add_option("--cache-dir", cache_dir, "Cache directory (default: $UNIBERN_CACHE_DIR)");
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--weight-cap", weight_cap, "Partition weight cap")->check(CLI::PositiveNumber);
    app.add_option("--out", out_format, "Report format")
        ->check(CLI::IsMember({"text", "records"}));

    unsigned max_n = 0;
    std::string method = "schur";
    auto* compute = app.add_subcommand("compute", "Compute B_0..B_max_n");
    compute->add_option("--max-n", max_n, "Largest index")->required();
    compute->add_option("--method", method, "Computation method")
        ->check(CLI::IsMember({"reversion", "schur", "both"}));

    long p = 0;
    std::string a_range = "1..1";
    std::string n_range;
    long max_weight = 20;
    long a_max = 0;
    long q_max = 0;
    long n_max = 0;
    auto* verify = app.add_subcommand("verify", "Check a congruence over a parameter range");
    std::string check;
    verify->add_option("check", check, "kummer|adelberg|clarke|lemma331|lemma321|binomval")
        ->required();
    verify->add_option("--p", p, "Prime p");
    verify->add_option("--a", a_range, "Power a (single or lo..hi)");
    verify->add_option("--n", n_range, "Index n (single or lo..hi)");
    verify->add_option("--max-weight", max_weight, "Partition weight bound (lemma331)");
    verify->add_option("--a-max", a_max, "Largest a (lemma321)");
    verify->add_option("--q-max", q_max, "Largest q (lemma321)");
    verify->add_option("--n-max", n_max, "Largest n (lemma321)");

    std::vector<long> primes;
    auto* conjecture = app.add_subcommand("conjecture", "Sweep the conjectural factorial sum");
    conjecture->add_option("--p", primes, "Odd primes (comma-separated)")
        ->required()
        ->delimiter(',');
    conjecture->add_option("--a-max", a_max, "Largest a")->required();
    conjecture->add_option("--n-max", n_max, "Largest n")->required();

    std::string partition;
    auto* tau = app.add_subcommand("tau", "Print tau_U for a partition");
    tau->add_option("--partition", partition, "Partition as j1:m1,j2:m2,...")->required();
    tau->add_option("--p", p, "Also report ord_p");

    auto* witness = app.add_subcommand("witness", "Sharpness witness partition for p >= 7");
    witness->add_option("--p", p, "Odd prime p >= 7")->required();

    std::string path;
    bool cross_check = false;
    auto* cache_check = app.add_subcommand("cache-check", "Validate a cache file");
    cache_check->add_option("--path", path, "Cache file to round-trip")->required();
    cache_check->add_flag("--cross-check", cross_check,
                          "Also recompute by both methods and compare (needs --max-n)");
    cache_check->add_option("--max-n", max_n, "Largest index for --cross-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : UB_EUSAGE;
    }

    std::unique_ptr<ub_context, ContextDeleter> ctx(ub_context_new());
    if (!cache_dir.empty()) {
        ub_context_set_cache_dir(ctx.get(), cache_dir.c_str());
    }
    if (weight_cap != 0) {
        ub_context_set_weight_cap(ctx.get(), weight_cap);
    }
    ub_context_set_jobs(ctx.get(), jobs);
    ub_context_set_records(ctx.get(), out_format == "records" ? 1 : 0);

    char* out = nullptr;
    if (compute->parsed()) {
        const int status = ub_compute(ctx.get(), max_n, method.c_str(), &out);
        return finish(ctx.get(), status, out);
    }
    if (verify->parsed()) {
        int status;
        if (check == "kummer" || check == "adelberg") {
            if (n_range.empty()) {
                std::fprintf(stderr, "unibern: verify %s requires --n\n", check.c_str());
                return UB_EUSAGE;
            }
            const Range a = parse_range(a_range);
            const Range n = parse_range(n_range);
            status = check == "kummer"
                         ? ub_verify_kummer(ctx.get(), p, a.lo, a.hi, n.lo, n.hi, &out)
                         : ub_verify_adelberg(ctx.get(), p, a.lo, a.hi, n.lo, n.hi, &out);
        } else if (check == "clarke") {
            if (n_range.empty()) {
                std::fprintf(stderr, "unibern: verify clarke requires --n\n");
                return UB_EUSAGE;
            }
            const Range n = parse_range(n_range);
            status = ub_verify_clarke(ctx.get(), n.lo, n.hi, &out);
        } else if (check == "lemma331") {
            status = ub_verify_lemma331(ctx.get(), p, max_weight, &out);
        } else if (check == "lemma321") {
            status = ub_verify_lemma321(ctx.get(), p, a_max, q_max, n_max, &out);
        } else if (check == "binomval") {
            const Range a = parse_range(a_range);
            status = ub_verify_binomval(ctx.get(), p, a.lo, a.hi, &out);
        } else {
            std::fprintf(stderr, "unibern: unknown check '%s'\n", check.c_str());
            return UB_EUSAGE;
        }
        return finish(ctx.get(), status, out);
    }
    if (conjecture->parsed()) {
        const int status =
            ub_conjecture(ctx.get(), primes.data(), primes.size(), a_max, n_max, &out);
        return finish(ctx.get(), status, out);
    }
    if (tau->parsed()) {
        const int status = ub_tau(ctx.get(), partition.c_str(), p, &out);
        return finish(ctx.get(), status, out);
    }
    if (witness->parsed()) {
        const int status = ub_witness(ctx.get(), p, &out);
        return finish(ctx.get(), status, out);
    }
    if (cache_check->parsed()) {
        const int status = ub_cache_roundtrip(ctx.get(), path.c_str());
        if (status != UB_OK) {
            return finish(ctx.get(), status, nullptr);
        }
        std::puts("cache ok");
        if (cross_check) {
            const int cross_status = ub_compute(ctx.get(), max_n, "both", &out);
            return finish(ctx.get(), cross_status, out);
        }
        return UB_OK;
    }
    return UB_EUSAGE;
}
