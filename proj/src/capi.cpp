#include "unibern.h"

#include "unibern/bernoulli.hpp"
#include "unibern/cache.hpp"
#include "unibern/congruence.hpp"
#include "unibern/lemmas.hpp"
#include "unibern/parallel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <cstring>
#include <string>
#include <vector>

using namespace unibern;

struct ub_context {
    unsigned long weight_cap = kDefaultWeightCap;
    std::string cache_dir;
    unsigned jobs = 1;
    bool records = false;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int run(ub_context* ctx, char** out, const std::function<int(std::string&)>& body) {
    if (ctx == nullptr) {
        return UB_EUSAGE;
    }
    ctx->last_error.clear();
    if (out != nullptr) {
        *out = nullptr;
    }
    try {
        std::string text;
        const int status = body(text);
        if (out != nullptr) {
            *out = dup_string(text);
        }
        return status;
    } catch (const CacheError& e) {
        ctx->last_error = e.what();
        return UB_ESTORE;
    } catch (const UsageError& e) {
        ctx->last_error = e.what();
        return UB_EUSAGE;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return UB_EUSAGE;
    }
}

void append_line(std::string& text, const std::string& line) {
    text += line;
    text += '\n';
}

void emit_report(std::string& text, bool records, const CongruenceReport& report) {
    append_line(text, records ? report.to_record() : report.to_text());
}

void emit_instance(std::string& text, bool records, const LemmaInstance& inst) {
    append_line(text, records ? inst.to_record() : inst.to_text());
}

// Computes missing Schur values in parallel, then installs them in order.
void warm_provider(BernoulliProvider& provider, std::vector<unsigned> indices, unsigned jobs) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    indices.erase(std::remove_if(indices.begin(), indices.end(),
                                 [&](unsigned n) { return n == 0 || provider.has(n); }),
                  indices.end());
    std::vector<UniPoly> values(indices.size());
    parallel_for(indices.size(), jobs, [&](std::size_t i) {
        values[i] = universal_bernoulli_schur(indices[i], provider.weight_cap());
    });
    for (std::size_t i = 0; i < indices.size(); ++i) {
        provider.put(indices[i], values[i]);
    }
}

int status_from_reports(const std::vector<CongruenceReport>& reports) {
    for (const auto& report : reports) {
        if (!report.ok()) {
            return UB_FAIL;
        }
    }
    return UB_OK;
}

nlohmann::ordered_json poly_record(const char* kind, unsigned n, const UniPoly& poly) {
    nlohmann::ordered_json rec;
    rec["kind"] = kind;
    rec["n"] = n;
    rec["poly"] = poly.to_string();
    return rec;
}

}  // namespace

extern "C" {

ub_context* ub_context_new(void) {
    auto* ctx = new ub_context();
    if (const char* dir = std::getenv("UNIBERN_CACHE_DIR")) {
        ctx->cache_dir = dir;
    }
    return ctx;
}

void ub_context_free(ub_context* ctx) {
    delete ctx;
}

int ub_context_set_weight_cap(ub_context* ctx, unsigned long cap) {
    if (ctx == nullptr || cap == 0) {
        return UB_EUSAGE;
    }
    ctx->weight_cap = cap;
    return UB_OK;
}

int ub_context_set_cache_dir(ub_context* ctx, const char* dir) {
    if (ctx == nullptr) {
        return UB_EUSAGE;
    }
    ctx->cache_dir = dir == nullptr ? "" : dir;
    return UB_OK;
}

int ub_context_set_jobs(ub_context* ctx, unsigned jobs) {
    if (ctx == nullptr || jobs == 0) {
        return UB_EUSAGE;
    }
    ctx->jobs = jobs;
    return UB_OK;
}

int ub_context_set_records(ub_context* ctx, int records) {
    if (ctx == nullptr) {
        return UB_EUSAGE;
    }
    ctx->records = records != 0;
    return UB_OK;
}

const char* ub_context_last_error(const ub_context* ctx) {
    return ctx == nullptr ? "" : ctx->last_error.c_str();
}

void ub_string_free(char* s) {
    std::free(s);
}

int ub_compute(ub_context* ctx, unsigned max_n, const char* method, char** out) {
    return run(ctx, out, [&](std::string& text) {
        const std::string m = method == nullptr ? "" : method;
        if (m != "reversion" && m != "schur" && m != "both") {
            throw UsageError("method must be reversion, schur, or both");
        }
        std::vector<UniPoly> polys;
        bool agree = true;
        unsigned first_mismatch = 0;
        if (m == "both") {
            const auto by_reversion =
                compute_with_cache(ctx->cache_dir, "reversion", max_n, ctx->weight_cap);
            const auto by_schur =
                compute_with_cache(ctx->cache_dir, "schur", max_n, ctx->weight_cap);
            for (unsigned n = 0; n <= max_n; ++n) {
                if (by_reversion[n] != by_schur[n]) {
                    agree = false;
                    first_mismatch = n;
                    break;
                }
            }
            polys = by_schur;
        } else {
            polys = compute_with_cache(ctx->cache_dir, m, max_n, ctx->weight_cap);
        }
        for (unsigned n = 0; n <= max_n; ++n) {
            if (ctx->records) {
                append_line(text, poly_record("bernoulli", n, polys[n]).dump());
            } else {
                append_line(text, "B_" + std::to_string(n) + " = " + polys[n].to_string());
            }
        }
        if (m == "both") {
            append_line(text, agree ? "methods agree"
                                    : "METHOD MISMATCH at n=" + std::to_string(first_mismatch));
        }
        return agree ? UB_OK : UB_FAIL;
    });
}

int ub_verify_kummer(ub_context* ctx, long p, long a_lo, long a_hi, long n_lo, long n_hi,
                     char** out) {
    return run(ctx, out, [&](std::string& text) {
        require_odd_prime(p);
        if (a_lo < 1 || a_lo > a_hi || n_lo < 1 || n_lo > n_hi) {
            throw UsageError("kummer: bad a/n ranges");
        }
        auto provider = make_provider(ctx->cache_dir, ctx->weight_cap);
        std::vector<unsigned> needed;
        struct Tuple {
            long a, n;
        };
        std::vector<Tuple> tuples;
        for (long a = a_lo; a <= a_hi; ++a) {
            for (long n = n_lo; n <= n_hi; ++n) {
                tuples.push_back({a, n});
                if (n > a && n % (p - 1) != 0) {
                    for (long r = 0; r <= a; ++r) {
                        needed.push_back(static_cast<unsigned>(n + r * (p - 1)));
                    }
                }
            }
        }
        warm_provider(provider, needed, ctx->jobs);
        std::vector<CongruenceReport> reports(tuples.size());
        parallel_for(tuples.size(), ctx->jobs, [&](std::size_t i) {
            reports[i] = kummer_check(provider, p, tuples[i].a, tuples[i].n);
        });
        for (const auto& report : reports) {
            emit_report(text, ctx->records, report);
        }
        return status_from_reports(reports);
    });
}

int ub_verify_adelberg(ub_context* ctx, long p, long a_lo, long a_hi, long n_lo, long n_hi,
                       char** out) {
    return run(ctx, out, [&](std::string& text) {
        require_odd_prime(p);
        if (a_lo < 1 || a_lo > a_hi || n_lo < 1 || n_lo > n_hi) {
            throw UsageError("adelberg: bad a/n ranges");
        }
        auto provider = make_provider(ctx->cache_dir, ctx->weight_cap);
        std::vector<CongruenceReport> reports;
        for (long a = a_lo; a <= a_hi; ++a) {
            for (long n = n_lo; n <= n_hi; ++n) {
                reports.push_back(adelberg_check(provider, p, a, n));
            }
        }
        for (const auto& report : reports) {
            emit_report(text, ctx->records, report);
        }
        return status_from_reports(reports);
    });
}

int ub_verify_clarke(ub_context* ctx, long n_lo, long n_hi, char** out) {
    return run(ctx, out, [&](std::string& text) {
        if (n_lo < 1 || n_lo > n_hi) {
            throw UsageError("clarke: bad n range");
        }
        auto provider = make_provider(ctx->cache_dir, ctx->weight_cap);
        std::vector<unsigned> needed;
        for (long n = n_lo; n <= n_hi; ++n) {
            needed.push_back(static_cast<unsigned>(n));
        }
        warm_provider(provider, needed, ctx->jobs);
        std::vector<CongruenceReport> reports;
        for (long n = n_lo; n <= n_hi; ++n) {
            reports.push_back(clarke_check(provider, static_cast<unsigned>(n)));
        }
        for (const auto& report : reports) {
            emit_report(text, ctx->records, report);
        }
        return status_from_reports(reports);
    });
}

int ub_verify_lemma331(ub_context* ctx, long p, long max_weight, char** out) {
    return run(ctx, out, [&](std::string& text) {
        if (max_weight < 1 || static_cast<unsigned long>(max_weight) > ctx->weight_cap) {
            throw UsageError("lemma331: max_weight out of range");
        }
        const auto report = lemma331_sweep(p, static_cast<unsigned long>(max_weight));
        emit_report(text, ctx->records, report);
        return report.ok() ? UB_OK : UB_FAIL;
    });
}

int ub_verify_lemma321(ub_context* ctx, long p, long a_max, long q_max, long n_max, char** out) {
    return run(ctx, out, [&](std::string& text) {
        require_odd_prime(p);
        if (a_max < 0 || q_max < 0 || n_max < 0) {
            throw UsageError("lemma321: ranges must be nonnegative");
        }
        struct Tuple {
            long a, q, n;
        };
        std::vector<Tuple> tuples;
        for (long a = 0; a <= a_max; ++a) {
            for (long q = 0; q <= q_max; ++q) {
                for (long n = 0; n <= n_max; ++n) {
                    tuples.push_back({a, q, n});
                }
            }
        }
        std::vector<LemmaInstance> instances(tuples.size());
        parallel_for(tuples.size(), ctx->jobs, [&](std::size_t i) {
            instances[i] = lemma321_sum(p, tuples[i].a, tuples[i].q, tuples[i].n);
        });
        int status = UB_OK;
        for (const auto& inst : instances) {
            emit_instance(text, ctx->records, inst);
            if (!inst.ok()) {
                status = UB_FAIL;
            }
        }
        return status;
    });
}

int ub_verify_binomval(ub_context* ctx, long p, long a_lo, long a_hi, char** out) {
    return run(ctx, out, [&](std::string& text) {
        if (a_lo < 2 || a_lo > a_hi) {
            throw UsageError("binomval: bad a range (a >= 2)");
        }
        std::vector<CongruenceReport> reports;
        for (long a = a_lo; a <= a_hi; ++a) {
            reports.push_back(binom_valuation_check(p, a));
        }
        for (const auto& report : reports) {
            emit_report(text, ctx->records, report);
        }
        return status_from_reports(reports);
    });
}

int ub_conjecture(ub_context* ctx, const long* primes, size_t n_primes, long a_max, long n_max,
                  char** out) {
    return run(ctx, out, [&](std::string& text) {
        std::vector<long> prime_list(primes, primes + n_primes);
        const auto summary =
            conjecture_sweep(prime_list, a_max, n_max, ctx->jobs,
                             [&](const LemmaInstance& inst) {
                                 emit_instance(text, ctx->records, inst);
                             });
        if (ctx->records) {
            nlohmann::ordered_json rec;
            rec["kind"] = "sweep-summary";
            rec["instances"] = summary.instances;
            if (summary.min_margin) {
                rec["min_margin"] = *summary.min_margin;
            }
            rec["counterexamples"] = summary.counterexamples.size();
            append_line(text, rec.dump());
        } else {
            std::string line = "sweep instances=" + std::to_string(summary.instances);
            if (summary.min_margin) {
                line += " min_margin=" + std::to_string(*summary.min_margin);
                line += " at " + summary.min_instance->to_text();
            }
            line += " counterexamples=" + std::to_string(summary.counterexamples.size());
            append_line(text, line);
        }
        for (const auto& cex : summary.counterexamples) {
            append_line(text, "COUNTEREXAMPLE: " + cex.to_text());
        }
        return summary.ok() ? UB_OK : UB_FAIL;
    });
}

int ub_tau(ub_context* ctx, const char* partition, long p, char** out) {
    return run(ctx, out, [&](std::string& text) {
        if (partition == nullptr) {
            throw UsageError("tau: missing partition");
        }
        const Partition u = Partition::parse(partition);
        const Rat tau = tau_U(u);
        if (ctx->records) {
            nlohmann::ordered_json rec;
            rec["kind"] = "tau";
            rec["partition"] = u.to_string();
            rec["weight"] = u.weight();
            rec["degree"] = u.degree();
            rec["tau"] = rat_to_string(tau);
            if (p > 0) {
                rec["p"] = p;
                rec["ord"] = ord_p_rat(tau, p);
            }
            append_line(text, rec.dump());
        } else {
            std::string line = "tau(" + u.to_string() + ") = " + rat_to_string(tau) +
                               " (w=" + std::to_string(u.weight()) +
                               ", d=" + std::to_string(u.degree()) + ")";
            if (p > 0) {
                line += " ord_" + std::to_string(p) + "=" + std::to_string(ord_p_rat(tau, p));
            }
            append_line(text, line);
        }
        return UB_OK;
    });
}

int ub_witness(ub_context* ctx, long p, char** out) {
    return run(ctx, out, [&](std::string& text) {
        const auto w = sharpness_witness(p);
        if (ctx->records) {
            nlohmann::ordered_json rec;
            rec["kind"] = "witness";
            rec["p"] = p;
            rec["partition"] = w.u.to_string();
            rec["ord"] = w.ord;
            rec["bound"] = w.bound;
            append_line(text, rec.dump());
        } else {
            append_line(text, "witness p=" + std::to_string(p) + " U=" + w.u.to_string() +
                                  " ord=" + std::to_string(w.ord) +
                                  " bound=" + std::to_string(w.bound));
        }
        return UB_OK;
    });
}

int ub_cache_roundtrip(ub_context* ctx, const char* path) {
    return run(ctx, nullptr, [&](std::string&) {
        if (path == nullptr) {
            throw UsageError("cache_roundtrip: missing path");
        }
        if (!cache_roundtrip(path)) {
            throw CacheError("cache file is not in canonical form: " + std::string(path));
        }
        return UB_OK;
    });
}

}  // extern "C"
