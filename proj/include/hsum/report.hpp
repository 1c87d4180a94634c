#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hsum/derivation.hpp"
#include "hsum/kernels.hpp"
#include "hsum/record.hpp"
#include "hsum/theorems.hpp"

namespace hsum {

enum class command {
    verify_theorems,
    verify_kernels,
    verify_relations,
    verify_derivations,
    verify_cv,
    eval,
    bench,
};

enum class output_format { text, json, csv };

struct run_config {
    command cmd = command::verify_theorems;
    long long n_max = 100;
    std::vector<theorem_id> ids;  // empty means all twelve
    long long samples = 500;
    std::uint64_t seed = 42;
    long long num_bound = 10;
    long long den_bound = 10;
    output_format format = output_format::text;
    std::string out;  // empty means the default sink
    unsigned parallel = 1;
    theorem_id eval_id{1, 0};
    long long eval_n = 0;
};

namespace detail {

// Index-sharded worker pool.  Tasks write results into pre-sized slots, so
// the output order is the task order no matter how scheduling interleaves.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (static_cast<std::size_t>(workers) > count) {
        workers = static_cast<unsigned>(count);
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

inline std::vector<theorem_id> ids_or_all(const std::vector<theorem_id>& ids) {
    if (!ids.empty()) return ids;
    return {all_theorem_ids.begin(), all_theorem_ids.end()};
}

}  // namespace detail

// ---- Sweeps ----------------------------------------------------------------
// Every sweep materializes its records in canonical key order; computation
// may be parallel but ordering never depends on it.

inline std::vector<verification_record> sweep_theorems(
    const std::vector<theorem_id>& requested, long long n_max, unsigned parallel) {
    const std::vector<theorem_id> ids = detail::ids_or_all(requested);
    const std::size_t per = static_cast<std::size_t>(n_max) + 1;
    std::vector<verification_record> records(ids.size() * per);
    detail::parallel_for(records.size(), parallel, [&](std::size_t i) {
        records[i] = theorem_verify(ids[i / per], static_cast<long long>(i % per));
    });
    return records;
}

inline std::vector<verification_record> sweep_derivations(
    const std::vector<theorem_id>& requested, long long n_max, unsigned parallel) {
    const std::vector<theorem_id> ids = detail::ids_or_all(requested);
    const std::size_t per = static_cast<std::size_t>(n_max) + 1;
    std::vector<verification_record> records(ids.size() * per);
    detail::parallel_for(records.size(), parallel, [&](std::size_t i) {
        records[i] = derivation_verify(ids[i / per], static_cast<long long>(i % per));
    });
    return records;
}

inline std::vector<verification_record> sweep_relations(long long n_max,
                                                        unsigned parallel) {
    // RelA/RelC sweep the triangle 0 <= k <= n <= n_max (n-major); the
    // single-index relations sweep k = 0..n_max.
    struct task {
        relation rel;
        long long k;
        long long n;
    };
    std::vector<task> tasks;
    for (relation rel : all_relations) {
        if (rel == relation::RelA || rel == relation::RelC) {
            for (long long n = 0; n <= n_max; ++n) {
                for (long long k = 0; k <= n; ++k) tasks.push_back({rel, k, n});
            }
        } else {
            for (long long k = 0; k <= n_max; ++k) tasks.push_back({rel, k, k});
        }
    }
    std::vector<verification_record> records(tasks.size());
    detail::parallel_for(tasks.size(), parallel, [&](std::size_t i) {
        records[i] = relation_check(tasks[i].rel, tasks[i].k, tasks[i].n);
    });
    return records;
}

inline std::vector<verification_record> sweep_kernels(
    long long samples, std::uint64_t seed, long long n_max, long long num_bound,
    long long den_bound, unsigned parallel) {
    // One seeded stream drives all draws, kind-major, so a run is a pure
    // function of (samples, seed, n_max, bounds).  Pole draws are recorded
    // as pole-skipped without counting toward the per-kind sample quota.
    std::mt19937_64 rng(seed);
    auto draw = [&rng](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    struct task {
        weight_kind kind;
        kernel_params<rational> params;
    };
    std::vector<task> tasks;
    for (weight_kind kind : all_weight_kinds) {
        long long verified = 0;
        while (verified < samples) {
            rational a(draw(-num_bound, num_bound), draw(1, den_bound));
            rational b(draw(-num_bound, num_bound), draw(1, den_bound));
            long long n = draw(0, n_max);
            kernel_params<rational> p{a, b, n};
            if (!kernel_pole(kind, p)) ++verified;
            tasks.push_back({kind, std::move(p)});
        }
    }
    std::vector<verification_record> records(tasks.size());
    detail::parallel_for(tasks.size(), parallel, [&](std::size_t i) {
        records[i] = kernel_verify(tasks[i].kind, tasks[i].params);
    });
    return records;
}

inline std::vector<verification_record> sweep_cv(long long samples,
                                                 std::uint64_t seed, long long n_max,
                                                 unsigned parallel) {
    std::mt19937_64 rng(seed);
    auto draw = [&rng](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    struct task {
        rational x;
        rational y;
        long long n;
    };
    std::vector<task> tasks;
    tasks.reserve(static_cast<std::size_t>(samples));
    for (long long s = 0; s < samples; ++s) {
        rational x(draw(-10, 10), draw(1, 10));
        rational y(draw(-10, 10), draw(1, 10));
        tasks.push_back({std::move(x), std::move(y), draw(0, n_max)});
    }
    std::vector<verification_record> records(tasks.size());
    detail::parallel_for(tasks.size(), parallel, [&](std::size_t i) {
        records[i] = cv_check(tasks[i].x, tasks[i].y, tasks[i].n);
    });
    return records;
}

// ---- Emission ---------------------------------------------------------------

namespace detail {

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline nlohmann::ordered_json repr_json(const scalar_repr& repr) {
    if (!repr.has_slope) return repr.value;
    return nlohmann::ordered_json{{"value", repr.value}, {"slope", repr.slope}};
}

}  // namespace detail

inline void emit_records(const std::vector<verification_record>& records,
                         output_format format, std::ostream& sink) {
    if (format == output_format::csv) {
        sink << "check,id,n,lhs,rhs,equal,status,micros\n";
    }
    for (const verification_record& r : records) {
        switch (format) {
            case output_format::text:
                sink << "check=" << to_string(r.check) << " id=" << r.id
                     << " n=" << r.n << " lhs=" << r.lhs.flat()
                     << " rhs=" << r.rhs.flat()
                     << " equal=" << (r.equal ? "true" : "false")
                     << " status=" << to_string(r.status) << " micros=" << r.micros
                     << "\n";
                break;
            case output_format::json: {
                nlohmann::ordered_json j;
                j["check"] = to_string(r.check);
                j["id"] = r.id;
                j["n"] = r.n;
                j["lhs"] = detail::repr_json(r.lhs);
                j["rhs"] = detail::repr_json(r.rhs);
                j["equal"] = r.equal;
                j["status"] = to_string(r.status);
                j["micros"] = r.micros;
                sink << j.dump() << "\n";
                break;
            }
            case output_format::csv:
                sink << detail::csv_escape(to_string(r.check)) << ","
                     << detail::csv_escape(r.id) << "," << r.n << ","
                     << detail::csv_escape(r.lhs.flat()) << ","
                     << detail::csv_escape(r.rhs.flat()) << ","
                     << (r.equal ? "true" : "false") << "," << to_string(r.status)
                     << "," << r.micros << "\n";
                break;
        }
    }
}

// ---- Bench ------------------------------------------------------------------

// Wall time of the direct sums vs the closed forms over n = 0..n_max, plus
// the largest numerator/denominator digit count seen.  Diagnostic only; no
// correctness claims, and timings are inherently run-dependent.
inline void run_bench(long long n_max, std::ostream& sink) {
    using clock = std::chrono::steady_clock;
    for (theorem_id id : all_theorem_ids) {
        std::size_t max_digits = 0;
        auto note = [&max_digits](const rational& v) {
            max_digits = std::max({max_digits, v.numerator().str().size(),
                                   v.denominator().str().size()});
        };
        auto t0 = clock::now();
        for (long long n = 0; n <= n_max; ++n) note(family_lhs(id.family, id.t, n));
        auto t1 = clock::now();
        for (long long n = 0; n <= n_max; ++n) note(theorem_rhs(id, n));
        auto t2 = clock::now();
        auto us = [](auto d) {
            return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
        };
        sink << "bench id=" << to_string(id) << " n_max=" << n_max
             << " lhs_us=" << us(t1 - t0) << " rhs_us=" << us(t2 - t1)
             << " max_digits=" << max_digits << "\n";
    }
}

// ---- Driver -----------------------------------------------------------------

// Executes the configured command, streaming records to `sink` (or to
// config.out when set) and a one-line summary to `diag`.  Exit codes:
// 0 all equal, 1 at least one ok-status inequality, 2 usage/internal error.
inline int run(const run_config& config, std::ostream& sink, std::ostream& diag) {
    std::ofstream file;
    if (!config.out.empty()) {
        file.open(config.out, std::ios::binary);
        if (!file) {
            diag << "error: cannot open output path: " << config.out << "\n";
            return 2;
        }
    }
    std::ostream& out = config.out.empty() ? sink : file;

    const auto start = std::chrono::steady_clock::now();
    std::vector<verification_record> records;
    try {
        switch (config.cmd) {
            case command::verify_theorems:
                records = sweep_theorems(config.ids, config.n_max, config.parallel);
                break;
            case command::verify_kernels:
                records = sweep_kernels(config.samples, config.seed, config.n_max,
                                        config.num_bound, config.den_bound,
                                        config.parallel);
                break;
            case command::verify_relations:
                records = sweep_relations(config.n_max, config.parallel);
                break;
            case command::verify_derivations:
                records =
                    sweep_derivations(config.ids, config.n_max, config.parallel);
                break;
            case command::verify_cv:
                records = sweep_cv(config.samples, config.seed, config.n_max,
                                   config.parallel);
                break;
            case command::eval:
                records.push_back(theorem_verify(config.eval_id, config.eval_n));
                break;
            case command::bench:
                run_bench(config.n_max, out);
                break;
        }
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return 2;
    }

    // bench emits its own diagnostic lines; records stay empty, and the
    // summary below reports zero counts (bench never asserts correctness).
    if (config.cmd != command::bench) {
        emit_records(records, config.format, out);
    }

    long long ok = 0, fail = 0, skipped = 0;
    for (const verification_record& r : records) {
        if (r.status == check_status::pole_skipped) {
            ++skipped;
        } else if (r.equal) {
            ++ok;
        } else {
            ++fail;
        }
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    diag << "summary: ok=" << ok << " fail=" << fail << " pole-skipped=" << skipped
         << " elapsed_us=" << elapsed.count() << "\n";
    return fail > 0 ? 1 : 0;
}

}  // namespace hsum
