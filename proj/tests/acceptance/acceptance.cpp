// Acceptance gate: one self-contained binary, one PASS/FAIL line per
// criterion, exit 0 only if every criterion passes.  argv[1] must be the
// path to the hsum CLI (used by the determinism criterion).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <hsum/hsum.hpp>

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
              << detail << std::endl;
}

bool all_ok(const std::vector<hsum::verification_record>& records) {
    for (const auto& r : records) {
        if (!(r.equal && r.status == hsum::check_status::ok)) return false;
    }
    return true;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// 1. Every closed form equals its direct sum for 0 <= n <= 500, single
//    worker, within a 60 s budget.
void criterion_theorem_sweep() {
    const auto start = std::chrono::steady_clock::now();
    auto records = hsum::sweep_theorems({}, 500, 1);
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "theorem sweep: " << records.size() << " records, n<=500, "
           << "elapsed=" << elapsed << "s";
    report(1, all_ok(records) && records.size() == 12 * 501 && elapsed <= 60.0,
           detail.str());
}

// 2. Frozen spot values, each re-derived by the direct summer before the
//    comparison against the fixture constant.
void criterion_spot_values() {
    struct spot {
        const char* id;
        long long n;
        hsum::rational expected;
    };
    using hsum::rational;
    const spot table[] = {
        {"f1t0", 1, rational(-3)},      {"f1t1", 1, rational(-3)},
        {"f1t2", 1, rational(-3)},      {"f2t0", 0, rational(1)},
        {"f2t1", 1, rational(-22, 9)},  {"f2t2", 1, rational(-22, 9)},
        {"f3t0", 2, rational(-23, 32)}, {"f3t1", 1, rational(-3, 4)},
        {"f3t2", 1, rational(-3, 4)},   {"f4t0", 1, rational(-3, 8)},
        {"f4t1", 1, rational(-11, 8)},  {"f4t2", 1, rational(-11, 8)},
    };
    int good = 0;
    for (const spot& s : table) {
        auto id = hsum::parse_theorem_id(s.id);
        if (!id) continue;
        hsum::rational direct = hsum::family_lhs(id->family, id->t, s.n);
        if (direct == s.expected && hsum::theorem_rhs(*id, s.n) == s.expected) {
            ++good;
        }
    }
    std::ostringstream detail;
    detail << "spot values: " << good << "/12 fixtures match both sides";
    report(2, good == 12, detail.str());
}

// 3. >= 500 non-pole samples per weight kind, |num|<=10, den<=10, n<=30;
//    every non-pole sample equal, every pole sample skipped (never failed).
void criterion_kernel_sampling() {
    auto records = hsum::sweep_kernels(500, 42, 30, 10, 10, 2);
    long long verified[9] = {};
    long long skipped = 0;
    bool clean = true;
    for (const auto& r : records) {
        if (r.status == hsum::check_status::pole_skipped) {
            ++skipped;
            continue;
        }
        if (!(r.equal && r.status == hsum::check_status::ok)) {
            clean = false;
            continue;
        }
        for (std::size_t i = 0; i < 9; ++i) {
            const std::string prefix =
                to_string(hsum::all_weight_kinds[i]) + "(";
            if (r.id.compare(0, prefix.size(), prefix) == 0) {
                ++verified[i];
                break;
            }
        }
    }
    long long min_verified = verified[0];
    for (long long v : verified) min_verified = std::min(min_verified, v);
    std::ostringstream detail;
    detail << "kernel sampling: min " << min_verified
           << " verified per kind (need 500), " << skipped << " pole-skipped";
    report(3, clean && min_verified >= 500, detail.str());
}

// 4. Base convolution at 500 random rational (x, y), n <= 30.
void criterion_cv_base() {
    auto records = hsum::sweep_cv(500, 42, 30, 2);
    std::ostringstream detail;
    detail << "base convolution: " << records.size() << " random samples";
    report(4, all_ok(records) && records.size() == 500, detail.str());
}

// 5. Dual slope of C(x, s) at integer x = r equals C(r,s)(H_r - H_{r-s}),
//    exhaustively for 0 <= s <= r <= 100.
void criterion_derivative_relation() {
    long long checked = 0;
    bool clean = true;
    for (long long r = 0; r <= 100 && clean; ++r) {
        for (long long s = 0; s <= r && clean; ++s) {
            hsum::dual value = hsum::gen_binom(
                hsum::affine(hsum::rational(r), hsum::rational(1)), s);
            hsum::rational expected =
                hsum::binom(r, s) * (hsum::harmonic(r) - hsum::harmonic(r - s));
            clean = (value.slope() == expected);
            ++checked;
        }
    }
    std::ostringstream detail;
    detail << "derivative relation: " << checked << " (r,s) pairs, r<=100";
    report(5, clean && checked == 101 * 102 / 2, detail.str());
}

// 6. Bridge relations, exhaustive 0 <= k <= n <= 200.
void criterion_bridge_relations() {
    auto records = hsum::sweep_relations(200, 2);
    std::ostringstream detail;
    detail << "bridge relations: " << records.size() << " checks, n<=200";
    report(6, all_ok(records), detail.str());
}

// 7. Derivation replay: all 12 pairings pass the dual identity check for
//    n <= 100 and the term rewrite check for 0 <= k <= n <= 60.
void criterion_derivation_replay() {
    bool identities = true;
    bool rewrites = true;
    for (hsum::theorem_id id : hsum::all_theorem_ids) {
        hsum::substitution sub = hsum::substitution_for_family(id.family);
        hsum::weight_kind kind = hsum::kind_for_theorem(id);
        for (long long n = 0; n <= 100 && identities; ++n) {
            auto r = hsum::dual_identity_check(kind, sub, n);
            identities = r.equal && r.status == hsum::check_status::ok;
        }
        for (long long n = 0; n <= 60 && rewrites; ++n) {
            for (long long k = 0; k <= n && rewrites; ++k) {
                rewrites = hsum::term_rewrite_check(sub, kind, n, k).equal;
            }
        }
    }
    std::ostringstream detail;
    detail << "derivation replay: identities n<=100 "
           << (identities ? "ok" : "failed") << ", rewrites k<=n<=60 "
           << (rewrites ? "ok" : "failed");
    report(7, identities && rewrites, detail.str());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// 8. Two CLI runs of the kernel verifier are byte-identical on stdout, and a
//    third run with --parallel 8 matches them too.
void criterion_determinism(const std::string& cli) {
    const std::string base =
        "\"" + cli + "\" verify-kernels --samples 500 --seed 42 --format json";
    const char* files[3] = {"acceptance_run1.json", "acceptance_run2.json",
                            "acceptance_run3.json"};
    const std::string commands[3] = {
        base + " > " + files[0] + " 2>/dev/null",
        base + " > " + files[1] + " 2>/dev/null",
        base + " --parallel 8 > " + files[2] + " 2>/dev/null",
    };
    bool ran = true;
    for (const std::string& command : commands) {
        ran = ran && std::system(command.c_str()) == 0;
    }
    std::string first = slurp(files[0]);
    bool identical = ran && !first.empty() && first == slurp(files[1]) &&
                     first == slurp(files[2]);
    for (const char* f : files) std::remove(f);
    std::ostringstream detail;
    detail << "determinism: three verify-kernels runs "
           << (identical ? "byte-identical" : "diverged") << " ("
           << first.size() << " bytes)";
    report(8, identical, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-hsum-cli>" << std::endl;
        return 2;
    }
    criterion_theorem_sweep();
    criterion_spot_values();
    criterion_kernel_sampling();
    criterion_cv_base();
    criterion_derivative_relation();
    criterion_bridge_relations();
    criterion_derivation_replay();
    criterion_determinism(argv[1]);
    std::cout << "acceptance: " << (8 - failures) << "/8 criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
