#pragma once

// Finite-prime verification that the middle cohomology of Y matches the
// weight 4 level 6 newform, via Livne's criterion, plus the Weil-bound
// solvers that pin down the Hodge numbers from a single good count.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bnq/qseries.hpp"
#include "bnq/varieties.hpp"

namespace bnq {

struct LivneSet {
    std::vector<std::int64_t> S;  // bad primes, must contain 2
    std::int64_t m = 0;           // 8 * product of odd members of S
    std::vector<std::int64_t> T;  // smallest prime outside S per unit residue mod m
    bool beyond_standard = false; // S != {2, 3}: instantiated here only for {2, 3}
};

// Effective prime set for Livne's criterion over Q_S = Q(sqrt(-1), sqrt(2),
// sqrt(q) : q in S odd): one witness prime per residue class of (Z/m)^*.
LivneSet livne_prime_set(const std::vector<std::int64_t>& S);

// One verified prime: geometric trace vs eigenform coefficient.
struct TraceRow {
    std::int64_t p = 0;
    std::int64_t n_U = 0;
    std::int64_t n_Y = 0;
    std::int64_t t3 = 0;
    std::int64_t a_p = 0;
    bool match = false;
    bool det_ok = false;     // t3 != 0 forces Frobenius determinant +p^3
    bool parity_ok = false;  // t3 even: n_U even and p^3 - 19 even
};

// Pluggable count source so callers can interpose a cache; the default
// computes fresh with the fast path.
using CountFn = std::function<CountRecord(std::int64_t p)>;
CountFn direct_counts(int threads = 1);

std::vector<TraceRow> compare_traces(const std::vector<std::int64_t>& primes,
                                     const QExpansion& f, const CountFn& counts);

// Marks det_ok / parity_ok on each row; true iff every row passes.
bool determinant_check(std::vector<TraceRow>& rows);
bool parity_check(std::vector<TraceRow>& rows);

// Admissible h^{2,1} candidates at a good prime: integers a >= 0 with
//   | 1 + (a + base)(p + p^2) + p^3 - n_count |  <=  (2a + 2) p^{3/2},
// decided exactly by comparing squares in 128-bit integers. The set is a
// contiguous range; solve() both scans with early exit and derives the range
// by monotone bisection, and the two must agree.
struct HodgeSolution {
    std::int64_t p = 0;
    std::int64_t base = 0;  // 50 for Y, 60 for Ytilde
    std::int64_t n_count = 0;
    std::vector<std::int64_t> admissible;
    bool determined() const { return admissible.size() == 1; }
    // Derived diamond data, meaningful when determined():
    std::int64_t h21() const { return admissible.front(); }
    std::int64_t h11() const { return h21() + base; }            // h^{1,1} of Y / Ytilde
    std::int64_t h11_cy() const { return h21() + (base == 50 ? 50 : 40); }  // Y / Z
    std::int64_t euler() const { return 2 * (h11_cy() - h21()); }
};

HodgeSolution hodge_solver(std::int64_t p, std::int64_t n_count, std::int64_t base);

// Unique k with |1 + kp + kp^2 + p^3 - n_Ytilde| < 2 p^{3/2} (strict), used
// at p = 3 mod 4 where the h^2 eigenvalue structure is k * (p + p^2).
// Throws std::runtime_error unless exactly one k qualifies.
struct KSolution {
    std::int64_t p = 0;
    std::int64_t n_Ytilde = 0;
    std::int64_t k = 0;
};

KSolution h2_eigenvalue_k_solver(std::int64_t p, std::int64_t n_ytilde);

struct VerifyConfig {
    std::vector<std::int64_t> livne_S{2, 3};
    std::optional<std::vector<std::int64_t>> restrict_T;  // subset of T to actually check
    std::int64_t trace_limit = 100;  // also match a_p = t3 at every good p <= this
    std::int64_t hodge_prime = 13;   // must be 1 mod 4 so both base cases apply
    std::int64_t k_lo = 7, k_hi = 59;
    int threads = 1;
    CountFn counts;  // defaults to direct_counts(threads)
};

struct VerificationReport {
    std::string tool_version;
    LivneSet livne;
    std::vector<std::int64_t> primes;  // all primes with trace rows
    std::vector<TraceRow> rows;
    std::vector<HodgeSolution> hodge;  // base 50 then base 60
    std::vector<KSolution> k_values;
    std::string bad_euler_factors;     // "undetermined" for the geometric side
    std::string verdict;               // "verified" | "failed: ..." | "incomplete: ..."
    bool verified() const { return verdict == "verified"; }
};

// Runs the whole pipeline: Livne set, trace comparison over T and all good
// primes <= trace_limit, determinant and parity side conditions, both Hodge
// solves at hodge_prime, and the k-scan. Any sub-step failure degrades the
// verdict with a reason naming the prime.
VerificationReport full_verification(const VerifyConfig& cfg);

}  // namespace bnq
