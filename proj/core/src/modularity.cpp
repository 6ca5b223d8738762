#include "bnq/modularity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bnq/version.hpp"

namespace bnq {

namespace {

using i128 = __int128;

i128 sq(i128 x) { return x * x; }

// |L| <= B p^{3/2} with L, B integers and B >= 0, decided on squares.
bool weil_le(std::int64_t L, std::int64_t B, std::int64_t p) {
    return sq(L) <= sq(static_cast<i128>(B)) * p * p * p;
}

// |L| < B p^{3/2}, strict.
bool weil_lt(std::int64_t L, std::int64_t B, std::int64_t p) {
    return sq(L) < sq(static_cast<i128>(B)) * p * p * p;
}

std::int64_t hodge_L(std::int64_t p, std::int64_t n, std::int64_t base, std::int64_t a) {
    return 1 + (a + base) * (p + p * p) + p * p * p - n;
}

}  // namespace

LivneSet livne_prime_set(const std::vector<std::int64_t>& S) {
    LivneSet out;
    out.S = S;
    std::sort(out.S.begin(), out.S.end());
    out.S.erase(std::unique(out.S.begin(), out.S.end()), out.S.end());
    if (out.S.empty() || out.S.front() != 2)
        throw std::invalid_argument("Livne prime set requires 2 in S");
    for (auto q : out.S) {
        if (!is_prime(q)) throw std::invalid_argument("not prime: " + std::to_string(q));
    }

    // Q_S = Q(sqrt(-1), sqrt(2), sqrt(q) : odd q in S) sits inside the
    // cyclotomic field of conductor m = 8 * prod(odd q in S); Frobenius
    // classes are residues mod m.
    std::int64_t m = 8;
    for (auto q : out.S)
        if (q != 2) m *= q;
    out.m = m;
    out.beyond_standard = !(out.S.size() == 2 && out.S[1] == 3);

    std::set<std::int64_t> remaining;
    for (std::int64_t r = 1; r < m; ++r)
        if (std::gcd(r, m) == 1) remaining.insert(r);

    std::map<std::int64_t, std::int64_t> witness;  // residue -> smallest prime
    for (std::int64_t q = 3; !remaining.empty(); q += 2) {
        if (!is_prime(q)) continue;
        if (std::binary_search(out.S.begin(), out.S.end(), q)) continue;
        const std::int64_t r = q % m;
        if (remaining.erase(r)) witness[r] = q;
    }
    for (const auto& [r, q] : witness) out.T.push_back(q);
    std::sort(out.T.begin(), out.T.end());
    return out;
}

CountFn direct_counts(int threads) {
    return [threads](std::int64_t p) { return count_record(PrimeField(p), threads); };
}

std::vector<TraceRow> compare_traces(const std::vector<std::int64_t>& primes,
                                     const QExpansion& f, const CountFn& counts) {
    std::vector<TraceRow> rows;
    rows.reserve(primes.size());
    for (auto p : primes) {
        const CountRecord rec = counts(p);
        TraceRow row;
        row.p = p;
        row.n_U = rec.n_U;
        row.n_Y = rec.n_Y;
        row.t3 = rec.t3;
        row.a_p = f.at(p);
        row.match = row.a_p == row.t3;
        rows.push_back(row);
    }
    return rows;
}

bool determinant_check(std::vector<TraceRow>& rows) {
    bool all = true;
    for (auto& r : rows) {
        // Nonzero trace rules out determinant -p^3 for the 2-dimensional
        // Frobenius action, which is what Livne's condition needs.
        r.det_ok = r.t3 != 0;
        all = all && r.det_ok;
    }
    return all;
}

bool parity_check(std::vector<TraceRow>& rows) {
    bool all = true;
    for (auto& r : rows) {
        // x -> x^{-1} pairs up U except for the 10 Segre fixpoints, so n_U is
        // even; p^3 - 19 is even for odd p; hence t3 is even.
        r.parity_ok = r.n_U % 2 == 0 && (r.p * r.p * r.p - 19) % 2 == 0 && r.t3 % 2 == 0;
        all = all && r.parity_ok;
    }
    return all;
}

HodgeSolution hodge_solver(std::int64_t p, std::int64_t n_count, std::int64_t base) {
    if (!is_prime(p) || p < 5)
        throw std::invalid_argument("hodge solver needs a good prime, got " +
                                    std::to_string(p));
    HodgeSolution sol;
    sol.p = p;
    sol.base = base;
    sol.n_count = n_count;

    // Scan with early exit. L(a) grows by p + p^2 > 2 p^{3/2} per step while
    // the bound grows by 2 p^{3/2}, so once L(a) is positive and out of range
    // it stays out.
    constexpr std::int64_t scan_limit = 1'000'000;
    for (std::int64_t a = 0; a <= scan_limit; ++a) {
        const std::int64_t L = hodge_L(p, n_count, base, a);
        if (weil_le(L, 2 * a + 2, p))
            sol.admissible.push_back(a);
        else if (L > 0)
            break;
    }

    // Cross-check: the admissible set is a contiguous range because
    // g(a) = L(a) - (2a+2) p^{3/2} and h(a) = L(a) + (2a+2) p^{3/2} are both
    // strictly increasing. Bisect each sign change and compare.
    auto ge_lower = [&](std::int64_t a) {  // L(a) >= -(2a+2) p^{3/2}
        const std::int64_t L = hodge_L(p, n_count, base, a);
        return L >= 0 || weil_le(L, 2 * a + 2, p);
    };
    auto le_upper = [&](std::int64_t a) {  // L(a) <= (2a+2) p^{3/2}
        const std::int64_t L = hodge_L(p, n_count, base, a);
        return L <= 0 || weil_le(L, 2 * a + 2, p);
    };
    std::int64_t lo = 0;
    if (!ge_lower(scan_limit)) {
        lo = scan_limit + 1;  // everything in range is below the lower wall
    } else if (!ge_lower(0)) {
        std::int64_t bad = 0, good = scan_limit;  // first a with ge_lower
        while (good - bad > 1) {
            const std::int64_t mid = bad + (good - bad) / 2;
            (ge_lower(mid) ? good : bad) = mid;
        }
        lo = good;
    }
    std::int64_t hi = scan_limit;
    if (!le_upper(0)) {
        hi = -1;
    } else if (le_upper(scan_limit)) {
        hi = scan_limit;
    } else {
        std::int64_t good = 0, bad = scan_limit;  // last a with le_upper
        while (bad - good > 1) {
            const std::int64_t mid = good + (bad - good) / 2;
            (le_upper(mid) ? good : bad) = mid;
        }
        hi = good;
    }
    std::vector<std::int64_t> range;
    for (std::int64_t a = lo; a <= hi; ++a) range.push_back(a);
    if (range != sol.admissible)
        throw std::logic_error("hodge solver: scan and closed range disagree");
    return sol;
}

KSolution h2_eigenvalue_k_solver(std::int64_t p, std::int64_t n_ytilde) {
    if (!is_prime(p) || p < 5)
        throw std::invalid_argument("k solver needs a good prime, got " + std::to_string(p));
    KSolution sol;
    sol.p = p;
    sol.n_Ytilde = n_ytilde;

    // Candidates cluster around (n - 1 - p^3)/(p + p^2); checking a window of
    // neighbours decides uniqueness without relying on a gap estimate, which
    // only kicks in for p >= 17.
    const std::int64_t step = p + p * p;
    const std::int64_t center = (n_ytilde - 1 - p * p * p) / step;
    std::vector<std::int64_t> hits;
    for (std::int64_t k = center - 3; k <= center + 3; ++k) {
        const std::int64_t L = 1 + k * step + p * p * p - n_ytilde;
        if (weil_lt(L, 2, p)) hits.push_back(k);
    }
    if (hits.empty())
        throw std::runtime_error("k solver: no k within the Weil bound at p = " +
                                 std::to_string(p));
    if (hits.size() > 1)
        throw std::runtime_error("k solver: bound admits several k at p = " +
                                 std::to_string(p));
    sol.k = hits.front();
    return sol;
}

VerificationReport full_verification(const VerifyConfig& cfg) {
    VerificationReport rep;
    rep.tool_version = tool_version;
    rep.bad_euler_factors = "undetermined";

    const CountFn counts = cfg.counts ? cfg.counts : direct_counts(cfg.threads);

    rep.livne = livne_prime_set(cfg.livne_S);
    std::vector<std::int64_t> t_eff = cfg.restrict_T.value_or(rep.livne.T);
    std::sort(t_eff.begin(), t_eff.end());

    // Coverage: the restricted set must still hit every unit residue mod m.
    std::set<std::int64_t> uncovered;
    for (std::int64_t r = 1; r < rep.livne.m; ++r)
        if (std::gcd(r, rep.livne.m) == 1) uncovered.insert(r);
    for (auto q : t_eff) uncovered.erase(q % rep.livne.m);

    // Trace rows over the effective set plus every good prime <= trace_limit.
    std::set<std::int64_t> prime_set(t_eff.begin(), t_eff.end());
    for (std::int64_t p = 5; p <= cfg.trace_limit; ++p)
        if (is_prime(p)) prime_set.insert(p);
    rep.primes.assign(prime_set.begin(), prime_set.end());

    const std::int64_t need = std::max<std::int64_t>(
        rep.primes.empty() ? 1 : rep.primes.back(), 13);
    const QExpansion f = f_coefficients(need);
    rep.rows = compare_traces(rep.primes, f, counts);
    const bool dets = determinant_check(rep.rows);
    const bool pars = parity_check(rep.rows);

    std::string failure;
    auto fail = [&failure](const std::string& msg) {
        if (failure.empty()) failure = msg;
    };

    for (const auto& r : rep.rows)
        if (!r.match) {
            fail("trace mismatch at p=" + std::to_string(r.p));
            break;
        }
    if (failure.empty() && !dets)
        for (const auto& r : rep.rows)
            if (!r.det_ok) {
                fail("determinant undetermined at p=" + std::to_string(r.p));
                break;
            }
    if (failure.empty() && !pars)
        for (const auto& r : rep.rows)
            if (!r.parity_ok) {
                fail("parity violation at p=" + std::to_string(r.p));
                break;
            }

    // Hodge solves want one good prime = 1 mod 4 so the twisted branch is
    // theorem-backed.
    if (cfg.hodge_prime % 4 != 1)
        throw std::invalid_argument("hodge prime must be 1 mod 4");
    const CountRecord hrec = counts(cfg.hodge_prime);
    rep.hodge.push_back(hodge_solver(cfg.hodge_prime, hrec.n_Y, 50));
    rep.hodge.push_back(hodge_solver(cfg.hodge_prime, hrec.n_Ytilde, 60));
    for (const auto& h : rep.hodge)
        if (failure.empty() && h.admissible.empty())
            fail("hodge inconsistency at p=" + std::to_string(h.p));

    if (cfg.k_lo <= cfg.k_hi) {
        for (std::int64_t p = cfg.k_lo; p <= cfg.k_hi; ++p) {
            if (!is_prime(p) || p % 4 != 3 || p < 5) continue;
            try {
                rep.k_values.push_back(h2_eigenvalue_k_solver(p, counts(p).n_Ytilde));
            } catch (const std::runtime_error& e) {
                fail(std::string("k solver failure: ") + e.what());
            }
        }
    }

    if (!failure.empty())
        rep.verdict = "failed: " + failure;
    else if (!uncovered.empty())
        rep.verdict = "incomplete: residue " + std::to_string(*uncovered.begin()) +
                      " mod " + std::to_string(rep.livne.m) + " uncovered";
    else
        rep.verdict = "verified";
    return rep;
}

}  // namespace bnq
