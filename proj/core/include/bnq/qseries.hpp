#pragma once

// Integer q-expansions of eta products and Hecke eigenform checks.
//
// The expansion engine multiplies Euler products (1 - q^{dn}) via the
// pentagonal number theorem, so each factor is a sparse series with O(sqrt(N))
// terms. All coefficient arithmetic is overflow-checked 64-bit; an overflow
// raises std::overflow_error rather than wrapping.

#include <cstdint>
#include <string>
#include <vector>

namespace bnq {

// Overflow-checked helpers used by the series code (exposed for tests).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

struct EtaFactor {
    std::int64_t d = 1;  // argument scale: eta(q^d)
    std::int64_t e = 1;  // exponent, must be >= 1
};

// Sparse expansion of prod_{n >= 1} (1 - q^{dn}) to degree N:
// sum over k != 0 of (-1)^k q^{d k(3k-1)/2}. Returned as (offset, sign) pairs
// including the leading (0, +1).
std::vector<std::pair<std::int64_t, int>> pentagonal_series(std::int64_t d, std::int64_t N);

// Truncated product of dense integer series (degree = index), checked.
std::vector<std::int64_t> series_mul(const std::vector<std::int64_t>& a,
                                     const std::vector<std::int64_t>& b,
                                     std::int64_t N);

// Coefficients a_1..a_N of q^{sum(d e)/24} prod (1 - q^{dn})^e. The leading
// exponent sum(d e)/24 must be a positive integer or std::invalid_argument is
// thrown. Index n of the result holds a_n; index 0 is unused.
std::vector<std::int64_t> eta_product_coeffs(const std::vector<EtaFactor>& factors,
                                             std::int64_t N);

struct QExpansion {
    std::string label;
    std::int64_t level = 0;
    std::int64_t weight = 0;
    std::vector<std::int64_t> a;  // a[n] for 1 <= n <= N(); a[0] = 0

    std::int64_t N() const { return static_cast<std::int64_t>(a.size()) - 1; }
    std::int64_t at(std::int64_t n) const;  // bound-checked
    bool good_prime(std::int64_t p) const { return p >= 2 && level % p != 0; }
};

// The weight 4 level 6 newform f = [eta(q) eta(q^2) eta(q^3) eta(q^6)]^2,
// expanded to a_N. Leading exponent (1+2+3+6)*2/24 = 1, so a_1 = 1.
QExpansion f_coefficients(std::int64_t N);

struct HeckeReport {
    bool ok = true;
    std::vector<std::string> violations;  // "<identity> at <index>" one per failure
};

// Verifies a_1 = 1, a_{mn} = a_m a_n for coprime mn <= N, the good-prime
// power recursion a_{p^{r+1}} = a_p a_{p^r} - p^{w-1} a_{p^{r-1}}, and
// a_{p^r} = a_p^r at primes dividing the level.
HeckeReport hecke_check(const QExpansion& q, std::int64_t N = -1);

struct EulerFactor {
    std::int64_t p = 0;
    bool good = true;
    std::vector<std::int64_t> coeffs;  // good: (1, -a_p, p^{w-1}); bad: (1, -a_p)
};

EulerFactor euler_factor(std::int64_t p, const QExpansion& q);

struct DeligneReport {
    bool ok = true;
    std::int64_t primes_checked = 0;
    std::vector<std::int64_t> violations;  // primes with a_p^2 > 4 p^{w-1}
};

// |a_p| <= 2 p^{(w-1)/2} at every good prime p <= N, decided on squares.
DeligneReport deligne_bound_check(const QExpansion& q);

}  // namespace bnq
