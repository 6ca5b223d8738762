#include "bnq/qseries.hpp"

#include <numeric>
#include <stdexcept>

#include "bnq/arith.hpp"

namespace bnq {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in series addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in series multiplication");
    return r;
}

std::vector<std::pair<std::int64_t, int>> pentagonal_series(std::int64_t d, std::int64_t N) {
    if (d < 1) throw std::invalid_argument("eta argument scale must be >= 1");
    std::vector<std::pair<std::int64_t, int>> terms{{0, 1}};
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t g1 = k * (3 * k - 1) / 2;  // exponents k(3k -+ 1)/2
        const std::int64_t g2 = k * (3 * k + 1) / 2;
        const int sign = (k % 2 == 0) ? 1 : -1;
        if (d * g1 > N) break;
        terms.emplace_back(d * g1, sign);
        if (d * g2 <= N) terms.emplace_back(d * g2, sign);
    }
    return terms;
}

std::vector<std::int64_t> series_mul(const std::vector<std::int64_t>& a,
                                     const std::vector<std::int64_t>& b,
                                     std::int64_t N) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(N) + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(N); ++i) {
        if (a[i] == 0) continue;
        const std::size_t jmax =
            std::min(b.size() - 1, static_cast<std::size_t>(N) - i);
        for (std::size_t j = 0; j <= jmax; ++j)
            if (b[j] != 0)
                out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
    }
    return out;
}

namespace {

// In-place multiply of acc (dense, degree M) by a sparse series with leading
// term 1. Descending index order keeps the reads on not-yet-written entries.
void mul_sparse_inplace(std::vector<std::int64_t>& acc,
                        const std::vector<std::pair<std::int64_t, int>>& terms) {
    const auto M = static_cast<std::int64_t>(acc.size()) - 1;
    for (std::int64_t i = M; i >= 1; --i) {
        std::int64_t v = acc[static_cast<std::size_t>(i)];
        for (const auto& [off, sign] : terms) {
            if (off == 0 || off > i) continue;
            const std::int64_t w = acc[static_cast<std::size_t>(i - off)];
            v = (sign > 0) ? checked_add(v, w) : checked_add(v, -w);
        }
        acc[static_cast<std::size_t>(i)] = v;
    }
}

}  // namespace

std::vector<std::int64_t> eta_product_coeffs(const std::vector<EtaFactor>& factors,
                                             std::int64_t N) {
    if (N < 1) throw std::invalid_argument("expansion length must be >= 1");
    if (factors.empty()) throw std::invalid_argument("empty eta product");
    std::int64_t de_sum = 0;
    for (const auto& f : factors) {
        if (f.d < 1 || f.e < 1)
            throw std::invalid_argument("eta factors need d >= 1 and e >= 1");
        de_sum += f.d * f.e;
    }
    if (de_sum % 24 != 0 || de_sum == 0)
        throw std::invalid_argument("leading exponent sum(d e)/24 = " +
                                    std::to_string(de_sum) + "/24 is not an integer");
    const std::int64_t lead = de_sum / 24;

    const std::int64_t M = N - lead;  // degrees still needed from the product part
    std::vector<std::int64_t> prod(static_cast<std::size_t>(std::max<std::int64_t>(M, 0)) + 1, 0);
    prod[0] = 1;
    if (M > 0)
        for (const auto& f : factors) {
            const auto terms = pentagonal_series(f.d, M);
            for (std::int64_t rep = 0; rep < f.e; ++rep)
                mul_sparse_inplace(prod, terms);
        }

    std::vector<std::int64_t> a(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t n = lead; n <= N; ++n)
        a[static_cast<std::size_t>(n)] = prod[static_cast<std::size_t>(n - lead)];
    return a;
}

std::int64_t QExpansion::at(std::int64_t n) const {
    if (n < 1 || n > N())
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " outside expansion range 1.." + std::to_string(N()));
    return a[static_cast<std::size_t>(n)];
}

QExpansion f_coefficients(std::int64_t N) {
    QExpansion q;
    q.label = "f";
    q.level = 6;
    q.weight = 4;
    q.a = eta_product_coeffs({{1, 2}, {2, 2}, {3, 2}, {6, 2}}, N);
    return q;
}

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

}  // namespace

HeckeReport hecke_check(const QExpansion& q, std::int64_t N) {
    if (N < 0 || N > q.N()) N = q.N();
    HeckeReport rep;
    auto flag = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    if (N >= 1 && q.at(1) != 1) flag("a_1 = " + std::to_string(q.at(1)) + ", expected 1");

    // Coprime multiplicativity over every pair with product in range.
    for (std::int64_t m = 2; m * 2 <= N; ++m)
        for (std::int64_t n = m + 1; m * n <= N; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (q.at(m * n) != checked_mul(q.at(m), q.at(n)))
                flag("a_{mn} != a_m a_n at (m,n) = (" + std::to_string(m) + "," +
                     std::to_string(n) + ")");
        }

    // Prime powers: good primes satisfy the degree 2 recursion with
    // p^{weight-1}; primes dividing the level collapse to a_{p^r} = a_p^r.
    for (std::int64_t p = 2; p <= N; ++p) {
        if (!is_prime(p)) continue;
        if (q.good_prime(p)) {
            const std::int64_t s = ipow(p, q.weight - 1);
            for (std::int64_t pr = p; pr * p <= N; pr *= p) {
                const std::int64_t next = pr * p;
                const std::int64_t prev = pr / p;
                const std::int64_t want =
                    checked_add(checked_mul(q.at(p), q.at(pr)),
                                -checked_mul(s, q.at(prev)));
                if (q.at(next) != want)
                    flag("good recursion fails at p^r = " + std::to_string(next));
            }
        } else {
            std::int64_t expect = q.at(p);
            for (std::int64_t pr = p * p; pr <= N; pr *= p) {
                expect = checked_mul(expect, q.at(p));
                if (q.at(pr) != expect)
                    flag("bad-prime power rule fails at p^r = " + std::to_string(pr));
            }
        }
    }
    return rep;
}

EulerFactor euler_factor(std::int64_t p, const QExpansion& q) {
    if (!is_prime(p)) throw std::invalid_argument("not prime: " + std::to_string(p));
    EulerFactor f;
    f.p = p;
    f.good = q.good_prime(p);
    if (f.good)
        f.coeffs = {1, -q.at(p), ipow(p, q.weight - 1)};
    else
        f.coeffs = {1, -q.at(p)};
    return f;
}

DeligneReport deligne_bound_check(const QExpansion& q) {
    DeligneReport rep;
    for (std::int64_t p = 2; p <= q.N(); ++p) {
        if (!is_prime(p) || !q.good_prime(p)) continue;
        ++rep.primes_checked;
        const auto ap = static_cast<__int128>(q.at(p));
        __int128 bound = 4;
        for (std::int64_t i = 0; i < q.weight - 1; ++i) bound *= p;
        if (ap * ap > bound) {
            rep.ok = false;
            rep.violations.push_back(p);
        }
    }
    return rep;
}

}  // namespace bnq
