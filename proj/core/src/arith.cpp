#include "bnq/arith.hpp"

#include <stdexcept>
#include <string>

namespace bnq {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("not prime: " + std::to_string(p));
    if (p > max_modulus)
        throw std::invalid_argument("modulus " + std::to_string(p) +
                                    " exceeds table bound 2^20");

    auto n = static_cast<std::size_t>(p);
    inv_.assign(n, 0);
    chi_.assign(n, 0);

    // inv[a] = -(p / a) * inv[p mod a], the usual O(p) recurrence.
    if (p > 1) inv_[1] = 1;
    for (std::int64_t a = 2; a < p; ++a)
        inv_[static_cast<std::size_t>(a)] =
            static_cast<std::int32_t>(p - (p / a) * inv_[static_cast<std::size_t>(p % a)] % p);

    // Mark the (p-1)/2 nonzero squares, everything else nonzero is a nonsquare.
    for (std::int64_t a = 1; a < p; ++a) chi_[static_cast<std::size_t>(a)] = -1;
    for (std::int64_t b = 1; b < p; ++b) chi_[static_cast<std::size_t>((b * b) % p)] = 1;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    if (a == 0) throw std::domain_error("inverse of 0");
    return inv_[static_cast<std::size_t>(a)];
}

std::int64_t PrimeField::pow(std::int64_t a, std::int64_t e) const noexcept {
    std::int64_t r = 1 % p_;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace bnq
