#pragma once

// Prime field arithmetic with dense inverse and quadratic character tables.
//
// The point-counting loops upstream hit inv() and legendre() once per inner
// iteration, so both are table lookups. Tables cost O(p) memory; moduli are
// capped at 2^20, far beyond what the cubic enumerations can exhaust anyway.

#include <cstdint>
#include <vector>

namespace bnq {

bool is_prime(std::int64_t n) noexcept;

class PrimeField {
public:
    static constexpr std::int64_t max_modulus = std::int64_t{1} << 20;

    // Throws std::invalid_argument if p is not prime or exceeds max_modulus.
    // p = 2 and p = 3 are valid here; variety counts reject them separately.
    explicit PrimeField(std::int64_t p);

    std::int64_t p() const noexcept { return p_; }

    // Canonical representative in [0, p) of any 64-bit integer.
    std::int64_t reduce(std::int64_t a) const noexcept {
        std::int64_t r = a % p_;
        return r < 0 ? r + p_ : r;
    }

    // Operands below must already be canonical representatives.
    std::int64_t add(std::int64_t a, std::int64_t b) const noexcept {
        std::int64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const noexcept {
        std::int64_t s = a - b;
        return s < 0 ? s + p_ : s;
    }
    std::int64_t neg(std::int64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept {
        return (a * b) % p_;  // p < 2^20 keeps the product well inside 64 bits
    }

    // Multiplicative inverse; throws std::domain_error on 0.
    std::int64_t inv(std::int64_t a) const;

    // Quadratic character chi(a): 0 at 0, +1 on squares, -1 on nonsquares.
    int legendre(std::int64_t a) const noexcept { return chi_[static_cast<std::size_t>(a)]; }

    std::int64_t pow(std::int64_t a, std::int64_t e) const noexcept;

private:
    std::int64_t p_;
    std::vector<std::int32_t> inv_;
    std::vector<std::int8_t> chi_;
};

}  // namespace bnq
