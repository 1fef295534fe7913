#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Small integer helpers shared by the field and number-theory layers.
namespace cycloskew::arith {

bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);

/// Returns (p, m) with n = p^m, p prime, or nullopt.
std::optional<std::pair<std::uint64_t, std::uint32_t>> as_prime_power(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Least non-negative residue of a mod m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Exact division; nullopt when den does not divide num.
inline std::optional<std::int64_t> exact_div(std::int64_t num, std::int64_t den)
{
    if (den == 0 || num % den != 0) {
        return std::nullopt;
    }
    return num / den;
}

}  // namespace cycloskew::arith
