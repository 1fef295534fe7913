#pragma once

#include <cstdint>
#include <utility>

#include "cycloskew/field.hpp"

namespace cycloskew {

struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// q = s^2 + t^2 with the Katre-Rajwade normalisation (sign of t depends on the generator).
struct QuadRepST {
    std::int64_t s = 0;
    std::int64_t t = 0;
    friend bool operator==(const QuadRepST&, const QuadRepST&) = default;
};

/// q = x^2 + 4y^2, x = 1 mod 4, y >= 0.
struct QuadRepXY {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const QuadRepXY&, const QuadRepXY&) = default;
};

/// q = a^2 + 2b^2, a = 1 mod 4, b >= 0.
struct QuadRepAB {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const QuadRepAB&, const QuadRepAB&) = default;
};

PrimePower prime_power_decompose(std::uint64_t q);

/// Proper s with q = s^2 + t^2, p does not divide s, s = 1 mod 4, together with |t|.
/// For p = 3 mod 4 returns ((-p)^(m/2), 0). Needs q = 1 mod 4.
QuadRepST two_squares_abs(std::uint64_t q, std::uint32_t p, std::uint32_t m);

/// Same, with the sign of t fixed by generator^((q-1)/4) = s/t (mod p).
QuadRepST two_squares_rep(const Field& field);

QuadRepXY x2_4y2_rep(std::uint64_t q, std::uint32_t p, std::uint32_t m);
QuadRepAB a2_2b2_rep(std::uint64_t q, std::uint32_t p, std::uint32_t m);

/// discrete_log(x) = 0 mod 4.
bool is_quartic_residue(const Field& field, Elem x);

/// Whether 2 is a fourth power in GF(p^m); depends only on (p, m). Needs q = 1 mod 4.
bool two_is_quartic_residue(std::uint32_t p, std::uint32_t m);

}  // namespace cycloskew
