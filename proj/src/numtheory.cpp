#include "cycloskew/numtheory.hpp"

#include <string>

#include "cycloskew/arith.hpp"
#include "cycloskew/error.hpp"

namespace cycloskew {

namespace {

// Sign choice of v (odd) making it 1 mod 4.
std::int64_t normalize_one_mod_four(std::int64_t v)
{
    return arith::mod(v, 4) == 1 ? v : -v;
}

std::int64_t half_power(std::uint32_t p, std::uint32_t m, std::uint64_t q, const char* what)
{
    if (m % 2 != 0) {
        throw Error(ErrorCode::NoRepresentation,
                    std::string(what) + " has no representation for q=" + std::to_string(q));
    }
    return static_cast<std::int64_t>(arith::ipow(p, m / 2));
}

}  // namespace

PrimePower prime_power_decompose(std::uint64_t q)
{
    auto pm = arith::as_prime_power(q);
    if (!pm || pm->first > 0xFFFFFFFFull) {
        throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
    return {static_cast<std::uint32_t>(pm->first), pm->second};
}

QuadRepST two_squares_abs(std::uint64_t q, std::uint32_t p, std::uint32_t m)
{
    if (q % 4 != 1) {
        throw Error(ErrorCode::NotOneMod4, "q=" + std::to_string(q) + " is not 1 mod 4");
    }
    if (p % 4 == 3) {
        const std::int64_t s = half_power(p, m, q, "s^2+t^2");
        return {(m / 2) % 2 == 0 ? s : -s, 0};
    }
    const std::uint64_t limit = arith::isqrt(q);
    for (std::uint64_t s = 1; s <= limit; s += 2) {
        if (s % p == 0) {
            continue;
        }
        const std::uint64_t rest = q - s * s;
        if (arith::is_square(rest)) {
            return {normalize_one_mod_four(static_cast<std::int64_t>(s)),
                    static_cast<std::int64_t>(arith::isqrt(rest))};
        }
    }
    throw Error(ErrorCode::NoRepresentation, "no proper s^2+t^2 for q=" + std::to_string(q));
}

QuadRepST two_squares_rep(const Field& field)
{
    const std::uint32_t p = field.characteristic();
    const std::uint64_t q = field.order();
    QuadRepST rep = two_squares_abs(q, p, field.degree());
    if (rep.t == 0) {
        return rep;
    }
    const Elem root = field.exp(static_cast<std::int64_t>((q - 1) / 4));
    if (!field.in_prime_subfield(root)) {
        throw Error(ErrorCode::NotInPrimeSubfield,
                    "generator^((q-1)/4) is not in the prime subfield");
    }
    // t = s * root^{-1} (mod p)
    const std::uint64_t root_inv = arith::pow_mod(root, p - 2, p);
    const auto target = static_cast<std::int64_t>(
        arith::mul_mod(static_cast<std::uint64_t>(arith::mod(rep.s, p)), root_inv, p));
    if (arith::mod(rep.t, p) != target) {
        rep.t = -rep.t;
    }
    if (arith::mod(rep.t, p) != target) {
        throw Error(ErrorCode::NoRepresentation, "sign of t could not be resolved");
    }
    return rep;
}

QuadRepXY x2_4y2_rep(std::uint64_t q, std::uint32_t p, std::uint32_t m)
{
    if (q % 4 != 1) {
        throw Error(ErrorCode::NoRepresentation, "x^2+4y^2 needs q = 1 mod 4");
    }
    if (p % 4 != 1) {
        return {normalize_one_mod_four(half_power(p, m, q, "x^2+4y^2")), 0};
    }
    const std::uint64_t limit = arith::isqrt(q);
    for (std::uint64_t x = 1; x <= limit; x += 2) {
        if (x % p == 0) {
            continue;
        }
        const std::uint64_t rest = q - x * x;
        if (rest % 4 == 0 && arith::is_square(rest / 4)) {
            return {normalize_one_mod_four(static_cast<std::int64_t>(x)),
                    static_cast<std::int64_t>(arith::isqrt(rest / 4))};
        }
    }
    throw Error(ErrorCode::NoRepresentation, "no proper x^2+4y^2 for q=" + std::to_string(q));
}

QuadRepAB a2_2b2_rep(std::uint64_t q, std::uint32_t p, std::uint32_t m)
{
    if (q % 2 == 0) {
        throw Error(ErrorCode::NoRepresentation, "a^2+2b^2 needs odd q");
    }
    if (p % 8 != 1 && p % 8 != 3) {
        return {normalize_one_mod_four(half_power(p, m, q, "a^2+2b^2")), 0};
    }
    const std::uint64_t limit = arith::isqrt(q);
    for (std::uint64_t a = 1; a <= limit; a += 2) {
        if (a % p == 0) {
            continue;
        }
        const std::uint64_t rest = q - a * a;
        if (rest % 2 == 0 && arith::is_square(rest / 2)) {
            return {normalize_one_mod_four(static_cast<std::int64_t>(a)),
                    static_cast<std::int64_t>(arith::isqrt(rest / 2))};
        }
    }
    throw Error(ErrorCode::NoRepresentation, "no proper a^2+2b^2 for q=" + std::to_string(q));
}

bool is_quartic_residue(const Field& field, Elem x)
{
    if ((field.order() - 1) % 4 != 0) {
        throw Error(ErrorCode::OrderNotDivisible, "4 does not divide q-1");
    }
    return field.log(x) % 4 == 0;
}

bool two_is_quartic_residue(std::uint32_t p, std::uint32_t m)
{
    const std::uint64_t q = arith::ipow(p, m);
    if (p == 2 || (q - 1) % 4 != 0) {
        throw Error(ErrorCode::OrderNotDivisible, "4 does not divide q-1");
    }
    // 2 lies in GF(p), so 2^((q-1)/4) can be evaluated mod p.
    const std::uint64_t e = ((q - 1) / 4) % (p - 1);
    return arith::pow_mod(2, e, p) == 1;
}

}  // namespace cycloskew
