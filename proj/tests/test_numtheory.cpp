#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "cycloskew/arith.hpp"
#include "cycloskew/error.hpp"
#include "cycloskew/numtheory.hpp"
#include "oracle.hpp"

using namespace cycloskew;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers(std::uint64_t lo, std::uint64_t hi, std::uint64_t r,
                                                                   std::uint64_t mod)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint64_t q = lo; q <= hi; ++q) {
        if (q % mod != r) {
            continue;
        }
        if (const auto pm = arith::as_prime_power(q)) {
            out.emplace_back(static_cast<std::uint32_t>(pm->first), pm->second);
        }
    }
    return out;
}

std::vector<Elem> generators(const Field& f)
{
    std::vector<Elem> out;
    const std::uint32_t n = f.order() - 1;
    for (std::uint32_t k = 1; k < n; ++k) {
        if (arith::gcd(k, n) == 1) {
            out.push_back(f.exp(k));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("prime power decomposition")
{
    CHECK(prime_power_decompose(125) == PrimePower{5, 3});
    CHECK(prime_power_decompose(13) == PrimePower{13, 1});
    CHECK(prime_power_decompose(1u << 30) == PrimePower{2, 30});
    bool threw = false;
    try {
        prime_power_decompose(12);
    } catch (const Error& e) {
        threw = e.code() == ErrorCode::NotPrimePower;
    }
    CHECK(threw);
}

TEST_CASE("two squares: worked examples")
{
    const auto f2 = Field::build(13, 1, std::nullopt, Elem{2});
    const auto f7 = Field::build(13, 1, std::nullopt, Elem{7});
    CHECK(two_squares_rep(*f2) == QuadRepST{-3, -2});
    CHECK(two_squares_rep(*f7) == QuadRepST{-3, 2});
    const auto r29 = two_squares_rep(*Field::build(29, 1));
    CHECK(r29.s == 5);
    CHECK(std::abs(r29.t) == 2);
    // p = 3 mod 4
    CHECK(two_squares_abs(9, 3, 2) == QuadRepST{-3, 0});
    CHECK(two_squares_abs(49, 7, 2) == QuadRepST{-7, 0});
    CHECK(two_squares_abs(81, 3, 4) == QuadRepST{9, 0});
}

TEST_CASE("x^2 + 4y^2 and a^2 + 2b^2: worked examples")
{
    CHECK(x2_4y2_rep(361, 19, 2) == QuadRepXY{-19, 0});
    CHECK(a2_2b2_rep(361, 19, 2) == QuadRepAB{17, 6});
    CHECK(x2_4y2_rep(89, 89, 1) == QuadRepXY{5, 4});
    CHECK(a2_2b2_rep(89, 89, 1) == QuadRepAB{9, 2});
    CHECK(x2_4y2_rep(41, 41, 1) == QuadRepXY{5, 2});
    CHECK(a2_2b2_rep(41, 41, 1) == QuadRepAB{-3, 4});
}

TEST_CASE("representations satisfy their forms and normalisations")
{
    for (auto [p, m] : prime_powers(5, 20000, 1, 4)) {
        const std::int64_t q = arith::ipow(p, m);
        const auto st = two_squares_abs(q, p, m);
        CHECK(st.s * st.s + st.t * st.t == q);
        CHECK(arith::mod(st.s, 4) == 1);
        if (p % 4 == 1) {
            CHECK(st.s % static_cast<std::int64_t>(p) != 0);
            // exhaustive search: the proper representation is unique up to the sign of t
            int found = 0;
            for (std::int64_t s = -arith::isqrt(q); s * s <= q; ++s) {
                const std::int64_t rest = q - s * s;
                if (arith::mod(s, 4) == 1 && s % static_cast<std::int64_t>(p) != 0 && arith::is_square(rest)) {
                    ++found;
                    CHECK(s == st.s);
                    CHECK(static_cast<std::int64_t>(arith::isqrt(rest)) == std::abs(st.t));
                }
            }
            CHECK(found == 1);
        } else {
            CHECK(st.t == 0);
        }
    }
    for (auto [p, m] : prime_powers(9, 20000, 1, 8)) {
        const std::int64_t q = arith::ipow(p, m);
        const auto xy = x2_4y2_rep(q, p, m);
        const auto ab = a2_2b2_rep(q, p, m);
        CHECK(xy.x * xy.x + 4 * xy.y * xy.y == q);
        CHECK(ab.a * ab.a + 2 * ab.b * ab.b == q);
        CHECK(arith::mod(xy.x, 4) == 1);
        CHECK(arith::mod(ab.a, 4) == 1);
        CHECK(xy.y >= 0);
        CHECK(ab.b >= 0);
        if (p % 4 != 1) {
            CHECK(xy.y == 0);
        }
        if (p % 8 == 5 || p % 8 == 7) {
            CHECK(ab.b == 0);
        }
    }
}

TEST_CASE("sign of t follows the generator")
{
    for (auto [p, m] : prime_powers(5, 200, 1, 4)) {
        const auto base = Field::build(p, m);
        const auto ref = two_squares_abs(base->order(), p, m);
        for (Elem g : generators(*base)) {
            const auto f = base->with_generator(g);
            const auto st = two_squares_rep(*f);
            CHECK(st.s == ref.s);
            CHECK(std::abs(st.t) == std::abs(ref.t));
            if (p % 4 == 1) {
                // s = t g^((q-1)/4) mod p
                const Elem w = f->exp((f->order() - 1) / 4);
                REQUIRE(f->in_prime_subfield(w));
                CHECK(arith::mod(st.s - st.t * static_cast<std::int64_t>(w), p) == 0);
            }
        }
    }
}

TEST_CASE("quartic residues")
{
    CHECK(is_quartic_residue(*Field::build(3, 4), 2));
    CHECK(is_quartic_residue(*Field::build(13, 1, std::nullopt, Elem{2}), 3));
    CHECK_FALSE(is_quartic_residue(*Field::build(17, 1, std::nullopt, Elem{3}), 2));

    for (auto [p, m] : prime_powers(5, 3000, 1, 4)) {
        if (p == 2) {
            continue;
        }
        const auto f = Field::build(p, m);
        const oracle::NaiveField ref(p, f->spec().poly);
        // 2 is a fourth power iff 2^((q-1)/4) = 1
        const bool expected = ref.pow(2 % p, (f->order() - 1) / 4) == 1;
        CHECK(two_is_quartic_residue(p, m) == expected);
        CHECK(is_quartic_residue(*f, f->from_int(2)) == expected);
    }
}
