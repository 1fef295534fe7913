#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycloskew/arith.hpp"
#include "cycloskew/error.hpp"
#include "cycloskew/field.hpp"
#include "oracle.hpp"

using namespace cycloskew;

namespace {

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {13, 1}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}, {2, 8}, {11, 2}, {19, 2}};

}  // namespace

TEST_CASE("prime field with chosen generator")
{
    const auto f2 = Field::build(13, 1, std::nullopt, Elem{2});
    const auto f7 = Field::build(13, 1, std::nullopt, Elem{7});
    CHECK(f2->generator() == 2);
    CHECK(f7->generator() == 7);
    CHECK(f2->exp(1) == 2);
    CHECK(f2->exp(4) == 3);
    CHECK(f7->log(7) == 1);
    CHECK(f2->mul(5, 8) == 1);
    CHECK(f2->inv(5) == 8);
    CHECK(code_of([] { Field::build(13, 1, std::nullopt, Elem{3}); }) == ErrorCode::InvalidGenerator);
}

TEST_CASE("explicit polynomials from the worked examples")
{
    // x^2 + x + 2 over GF(3)
    const auto f9 = Field::build(3, 2, std::vector<std::uint32_t>{2, 1, 1});
    CHECK(f9->order() == 9);
    CHECK(f9->generator() == 3);
    // alpha^2 = -alpha - 2 = 2 alpha + 1
    CHECK(f9->mul(3, 3) == 2 * 3 + 1);

    // x^2 + 2x + 3 over GF(5)
    const auto f25 = Field::build(5, 2, std::vector<std::uint32_t>{3, 2, 1});
    CHECK(f25->order() == 25);
    CHECK(f25->mul(5, 5) == 3 * 5 + 2);
}

TEST_CASE("default polynomial is the smallest primitive one")
{
    CHECK(default_primitive_polynomial(3, 2) == std::vector<std::uint32_t>{2, 1, 1});
    CHECK(default_primitive_polynomial(2, 3) == std::vector<std::uint32_t>{1, 0, 1, 1});
    for (auto [p, m] : kSmallFields) {
        const auto poly = default_primitive_polynomial(p, m);
        CHECK(is_primitive_polynomial(p, poly));
        const Elem root = m == 1 ? (p - poly[0]) % p : p;
        CHECK(Field::build(p, m)->generator() == root);
        CHECK(oracle::NaiveField(p, poly).order_of(root) == arith::ipow(p, m) - 1);
        // every smaller monic candidate fails; c0 is the most significant digit
        std::vector<std::uint32_t> cand(m + 1, 0);
        cand[m] = 1;
        while (cand != poly) {
            CHECK_FALSE(is_primitive_polynomial(p, cand));
            std::uint32_t i = m - 1;
            while (++cand[i] == p) {
                cand[i--] = 0;
            }
        }
    }
}

TEST_CASE("build errors")
{
    CHECK(code_of([] { Field::build(12, 1); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { Field::build(3, 2, std::vector<std::uint32_t>{1, 0, 1}); }) ==
          ErrorCode::NotPrimitivePolynomial);
    CHECK(code_of([] { Field::build(2, 32); }) == ErrorCode::FieldTooLarge);
    const auto f = Field::build(7, 1);
    CHECK(code_of([&] { f->inv(0); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([&] { f->log(0); }) == ErrorCode::ZeroHasNoLog);
}

TEST_CASE("arithmetic matches the polynomial oracle")
{
    std::mt19937 rng(7);
    for (auto [p, m] : kSmallFields) {
        const auto f = Field::build(p, m);
        const oracle::NaiveField ref(p, f->spec().poly);
        std::uniform_int_distribution<Elem> any(0, f->order() - 1);
        for (int i = 0; i < 500; ++i) {
            const Elem a = any(rng);
            const Elem b = any(rng);
            CHECK(f->add(a, b) == ref.add(a, b));
            CHECK(f->sub(a, b) == ref.sub(a, b));
            CHECK(f->neg(a) == ref.neg(a));
            CHECK(f->mul(a, b) == ref.mul(a, b));
            CHECK(f->add_one(a) == ref.add(a, 1));
            if (a != 0) {
                CHECK(ref.mul(a, f->inv(a)) == 1);
                CHECK(f->pow(a, 5) == ref.pow(a, 5));
                CHECK(f->pow(a, -1) == f->inv(a));
            }
        }
        CHECK(ref.order_of(f->generator()) == f->order() - 1);
    }
}

TEST_CASE("exp and log are inverse")
{
    for (auto [p, m] : kSmallFields) {
        const auto f = Field::build(p, m);
        const std::int64_t n = f->order() - 1;
        for (std::int64_t k = 0; k < n; ++k) {
            CHECK(f->log(f->exp(k)) == k);
        }
        for (Elem x : f->nonzero()) {
            CHECK(f->exp(f->log(x)) == x);
        }
        CHECK(f->exp(-1) == f->exp(n - 1));
        CHECK(f->exp(n) == 1);
    }
}

TEST_CASE("exp is a homomorphism")
{
    std::mt19937_64 rng(11);
    for (auto [p, m] : kSmallFields) {
        const auto f = Field::build(p, m);
        const std::int64_t n = f->order() - 1;
        std::uniform_int_distribution<std::int64_t> k(0, 4 * n);
        for (int i = 0; i < 1000; ++i) {
            const std::int64_t a = k(rng);
            const std::int64_t b = k(rng);
            CHECK(f->mul(f->exp(a), f->exp(b)) == f->exp((a + b) % n));
        }
    }
}

TEST_CASE("product of the nonzero elements is -1")
{
    for (std::uint32_t q = 2; q <= 10000; ++q) {
        const auto pm = arith::as_prime_power(q);
        if (!pm) {
            continue;
        }
        const auto f = Field::build(static_cast<std::uint32_t>(pm->first), pm->second);
        Elem prod = 1;
        for (Elem x = 1; x < f->order(); ++x) {
            prod = f->mul(prod, x);
        }
        CHECK(prod == f->neg(1));
    }
}

TEST_CASE("generator override keeps the polynomial")
{
    const auto f = Field::build(5, 2);
    for (Elem g : f->nonzero()) {
        if (oracle::NaiveField(5, f->spec().poly).order_of(g) != 24) {
            continue;
        }
        const auto h = f->with_generator(g);
        CHECK(h->spec().poly == f->spec().poly);
        CHECK(h->exp(1) == g);
        CHECK(h->mul(7, 13) == f->mul(7, 13));
    }
}

TEST_CASE("field spec text round trip")
{
    const auto f = Field::build(3, 2, std::vector<std::uint32_t>{2, 2, 1});
    const FieldSpec spec = FieldSpec::parse(f->spec().to_string());
    CHECK(spec == f->spec());
    CHECK(Field::build(spec)->spec() == f->spec());
}
