#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cycloskew {

/// Field element code: the base-p integer whose digit i is the coefficient of x^i
/// in the residue polynomial. Code 0 is the additive identity, code 1 the
/// multiplicative identity.
using Elem = std::uint32_t;

/// Sorted, duplicate-free list of element codes.
using ElemSet = std::vector<Elem>;

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    /// m+1 coefficients, constant term first, monic.
    std::vector<std::uint32_t> poly;
    Elem generator = 0;

    std::uint64_t order() const;

    /// `p,m,poly=[c0,...,cm],generator=<code>`
    std::string to_string() const;
    static FieldSpec parse(const std::string& text);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) with dense exp/log tables over a fixed primitive element.
///
/// Immutable after construction. mul/inv/pow/log are O(1) table lookups;
/// add/sub work digit-wise on the base-p code.
class Field {
public:
    /// Builds GF(p^m). When `poly` is omitted the lexicographically smallest
    /// (constant term first) monic primitive polynomial of degree m is used.
    /// When `generator` is omitted the root of the polynomial is the primitive
    /// element; otherwise `generator` must be a primitive element code.
    static FieldPtr build(std::uint32_t p, std::uint32_t m,
                          std::optional<std::vector<std::uint32_t>> poly = std::nullopt,
                          std::optional<Elem> generator = std::nullopt);

    static FieldPtr build(const FieldSpec& spec);

    /// Same field and polynomial, different primitive element. O(q).
    FieldPtr with_generator(Elem generator) const;

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t characteristic() const noexcept { return spec_.p; }
    std::uint32_t degree() const noexcept { return spec_.m; }
    std::uint32_t order() const noexcept { return q_; }
    Elem generator() const noexcept { return spec_.generator; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::int64_t e) const;

    /// a + 1; the hot step of cyclotomic-number counting.
    Elem add_one(Elem a) const noexcept
    {
        return (a % spec_.p == spec_.p - 1) ? a - (spec_.p - 1) : a + 1;
    }

    /// Discrete logarithm to the base of the generator, in [0, q-1).
    std::uint32_t log(Elem x) const;
    /// generator^k for any k (reduced mod q-1).
    Elem exp(std::int64_t k) const noexcept;

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t value) const noexcept;
    bool in_prime_subfield(Elem x) const noexcept { return x < spec_.p; }

    std::span<const Elem> exp_table() const noexcept { return exp_; }
    std::span<const std::uint32_t> log_table() const noexcept { return log_; }

    /// Power p^i, i < m.
    std::uint32_t place(std::uint32_t i) const noexcept { return places_[i]; }

    /// Every nonzero element, in increasing code order.
    std::vector<Elem> nonzero() const;

    static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

private:
    Field() = default;

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> places_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

/// Lexicographically smallest monic primitive polynomial of degree m over GF(p).
std::vector<std::uint32_t> default_primitive_polynomial(std::uint32_t p, std::uint32_t m);

/// True if the root of the monic polynomial has multiplicative order p^m - 1.
bool is_primitive_polynomial(std::uint32_t p, std::span<const std::uint32_t> poly);

}  // namespace cycloskew
