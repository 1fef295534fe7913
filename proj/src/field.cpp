#include "cycloskew/field.hpp"

#include <numeric>
#include <sstream>

#include "cycloskew/arith.hpp"
#include "cycloskew/error.hpp"

namespace cycloskew {

namespace {

using Residue = std::vector<std::uint64_t>;

// Product of two residues modulo the monic polynomial `poly` over GF(p).
Residue mul_residue(const Residue& a, const Residue& b, std::span<const std::uint32_t> poly,
                    std::uint64_t p)
{
    const std::size_t m = poly.size() - 1;
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
            prod[i + j] = (prod[i + j] + arith::mul_mod(a[i], b[j], p)) % p;
        }
    }
    for (std::size_t d = prod.size(); d-- > m;) {
        const std::uint64_t c = prod[d];
        if (c == 0) {
            continue;
        }
        // x^d = x^(d-m) * x^m and x^m = -(poly[0] + ... + poly[m-1] x^(m-1)).
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint64_t sub = arith::mul_mod(c, poly[i], p);
            std::uint64_t& slot = prod[d - m + i];
            slot = (slot + p - sub) % p;
        }
        prod[d] = 0;
    }
    prod.resize(m);
    return prod;
}

Residue pow_x(std::uint64_t e, std::span<const std::uint32_t> poly, std::uint64_t p)
{
    const std::size_t m = poly.size() - 1;
    Residue result(m, 0);
    result[0] = 1;
    Residue base(m, 0);
    if (m == 1) {
        base[0] = (p - poly[0] % p) % p;
    } else {
        base[1] = 1;
    }
    while (e > 0) {
        if (e & 1) {
            result = mul_residue(result, base, poly, p);
        }
        base = mul_residue(base, base, poly, p);
        e >>= 1;
    }
    return result;
}

bool is_one(const Residue& r)
{
    if (r[0] != 1) {
        return false;
    }
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i] != 0) {
            return false;
        }
    }
    return true;
}

void check_field_params(std::uint32_t p, std::uint32_t m)
{
    if (!arith::is_prime(p)) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
    if (m == 0) {
        throw Error(ErrorCode::FieldTooLarge, "extension degree must be positive");
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw Error(ErrorCode::FieldTooLarge,
                        std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^31");
        }
    }
}

}  // namespace

std::uint64_t FieldSpec::order() const
{
    return arith::ipow(p, m);
}

std::string FieldSpec::to_string() const
{
    std::ostringstream out;
    out << p << ',' << m << ",poly=[";
    for (std::size_t i = 0; i < poly.size(); ++i) {
        out << (i ? "," : "") << poly[i];
    }
    out << "],generator=" << generator;
    return out.str();
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    auto fail = [&]() -> FieldSpec {
        throw Error(ErrorCode::ParseError, "bad field spec '" + text + "'");
    };
    FieldSpec spec;
    std::istringstream in(text);
    char comma = 0;
    if (!(in >> spec.p >> comma) || comma != ',' || !(in >> spec.m >> comma) || comma != ',') {
        return fail();
    }
    std::string rest;
    std::getline(in, rest);
    const std::string poly_tag = "poly=[";
    if (rest.rfind(poly_tag, 0) != 0) {
        return fail();
    }
    const auto close = rest.find(']');
    if (close == std::string::npos) {
        return fail();
    }
    std::istringstream coeffs(rest.substr(poly_tag.size(), close - poly_tag.size()));
    std::string token;
    while (std::getline(coeffs, token, ',')) {
        try {
            spec.poly.push_back(static_cast<std::uint32_t>(std::stoul(token)));
        } catch (const std::exception&) {
            return fail();
        }
    }
    const std::string gen_tag = ",generator=";
    if (rest.compare(close + 1, gen_tag.size(), gen_tag) != 0) {
        return fail();
    }
    try {
        spec.generator = static_cast<Elem>(std::stoul(rest.substr(close + 1 + gen_tag.size())));
    } catch (const std::exception&) {
        return fail();
    }
    return spec;
}

bool is_primitive_polynomial(std::uint32_t p, std::span<const std::uint32_t> poly)
{
    if (poly.size() < 2 || poly.back() != 1) {
        return false;
    }
    const auto m = static_cast<std::uint32_t>(poly.size() - 1);
    const std::uint64_t q = arith::ipow(p, m);
    if (poly[0] % p == 0 && q > 2) {
        return false;
    }
    if (!is_one(pow_x(q - 1, poly, p))) {
        return false;
    }
    for (std::uint64_t r : arith::prime_factors(q - 1)) {
        if (is_one(pow_x((q - 1) / r, poly, p))) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_primitive_polynomial(std::uint32_t p, std::uint32_t m)
{
    check_field_params(p, m);
    // Lexicographic order on (c0, c1, ..., c_{m-1}) with c0 most significant.
    std::vector<std::uint32_t> poly(m + 1, 0);
    poly[m] = 1;
    const std::uint64_t count = arith::ipow(p, m);
    for (std::uint64_t n = 0; n < count; ++n) {
        std::uint64_t rest = n;
        for (std::uint32_t i = m; i-- > 0;) {
            poly[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (is_primitive_polynomial(p, poly)) {
            return poly;
        }
    }
    throw Error(ErrorCode::NotPrimitivePolynomial, "no primitive polynomial found");
}

FieldPtr Field::build(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> poly,
                      std::optional<Elem> generator)
{
    check_field_params(p, m);
    std::vector<std::uint32_t> f;
    if (poly) {
        f = *poly;
        if (f.size() != m + 1 || f.back() != 1) {
            throw Error(ErrorCode::NotPrimitivePolynomial, "polynomial must be monic of degree m");
        }
        for (auto c : f) {
            if (c >= p) {
                throw Error(ErrorCode::NotPrimitivePolynomial, "coefficient out of range");
            }
        }
        if (!is_primitive_polynomial(p, f)) {
            throw Error(ErrorCode::NotPrimitivePolynomial, "polynomial is not primitive");
        }
    } else {
        f = default_primitive_polynomial(p, m);
    }

    auto field = std::shared_ptr<Field>(new Field());
    field->q_ = static_cast<std::uint32_t>(arith::ipow(p, m));
    field->spec_.p = p;
    field->spec_.m = m;
    field->spec_.poly = f;
    field->places_.resize(m);
    for (std::uint32_t i = 0, v = 1; i < m; ++i, v *= p) {
        field->places_[i] = v;
    }

    const std::uint32_t n = field->q_ - 1;
    field->exp_.resize(n);
    field->log_.assign(field->q_, kNoLog);

    // Walk the powers of the root of f.
    std::vector<std::uint64_t> digits(m, 0);
    digits[0] = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        std::uint64_t code = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            code += digits[i] * field->places_[i];
        }
        field->exp_[k] = static_cast<Elem>(code);
        field->log_[code] = k;
        if (m == 1) {
            digits[0] = arith::mul_mod(digits[0], (p - f[0] % p) % p, p);
        } else {
            const std::uint64_t top = digits[m - 1];
            for (std::uint32_t i = m - 1; i > 0; --i) {
                digits[i] = digits[i - 1];
            }
            digits[0] = 0;
            if (top != 0) {
                for (std::uint32_t i = 0; i < m; ++i) {
                    digits[i] = (digits[i] + p - arith::mul_mod(top, f[i], p)) % p;
                }
            }
        }
    }
    field->spec_.generator = field->exp_.empty() ? 1 : field->exp_[n > 1 ? 1 : 0];
    if (!generator || *generator == field->spec_.generator) {
        return field;
    }
    return field->with_generator(*generator);
}

FieldPtr Field::build(const FieldSpec& spec)
{
    return build(spec.p, spec.m, spec.poly, spec.generator);
}

FieldPtr Field::with_generator(Elem generator) const
{
    if (generator == 0 || generator >= q_) {
        throw Error(ErrorCode::InvalidGenerator, "generator code out of range");
    }
    const std::uint64_t n = q_ - 1;
    const std::uint64_t j = log_[generator];
    if (arith::gcd(j, n) != 1 && n > 1) {
        throw Error(ErrorCode::InvalidGenerator,
                    std::to_string(generator) + " is not a primitive element");
    }
    // Inverse of j modulo n by extended Euclid.
    std::int64_t old_r = static_cast<std::int64_t>(j), r = static_cast<std::int64_t>(n);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_s -= quot * s;
        std::swap(old_s, s);
    }
    const auto j_inv = static_cast<std::uint64_t>(arith::mod(old_s, static_cast<std::int64_t>(n)));

    auto field = std::shared_ptr<Field>(new Field(*this));
    field->spec_.generator = generator;
    for (std::uint64_t k = 0; k < n; ++k) {
        field->exp_[k] = exp_[arith::mul_mod(k, j, n)];
    }
    for (std::uint64_t code = 1; code < q_; ++code) {
        field->log_[code] = static_cast<std::uint32_t>(arith::mul_mod(log_[code], j_inv, n));
    }
    return field;
}

Elem Field::add(Elem a, Elem b) const
{
    const std::uint32_t p = spec_.p;
    if (spec_.m == 1) {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= p ? s - p : s);
    }
    Elem result = 0;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        std::uint32_t d = a % p + b % p;
        if (d >= p) {
            d -= p;
        }
        result += d * places_[i];
        a /= p;
        b /= p;
    }
    return result;
}

Elem Field::neg(Elem a) const
{
    const std::uint32_t p = spec_.p;
    if (spec_.m == 1) {
        return a == 0 ? 0 : p - a;
    }
    Elem result = 0;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        const std::uint32_t d = a % p;
        result += (d == 0 ? 0 : p - d) * places_[i];
        a /= p;
    }
    return result;
}

Elem Field::sub(Elem a, Elem b) const
{
    return add(a, neg(b));
}

Elem Field::mul(Elem a, Elem b) const
{
    if (a == 0 || b == 0) {
        return 0;
    }
    std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    const std::uint64_t n = q_ - 1;
    if (s >= n) {
        s -= n;
    }
    return exp_[s];
}

Elem Field::inv(Elem a) const
{
    if (a == 0) {
        throw Error(ErrorCode::DivisionByZero, "zero has no inverse");
    }
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Elem Field::div(Elem a, Elem b) const
{
    return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::int64_t e) const
{
    if (a == 0) {
        if (e < 0) {
            throw Error(ErrorCode::DivisionByZero, "negative power of zero");
        }
        return e == 0 ? 1 : 0;
    }
    const auto n = static_cast<std::int64_t>(q_ - 1);
    const auto k = static_cast<std::uint64_t>(arith::mod(e % n, n));
    return exp_[arith::mul_mod(log_[a], k, static_cast<std::uint64_t>(n))];
}

std::uint32_t Field::log(Elem x) const
{
    if (x == 0) {
        throw Error(ErrorCode::ZeroHasNoLog, "log(0) is undefined");
    }
    if (x >= q_) {
        throw Error(ErrorCode::ElementOutOfRange, "code " + std::to_string(x) + " outside field");
    }
    return log_[x];
}

Elem Field::exp(std::int64_t k) const noexcept
{
    const auto n = static_cast<std::int64_t>(q_ - 1);
    return exp_[static_cast<std::size_t>(arith::mod(k, n))];
}

Elem Field::from_int(std::int64_t value) const noexcept
{
    return static_cast<Elem>(arith::mod(value, spec_.p));
}

std::vector<Elem> Field::nonzero() const
{
    std::vector<Elem> out(q_ - 1);
    std::iota(out.begin(), out.end(), Elem{1});
    return out;
}

}  // namespace cycloskew
