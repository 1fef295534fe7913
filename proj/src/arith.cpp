#include "cycloskew/arith.hpp"

#include <cmath>

namespace cycloskew::arith {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) {
            result = mul_mod(result, base, mod);
        }
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t witness : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(witness, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

bool is_square(std::uint64_t n)
{
    const std::uint64_t r = isqrt(n);
    return r * r == n;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp)
{
    std::uint64_t result = 1;
    while (exp-- > 0) {
        result *= base;
    }
    return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> as_prime_power(std::uint64_t n)
{
    if (n < 2) {
        return std::nullopt;
    }
    auto factors = prime_factors(n);
    if (factors.size() != 1) {
        return std::nullopt;
    }
    const std::uint64_t p = factors.front();
    std::uint32_t m = 0;
    while (n > 1) {
        n /= p;
        ++m;
    }
    return std::make_pair(p, m);
}

}  // namespace cycloskew::arith
