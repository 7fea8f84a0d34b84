#ifndef GALHULL_ARITH_HPP
#define GALHULL_ARITH_HPP

// Machine-integer number theory shared by the field and construction code.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace galhull::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// b^e, or nullopt when the result does not fit in 63 bits.
inline std::optional<u64> checked_pow(u64 b, unsigned e) {
    constexpr u64 kLimit = u64{1} << 63;
    u64 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && r > kLimit / b) return std::nullopt;
        r *= b;
    }
    return r;
}

inline u64 ipow(u64 b, unsigned e) {
    auto r = checked_pow(b, e);
    if (!r) throw InvalidArgument("integer power overflows 63 bits");
    return *r;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Distinct prime factors in increasing order (trial division; fine below 2^48).
inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

struct ExtendedGcd {
    i128 g, x, y;  // g = a*x + b*y
};

inline ExtendedGcd extended_gcd(i128 a, i128 b) {
    i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i128 quot = old_r / r;
        i128 tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
        tmp = old_t - quot * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/// Inverse of a modulo m (gcd(a, m) must be 1).
inline u64 inverse_mod(u64 a, u64 m) {
    if (m == 1) return 0;
    auto eg = extended_gcd(static_cast<i128>(a % m), static_cast<i128>(m));
    if (eg.g != 1) throw InvalidArgument("value is not invertible modulo m");
    i128 x = eg.x % static_cast<i128>(m);
    if (x < 0) x += m;
    return static_cast<u64>(x);
}

inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i128 mod_floor(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace galhull::arith

#endif  // GALHULL_ARITH_HPP
