#ifndef GALHULL_NUMBER_THEORY_HPP
#define GALHULL_NUMBER_THEORY_HPP

/**
 * @file number_theory.hpp
 * @brief Integer arithmetic behind the hull constructions: gcd(p^r+1, p^s-1), Bezout twists and
 * dimension bounds.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "arith.hpp"
#include "errors.hpp"

namespace galhull {

/**
 * gcd(p^r + 1, p^s - 1) without forming the powers:
 * 1 if s/gcd(r,s) is odd and p = 2, 2 if s/gcd(r,s) is odd and p is odd, p^gcd(r,s) + 1 otherwise.
 */
inline std::uint64_t galois_gcd(std::uint64_t p, unsigned r, unsigned s) {
    if (p < 2) throw InvalidArgument("galois_gcd needs p >= 2");
    if (s < 1) throw InvalidArgument("galois_gcd needs s >= 1");
    const unsigned d = std::gcd(r, s);
    if ((s / d) % 2 == 1) return p % 2 == 0 ? 1 : 2;
    return arith::ipow(p, d) + 1;
}

struct Bezout {
    arith::i128 mu = 0;
    arith::i128 nu = 0;
};

/**
 * mu (p^e' + 1) + nu (p^h - 1) = target with 0 <= mu < (p^h - 1) / gcd.
 * The identity is checked exactly in 128-bit integers.
 */
inline Bezout bezout_twist(std::uint64_t p, unsigned h, unsigned e_prime, std::uint64_t target) {
    using arith::i128;
    const i128 a = static_cast<i128>(arith::ipow(p, e_prime)) + 1;
    const i128 b = static_cast<i128>(arith::ipow(p, h)) - 1;
    const auto eg = arith::extended_gcd(a, b);
    const i128 t = static_cast<i128>(target);
    if (t % eg.g != 0) {
        throw HypothesisError("target " + std::to_string(target) + " is not a multiple of gcd(p^e'+1, p^h-1) = " +
                              std::to_string(static_cast<std::int64_t>(eg.g)));
    }
    const i128 scale = t / eg.g;
    const i128 period = b / eg.g;
    const i128 mu = arith::mod_floor(eg.x * scale, period);
    const i128 rest = t - mu * a;
    if (rest % b != 0) throw InternalError("Bezout normalization broke the identity");
    const Bezout out{mu, rest / b};
    if (out.mu * a + out.nu * b != t) throw InternalError("Bezout identity does not hold");
    return out;
}

/// floor((p^e' + n - 1 - deg_h) / (p^e' + 1)).
inline std::int64_t dimension_bound(std::uint64_t p, unsigned e_prime, std::uint64_t n, std::int64_t deg_h) {
    if (deg_h < 0) throw InvalidArgument("deg_h must be nonnegative (use 0 for a constant h)");
    if (n < 2) throw InvalidArgument("dimension_bound needs n >= 2");
    const arith::i128 pe = arith::ipow(p, e_prime);
    return static_cast<std::int64_t>(arith::floor_div(pe + n - 1 - deg_h, pe + 1));
}

/// floor((sqrt(q) + n - 1) / (sqrt(q) + 1)), the usual Hermitian self-orthogonal dimension cap.
inline std::int64_t hermitian_reference_bound(std::uint64_t p, unsigned h, std::uint64_t n) {
    if (h % 2 != 0) throw InvalidArgument("h must be even");
    const arith::i128 r = arith::ipow(p, h / 2);
    return static_cast<std::int64_t>(arith::floor_div(r + n - 1, r + 1));
}

/**
 * floor(log_p((sqrt(q)(n-3) - (sqrt(q)+1) deg_h - 1) / (sqrt(q) + n - 1))), the largest e' for which
 * the comparison condition on e' holds. nullopt when the argument of the logarithm is below 1.
 */
inline std::optional<unsigned> comparison_threshold(std::uint64_t p, unsigned h, std::uint64_t n, std::int64_t deg_h) {
    if (h % 2 != 0) throw InvalidArgument("h must be even");
    using arith::i128;
    const i128 r = arith::ipow(p, h / 2);
    const i128 num = r * (static_cast<i128>(n) - 3) - (r + 1) * deg_h - 1;
    const i128 den = r + static_cast<i128>(n) - 1;
    if (num < den) return std::nullopt;
    unsigned e = 0;
    i128 pe = p;  // p^(e+1)
    while (pe * den <= num) {
        ++e;
        pe *= p;
    }
    return e;
}

struct BoundComparison {
    bool condition1 = false;  // deg_h = 0 and n >= 3
    bool condition2 = false;  // deg_h > 0 with the e' threshold and length requirement
    std::int64_t new_bound = 0;
    std::int64_t reference_bound = 0;

    bool holds() const noexcept { return condition1 || condition2; }
    bool strictly_larger() const noexcept { return new_bound > reference_bound; }
};

/**
 * Whether the twisted-construction bound floor((p^e'+n-1-deg_h)/(p^e'+1)) is claimed to exceed
 * floor((sqrt(q)+n-1)/(sqrt(q)+1)). Requires h even and 0 <= e' < h/2.
 *
 * Both bounds are reported so callers can check the claim. Under condition 2 the strict inequality
 * always holds. Under condition 1 only new_bound >= reference_bound is guaranteed: for example
 * p = 3, h = 4, e' = 0, n = 3 gives 1 and 1.
 */
inline BoundComparison bound_comparison(std::uint64_t p, unsigned h, unsigned e_prime, std::int64_t deg_h, std::uint64_t n) {
    if (h % 2 != 0) throw InvalidArgument("h must be even");
    if (e_prime >= h / 2) throw InvalidArgument("e' must satisfy 0 <= e' < h/2");
    if (deg_h < 0) throw InvalidArgument("deg_h must be nonnegative");
    BoundComparison out;
    out.condition1 = deg_h == 0 && n >= 3;
    if (deg_h > 0) {
        const arith::i128 r = arith::ipow(p, h / 2);
        const auto threshold = comparison_threshold(p, h, n, deg_h);
        const arith::i128 min_n = arith::floor_div(4 * r + (r + 1) * deg_h, r - 1);
        out.condition2 = threshold && e_prime <= *threshold && static_cast<arith::i128>(n) >= min_n;
    }
    out.new_bound = n >= 2 ? dimension_bound(p, e_prime, n, deg_h) : 0;
    out.reference_bound = hermitian_reference_bound(p, h, n);
    return out;
}

/// The t with 2^t = p^e + 1, if any.
inline std::optional<unsigned> mersenne_feasible(std::uint64_t p, unsigned e) {
    const auto pe = arith::checked_pow(p, e);
    if (!pe) return std::nullopt;
    const std::uint64_t x = *pe + 1;
    if ((x & (x - 1)) != 0) return std::nullopt;
    unsigned t = 0;
    while ((std::uint64_t{1} << t) < x) ++t;
    return t;
}

}  // namespace galhull

#endif  // GALHULL_NUMBER_THEORY_HPP
