#ifndef GALHULL_GRS_HPP
#define GALHULL_GRS_HPP

/**
 * @file grs.hpp
 * @brief Generalized Reed-Solomon codes and their e-Galois self-orthogonality witnesses.
 *
 * GRS_k(a, v) = {(v_1 f(a_1), ..., v_n f(a_n)) : deg f < k}. The extended code appends the
 * coefficient f_{k-1} as coordinate n+1. With u_i = prod_{j != i} (a_i - a_j)^{-1}, a codeword of
 * message f lies in the e-Galois dual iff the interpolant g of the points
 * (a_i, u_i^{-1} v_i^{p^e+1} f(a_i)^{p^e}) has degree <= n-k-1 (for the extended code: degree
 * <= n-k with g_{n-k} = -f_{k-1}^{p^e}).
 *
 * When the code is self-orthogonal, taking f = 1 gives g with lambda * u_i * h(a_i) = v_i^{p^e+1}
 * for the monic h = g / lead(g) and lambda = lead(g). The degree of h caps the dimensions that the
 * twisting constructions can reach.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace galhull {

struct GrsSpec {
    Field field;
    std::vector<Element> a;  // code locators, pairwise distinct
    std::vector<Element> v;  // column multipliers, nonzero
    std::size_t k = 1;
    bool extended = false;

    std::size_t n() const noexcept { return a.size(); }
    /// Code length: n, plus one for the extended coordinate.
    std::size_t length() const noexcept { return a.size() + (extended ? 1 : 0); }

    void validate() const {
        if (a.size() != v.size()) throw InvalidArgument("locator and multiplier vectors differ in length");
        if (a.size() < 2) throw InvalidArgument("a GRS code needs at least two locators");
        if (k < 1) throw InvalidArgument("GRS dimension k must be at least 1");
        if (k > a.size()) throw InvalidArgument("GRS dimension k exceeds the number of locators");
        for (std::size_t i = 0; i < a.size(); ++i) {
            field.check(a[i]);
            field.check(v[i]);
            if (v[i].is_zero()) throw InvalidArgument("column multiplier " + std::to_string(i) + " is zero");
        }
        std::vector<std::uint64_t> values;
        for (const auto& x : a) values.push_back(x.value());
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
            throw InvalidArgument("code locators are not pairwise distinct");
        }
    }
};

/// x^(p^e + 1), the e-Galois "norm-like" power used throughout.
inline Element galois_norm(const Element& x, unsigned e) { return x * frobenius(x, e); }

/// u_i = prod_{j != i} (a_i - a_j)^{-1}.
inline std::vector<Element> compute_u(std::span<const Element> a) {
    if (a.size() < 2) throw InvalidArgument("compute_u needs at least two locators");
    const Field f = a.front().field();
    std::vector<Element> u;
    u.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Element prod = f.one();
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j == i) continue;
            const Element diff = a[i] - a[j];
            if (diff.is_zero()) throw InvalidArgument("repeated code locator");
            prod *= diff;
        }
        u.push_back(prod.inverse());
    }
    return u;
}

/// Rows r = 0..k-1 are (v_i a_i^r); the extended column is (0, ..., 0, 1)^T.
inline LinearCode generator_matrix(const GrsSpec& spec) {
    spec.validate();
    Matrix g(spec.field, spec.k, spec.length());
    for (std::size_t i = 0; i < spec.n(); ++i) {
        Element x = spec.v[i];
        for (std::size_t r = 0; r < spec.k; ++r) {
            g(r, i) = x;
            x *= spec.a[i];
        }
    }
    if (spec.extended) g(spec.k - 1, spec.n()) = spec.field.one();
    return LinearCode(std::move(g));
}

/// The codeword of message polynomial f (deg f < k).
inline std::vector<Element> encode(const GrsSpec& spec, const Poly& f) {
    if (f.degree() >= static_cast<int>(spec.k)) throw InvalidArgument("message degree must be below k");
    std::vector<Element> c;
    for (std::size_t i = 0; i < spec.n(); ++i) c.push_back(spec.v[i] * f(spec.a[i]));
    if (spec.extended) c.push_back(f.coeff(spec.k - 1));
    return c;
}

/**
 * The polynomial g certifying that the codeword of f lies in the e-Galois dual, or nullopt when it
 * does not. g interpolates (a_i, u_i^{-1} v_i^{p^e+1} f(a_i)^{p^e}); membership holds iff
 * deg g <= n-k-1, or for extended codes deg g <= n-k with g_{n-k} = -f_{k-1}^{p^e}.
 */
inline std::optional<Poly> dual_membership_witness(const GrsSpec& spec, const Poly& f, unsigned e) {
    spec.validate();
    if (f.degree() >= static_cast<int>(spec.k)) throw InvalidArgument("message degree must be below k");
    const auto u = compute_u(spec.a);
    std::vector<Element> ys;
    for (std::size_t i = 0; i < spec.n(); ++i) {
        ys.push_back(galois_norm(spec.v[i], e) * frobenius(f(spec.a[i]), e) / u[i]);
    }
    Poly g = Poly::interpolate(spec.field, spec.a, ys);
    const int n = static_cast<int>(spec.n()), k = static_cast<int>(spec.k);
    if (!spec.extended) {
        if (g.degree() <= n - k - 1) return g;
        return std::nullopt;
    }
    if (g.degree() > n - k) return std::nullopt;
    if (g.coeff(spec.n() - spec.k) != -frobenius(f.coeff(spec.k - 1), e)) return std::nullopt;
    return g;
}

/// True iff G * (G^(p^e))^T = 0, i.e. the code lies in its own e-Galois dual.
inline bool check_self_orthogonal(const GrsSpec& spec, unsigned e) {
    const Matrix g = generator_matrix(spec).generator();
    const Matrix twisted = g.map([e](const Element& x) { return frobenius(x, e); });
    return (g * twisted.transpose()).is_zero();
}

struct SelfOrthogonalWitness {
    Poly h;  // monic
    Element lambda;
    unsigned e = 0;
    Poly g;  // lambda * h

    int deg_h() const noexcept { return h.degree(); }
};

/// Checks lambda * u_i * h(a_i) = v_i^{p^e+1} at every locator.
inline bool verify_witness(const GrsSpec& spec, const SelfOrthogonalWitness& w) {
    if (!w.h.is_monic() || w.lambda.is_zero()) return false;
    const auto u = compute_u(spec.a);
    for (std::size_t i = 0; i < spec.n(); ++i) {
        if (w.lambda * u[i] * w.h(spec.a[i]) != galois_norm(spec.v[i], w.e)) return false;
    }
    return true;
}

/**
 * Recovers (h, lambda) for an e-Galois self-orthogonal (extended) GRS code by interpolating
 * (a_i, u_i^{-1} v_i^{p^e+1}) and normalizing by the leading coefficient.
 * Extended codes need k >= 2. A degree above n-k-1 is impossible for a self-orthogonal code and
 * raises InternalError.
 */
inline SelfOrthogonalWitness recover_h(const GrsSpec& spec, unsigned e) {
    spec.validate();
    if (spec.extended && spec.k < 2) throw HypothesisError("extended self-orthogonal seed needs k >= 2");
    if (!check_self_orthogonal(spec, e)) {
        throw HypothesisError("code is not " + std::to_string(e) + "-Galois self-orthogonal");
    }
    const auto u = compute_u(spec.a);
    std::vector<Element> ys;
    for (std::size_t i = 0; i < spec.n(); ++i) ys.push_back(galois_norm(spec.v[i], e) / u[i]);
    Poly g = Poly::interpolate(spec.field, spec.a, ys);
    if (g.degree() > static_cast<int>(spec.n()) - static_cast<int>(spec.k) - 1) {
        throw InternalError("interpolated g violates deg g <= n-k-1 for a self-orthogonal code");
    }
    const Element lambda = g.lead();
    Poly h = g.monic();
    return {std::move(h), lambda, e, std::move(g)};
}

/// The first n field elements in packed order, a canonical locator choice.
inline std::vector<Element> first_locators(const Field& f, std::size_t n) {
    if (n > f.q()) throw InvalidArgument("more locators requested than field elements");
    std::vector<Element> a;
    for (std::uint64_t i = 0; i < n; ++i) a.push_back(f.element(i));
    return a;
}

/**
 * Exhaustive search for multipliers v making GRS_k(a, v) (or its extension) e-Galois
 * self-orthogonal.
 *
 * Self-orthogonality only depends on w_i = v_i^{p^e+1}: the Gram entries are
 * sum_i w_i a_i^r a_i^{s p^e} (+1 at r = s = k-1 when extended). The search therefore solves this
 * linear system for w, enumerating the free coordinates over the group of (p^e+1)-th powers only and
 * checking that the implied pivot coordinates are nonzero (p^e+1)-th powers too. The last free
 * coordinate varies fastest; the first hit is returned with v_i the smallest-log root of w_i.
 * Throws InstanceTooLarge when the candidate count exceeds @p limit.
 */
inline std::optional<GrsSpec> find_self_orthogonal_seed(const Field& f, const std::vector<Element>& a, std::size_t k,
                                                        unsigned e, bool extended,
                                                        std::uint64_t limit = 10'000'000) {
    const std::size_t n = a.size();
    GrsSpec probe{f, a, std::vector<Element>(n, f.one()), k, extended};
    probe.validate();
    if (!f.has_log_tables()) throw CapabilityError("seed search needs log tables");

    Matrix system(f, 0, n + 1);
    std::vector<Element> row(n + 1, f.zero());
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t s = 0; s < k; ++s) {
            for (std::size_t i = 0; i < n; ++i) row[i] = a[i].pow(static_cast<std::int64_t>(r)) * frobenius(a[i].pow(static_cast<std::int64_t>(s)), e);
            row[n] = (extended && r == k - 1 && s == k - 1) ? -f.one() : f.zero();
            system.append_row(row);
        }
    }
    const auto red = rref(system);
    if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;  // inconsistent

    const std::uint64_t order = f.q() - 1;
    const std::uint64_t norm_exp = (arith::powmod(f.p(), e, order) + 1) % order;
    const std::uint64_t step = std::gcd(norm_exp, order);  // w must be a power of g^step
    std::vector<Element> powers;
    for (std::uint64_t j = 0; j < order; j += step) powers.push_back(f.exp(j));

    std::vector<bool> is_pivot(n, false);
    for (auto c : red.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        if (total > limit / powers.size()) throw InstanceTooLarge("seed search space exceeds the limit");
        total *= powers.size();
    }

    auto in_group = [&](const Element& x) { return !x.is_zero() && f.log(x) % step == 0; };
    std::vector<std::size_t> digit(free_cols.size(), 0);
    std::vector<Element> w(n, f.zero());
    for (std::uint64_t count = 0; count < total; ++count) {
        for (std::size_t j = 0; j < free_cols.size(); ++j) w[free_cols[j]] = powers[digit[j]];
        bool ok = true;
        for (std::size_t r = 0; r < red.rank && ok; ++r) {
            Element x = red.reduced(r, n);
            for (auto c : free_cols) x -= red.reduced(r, c) * w[c];
            w[red.pivots[r]] = x;
            ok = in_group(x);
        }
        if (ok) {
            GrsSpec spec{f, a, {}, k, extended};
            const std::uint64_t root_degree = arith::powmod(f.p(), e, f.q()) + 1;  // p^e + 1 (< q + 1)
            for (const auto& wi : w) spec.v.push_back(nth_root(wi, root_degree));
            if (!check_self_orthogonal(spec, e)) throw InternalError("seed search produced a non-self-orthogonal code");
            return spec;
        }
        for (std::size_t j = digit.size(); j-- > 0;) {
            if (++digit[j] < powers.size()) break;
            digit[j] = 0;
        }
    }
    return std::nullopt;
}

/// Union of the first s cosets g^c * U of the order-(sqrt(q)+1) subgroup U, so n = s(sqrt(q)+1).
inline std::vector<Element> hermitian_family_locators(const Field& f, std::size_t s) {
    if (f.h() % 2 != 0) throw InvalidArgument("Hermitian family needs an even extension degree");
    const std::uint64_t r = arith::ipow(f.p(), f.h() / 2);
    if (s < 1 || s > r - 1) throw InvalidArgument("Hermitian family needs 1 <= s <= sqrt(q)-1");
    const std::uint64_t step = r - 1;  // (q-1)/(r+1)
    std::vector<Element> a;
    for (std::uint64_t c = 0; c < s; ++c)
        for (std::uint64_t j = 0; j <= r; ++j) a.push_back(f.exp(c + j * step));
    return a;
}

/// Hermitian self-orthogonal GRS_k on the s-coset locators (k <= s-1), multipliers by exhaustive search.
inline std::optional<GrsSpec> hermitian_family_seed(const Field& f, std::size_t s, std::size_t k,
                                                    std::uint64_t limit = 10'000'000) {
    if (k < 1 || k + 1 > s) throw InvalidArgument("Hermitian family needs 1 <= k <= s-1");
    return find_self_orthogonal_seed(f, hermitian_family_locators(f, s), k, f.h() / 2, false, limit);
}

}  // namespace galhull

#endif  // GALHULL_GRS_HPP
