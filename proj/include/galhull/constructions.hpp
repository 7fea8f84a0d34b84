#ifndef GALHULL_CONSTRUCTIONS_HPP
#define GALHULL_CONSTRUCTIONS_HPP

/**
 * @file constructions.hpp
 * @brief MDS (extended) GRS codes with an e'-Galois hull of prescribed dimension l.
 *
 * All three constructions end the same way. They start from multipliers v with
 * lambda * u_i * h(a_i) = v_i^(p^e'+1) for a monic h, then multiply the first s multipliers by an
 * alpha with alpha^(p^e'+1) != 1. The hull then consists of the messages vanishing at
 * a_1..a_s, so its dimension is k - s (or k - 1 - s for the extended code).
 *
 *  - theorem_a_construct: e-Galois self-orthogonal seed, gcd(e', h) = e, h/e even.
 *  - theorem_b_construct: Hermitian self-orthogonal seed, q odd, h/gcd(e', h) odd.
 *  - theorem_c_code: additive coset locators with 2^t = p^e + 1 and 2^t | h/m.
 */

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "grs.hpp"
#include "number_theory.hpp"

namespace galhull {

struct TwistPlan {
    unsigned e_prime = 0;
    std::uint64_t target = 0;  // right-hand side of the Bezout identity
    arith::i128 mu = 1;
    arith::i128 nu = 0;
    Element alpha;
    Element beta;  // alpha^(p^e' + 1), never 1
    std::size_t s = 0;
};

struct Construction {
    GrsSpec spec;
    TwistPlan plan;
};

namespace detail {

inline void check_hull_range(std::size_t k, std::size_t l, bool extended) {
    if (k < 1) throw HypothesisError("k must be at least 1");
    if (extended && l + 1 > k) throw HypothesisError("extended codes need 0 <= l <= k-1");
    if (!extended && l > k) throw HypothesisError("l must satisfy 0 <= l <= k");
}

inline void check_k_bound(std::size_t k, std::int64_t bound) {
    if (static_cast<std::int64_t>(k) > bound) {
        throw HypothesisError("k = " + std::to_string(k) + " exceeds the dimension bound " + std::to_string(bound));
    }
}

inline TwistPlan make_plan(const Field& f, unsigned e_prime, std::uint64_t target, std::size_t k, std::size_t l,
                           bool extended) {
    TwistPlan plan;
    plan.e_prime = e_prime;
    plan.target = target;
    const auto b = bezout_twist(f.p(), f.h(), e_prime, target);
    plan.mu = b.mu;
    plan.nu = b.nu;
    plan.alpha = find_alpha(f, e_prime);
    plan.beta = galois_norm(plan.alpha, e_prime);
    if (plan.beta.is_one()) throw InternalError("alpha^(p^e'+1) = 1");
    plan.s = extended ? k - l - 1 : k - l;
    return plan;
}

/// v_i^mu, then alpha times the first s entries.
inline std::vector<Element> apply_twist(const std::vector<Element>& v, const TwistPlan& plan) {
    std::vector<Element> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Element x = v[i].pow(static_cast<std::int64_t>(plan.mu));
        if (i < plan.s) x *= plan.alpha;
        out.push_back(x);
    }
    return out;
}

/// lambda u_i h(a_i) = w_i^(p^e'+1) for the untwisted multipliers w.
inline void check_rescaled(const GrsSpec& seed, const SelfOrthogonalWitness& wit, const std::vector<Element>& w,
                           unsigned e_prime) {
    const auto u = compute_u(seed.a);
    for (std::size_t i = 0; i < seed.n(); ++i) {
        if (wit.lambda * u[i] * wit.h(seed.a[i]) != galois_norm(w[i], e_prime)) {
            throw InternalError("rescaled multipliers do not satisfy lambda u_i h(a_i) = v_i^(p^e'+1)");
        }
    }
}

inline void check_seed(const GrsSpec& seed, const SelfOrthogonalWitness& wit) {
    seed.validate();
    if (seed.extended && seed.k < 2) throw HypothesisError("extended seed needs dimension m >= 2");
    if (!check_self_orthogonal(seed, wit.e)) {
        throw HypothesisError("seed is not " + std::to_string(wit.e) + "-Galois self-orthogonal");
    }
    if (!verify_witness(seed, wit)) throw HypothesisError("witness does not satisfy lambda u_i h(a_i) = v_i^(p^e+1)");
}

}  // namespace detail

/// q >= 5, 1 <= e, e' <= h-1, h/e even and gcd(e', h) = e.
inline void check_theorem_a_hypotheses(const Field& f, unsigned e, unsigned e_prime) {
    const unsigned h = f.h();
    if (f.q() < 5) throw HypothesisError("q must be at least 5");
    if (e < 1 || e >= h) throw HypothesisError("e must satisfy 1 <= e <= h-1");
    if (e_prime < 1 || e_prime >= h) throw HypothesisError("e' must satisfy 1 <= e' <= h-1");
    if (h % e != 0 || (h / e) % 2 != 0) throw HypothesisError("h/e must be even");
    if (std::gcd(e_prime, h) != e) throw HypothesisError("gcd(e', h) must equal e");
}

/// q odd, h even, 0 <= e' <= h-1 and h/gcd(e', h) odd.
inline void check_theorem_b_hypotheses(const Field& f, unsigned e_prime) {
    const unsigned h = f.h();
    if (f.p() % 2 == 0) throw HypothesisError("q must be odd");
    if (h % 2 != 0) throw HypothesisError("h must be even");
    if (e_prime >= h) throw HypothesisError("e' must satisfy 0 <= e' <= h-1");
    if ((h / std::gcd(e_prime, h)) % 2 == 0) throw HypothesisError("h/gcd(e', h) must be odd");
}

/**
 * [n, k] (or [n+1, k]) MDS code with e'-Galois hull of dimension l from an e-Galois self-orthogonal
 * seed with witness (h, lambda) at e = wit.e.
 */
inline Construction theorem_a_construct(const GrsSpec& seed, const SelfOrthogonalWitness& wit, unsigned e_prime,
                                        std::size_t k, std::size_t l) {
    const Field& f = seed.field;
    const unsigned e = wit.e;
    check_theorem_a_hypotheses(f, e, e_prime);
    detail::check_seed(seed, wit);
    detail::check_hull_range(k, l, seed.extended);
    detail::check_k_bound(k, dimension_bound(f.p(), e_prime, seed.n(), wit.deg_h()));

    TwistPlan plan = detail::make_plan(f, e_prime, arith::ipow(f.p(), e) + 1, k, l, seed.extended);
    const TwistPlan untwisted{plan.e_prime, plan.target, plan.mu, plan.nu, plan.alpha, plan.beta, 0};
    detail::check_rescaled(seed, wit, detail::apply_twist(seed.v, untwisted), e_prime);
    GrsSpec out{f, seed.a, detail::apply_twist(seed.v, plan), k, seed.extended};
    return {std::move(out), std::move(plan)};
}

/**
 * [n, k] (or [n+1, k]) MDS code with e'-Galois hull of dimension l from a Hermitian
 * (e = h/2) self-orthogonal seed.
 */
inline Construction theorem_b_construct(const GrsSpec& seed, const SelfOrthogonalWitness& wit, unsigned e_prime,
                                        std::size_t k, std::size_t l) {
    const Field& f = seed.field;
    const unsigned h = f.h();
    check_theorem_b_hypotheses(f, e_prime);
    if (wit.e != h / 2) throw HypothesisError("seed must be Hermitian self-orthogonal (e = h/2)");
    detail::check_seed(seed, wit);
    detail::check_hull_range(k, l, seed.extended);
    detail::check_k_bound(k, dimension_bound(f.p(), e_prime, seed.n(), wit.deg_h()));

    // v_i^(sqrt(q)+1) lies in GF(sqrt(q)), hence is a square in GF(q).
    std::vector<Element> root;
    for (const auto& x : seed.v) root.push_back(nth_root(galois_norm(x, h / 2), 2));
    TwistPlan plan = detail::make_plan(f, e_prime, 2, k, l, seed.extended);
    const TwistPlan untwisted{plan.e_prime, plan.target, plan.mu, plan.nu, plan.alpha, plan.beta, 0};
    detail::check_rescaled(seed, wit, detail::apply_twist(root, untwisted), e_prime);
    GrsSpec out{f, seed.a, detail::apply_twist(root, plan), k, seed.extended};
    return {std::move(out), std::move(plan)};
}

/// Locators: the union of w cosets H + beta_j eta of a z-dimensional GF(p^m)-subspace H.
struct CosetPointSet {
    Field field;
    unsigned m = 1, z = 1, w = 1, t = 1;
    std::vector<Element> h_basis;      // 1, gamma, ..., gamma^(z-1)
    Element eta;                       // gamma^z
    std::vector<Element> beta_labels;  // first w elements of GF(p^m): 0, then by discrete log
    std::vector<Element> points;       // coset by coset, n = w p^(mz)
    Element epsilon;                   // (prod_{x in H, x != 0} x) (prod_{y in H} (eta - y))^(w-1)

    std::size_t n() const noexcept { return points.size(); }
};

/// The elements of GF(p^m) inside GF(p^h): 0, then gamma^(j (q-1)/(p^m-1)) for j = 0, 1, ...
inline std::vector<Element> subfield_elements(const Field& f, unsigned m) {
    if (m == 0 || f.h() % m != 0) throw InvalidArgument("subfield degree must divide h");
    const std::uint64_t size = arith::ipow(f.p(), m);
    const std::uint64_t step = (f.q() - 1) / (size - 1);
    std::vector<Element> out{f.zero()};
    const Element g = f.generator().pow(static_cast<std::int64_t>(step));
    Element x = f.one();
    for (std::uint64_t j = 0; j + 1 < size; ++j) {
        out.push_back(x);
        x *= g;
    }
    return out;
}

inline CosetPointSet theorem_c_points(const Field& f, unsigned m, unsigned z, unsigned w, unsigned t) {
    const unsigned h = f.h();
    if (f.p() % 2 == 0) throw HypothesisError("p must be odd");
    if (m == 0 || h % m != 0) throw HypothesisError("m must divide h");
    if (z < 1 || z + 1 > h / m) throw HypothesisError("z must satisfy 1 <= z <= h/m - 1");
    const std::uint64_t pm = arith::ipow(f.p(), m);
    if (w < 1 || w > pm) throw HypothesisError("w must satisfy 1 <= w <= p^m");
    if (t < 1 || t >= 63 || (h / m) % (std::uint64_t{1} << t) != 0) throw HypothesisError("2^t must divide h/m");

    CosetPointSet ps{f, m, z, w, t, {}, {}, {}, {}, {}};
    const Element gamma = f.generator();
    for (unsigned i = 0; i < z; ++i) ps.h_basis.push_back(gamma.pow(i));
    ps.eta = gamma.pow(z);
    const auto sub = subfield_elements(f, m);
    ps.beta_labels.assign(sub.begin(), sub.begin() + w);

    // H enumerated with the coefficient of 1 varying fastest.
    std::vector<Element> space;
    std::vector<std::size_t> digit(z, 0);
    const std::uint64_t size = arith::ipow(pm, z);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        Element x = f.zero();
        for (unsigned i = 0; i < z; ++i) x += sub[digit[i]] * ps.h_basis[i];
        space.push_back(x);
        for (unsigned i = 0; i < z; ++i) {
            if (++digit[i] < sub.size()) break;
            digit[i] = 0;
        }
    }
    for (const auto& y : space)
        if (y == ps.eta) throw InternalError("eta lies in H");

    for (const auto& b : ps.beta_labels)
        for (const auto& y : space) ps.points.push_back(y + b * ps.eta);

    Element nonzero_product = f.one(), shift_product = f.one();
    for (const auto& y : space) {
        if (!y.is_zero()) nonzero_product *= y;
        shift_product *= ps.eta - y;
    }
    ps.epsilon = nonzero_product * shift_product.pow(static_cast<std::int64_t>(w) - 1);

    if (ps.points.size() >= 2) {
        for (const auto& ui : compute_u(ps.points)) {
            const Element x = ps.epsilon * ui;
            if (x.is_zero() || !in_subfield(x, m)) throw InternalError("epsilon * u_i is not in GF(p^m)^*");
        }
    }
    return ps;
}

/**
 * [n, k] (or [n+1, k]) MDS code with e-Galois hull of dimension l on the coset locators, with
 * v_i^(2^t) = epsilon u_i before twisting. With l = k (non-extended) the code is e-Galois
 * self-orthogonal with h = 1 and lambda = epsilon.
 */
inline Construction theorem_c_code(const CosetPointSet& ps, unsigned e, std::size_t k, std::size_t l, bool extended) {
    const Field& f = ps.field;
    if (e >= f.h()) throw HypothesisError("e must satisfy 0 <= e <= h-1");
    const auto t = mersenne_feasible(f.p(), e);
    if (!t || *t != ps.t) throw HypothesisError("2^t must equal p^e + 1");
    if (ps.n() < 2) throw HypothesisError("the coset construction needs n >= 2");
    detail::check_hull_range(k, l, extended);
    detail::check_k_bound(k, dimension_bound(f.p(), e, ps.n(), 0));

    const std::uint64_t root_degree = std::uint64_t{1} << ps.t;
    std::vector<Element> v;
    for (const auto& ui : compute_u(ps.points)) v.push_back(nth_root(ps.epsilon * ui, root_degree));
    TwistPlan plan = detail::make_plan(f, e, root_degree, k, l, extended);
    plan.mu = 1;  // target equals p^e + 1, so no rescaling
    plan.nu = 0;
    GrsSpec out{f, ps.points, detail::apply_twist(v, plan), k, extended};
    return {std::move(out), std::move(plan)};
}

}  // namespace galhull

#endif  // GALHULL_CONSTRUCTIONS_HPP
