#ifndef GALHULL_FIELD_HPP
#define GALHULL_FIELD_HPP

/**
 * @file field.hpp
 * @brief Runtime finite fields GF(p^h) and their elements.
 *
 * A field is GF(p)[x]/(f(x)) for a monic irreducible f of degree h. Elements are stored as packed
 * integers v = c_0 + c_1 p + ... + c_{h-1} p^{h-1}, where c_i is the coefficient of x^i in the power
 * basis. Ordering elements by v is the same as ordering their digit strings (highest power first)
 * lexicographically, and every canonical choice in the library (default modulus, primitive element,
 * roots) is the smallest one in that order.
 *
 * Fields of order at most FieldOptions::table_limit (2^20 by default) get exp/log tables: products,
 * powers and Frobenius maps are table lookups, and discrete logarithms become available. Larger
 * fields use polynomial arithmetic and throw CapabilityError from the log-based operations.
 *
 * A Field is a cheap handle to immutable shared data. Elements carry a raw pointer to that data and
 * must not outlive every Field handle of their field. Two elements are operable only when they come
 * from the same Field::create() call; anything else throws FieldMismatch.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"

namespace galhull {

class Field;
class Element;

struct FieldOptions {
    std::uint64_t table_limit = std::uint64_t{1} << 20;
    /// Fail instead of silently dropping the log tables when q > table_limit.
    bool require_log_tables = false;
};

/// Largest supported field order.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 40;

namespace detail {

using arith::u64;

// Dense polynomials over GF(p), lowest degree first. Used for modulus selection only.
using PolyP = std::vector<u64>;

inline void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PolyP poly_mod(PolyP a, const PolyP& f, u64 p) {
    // f is monic
    trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const u64 c = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t j = 0; j < df; ++j) {
            a[shift + j] = (a[shift + j] + p - arith::mulmod(c, f[j], p)) % p;
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

inline PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + arith::mulmod(a[i], b[j], p)) % p;
        }
    }
    return poly_mod(std::move(r), f, p);
}

inline PolyP poly_powmod(PolyP base, u64 e, const PolyP& f, u64 p) {
    PolyP result = poly_mod({1}, f, p);
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

inline PolyP poly_gcd(PolyP a, PolyP b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, then a <- a mod b
        const u64 inv = arith::inverse_mod(b.back(), p);
        for (auto& c : b) c = arith::mulmod(c, inv, p);
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

inline PolyP poly_sub(PolyP a, const PolyP& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

/// Rabin's irreducibility test for a monic f (lowest degree first) of degree h >= 1.
inline bool is_irreducible(const PolyP& f, u64 p) {
    const std::size_t h = f.size() - 1;
    if (h == 1) return true;
    const PolyP x = poly_mod({0, 1}, f, p);
    std::vector<PolyP> frob(h + 1);  // frob[i] = x^(p^i) mod f
    frob[0] = x;
    for (std::size_t i = 1; i <= h; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
    if (poly_sub(frob[h], x, p).size() != 0) return false;
    for (u64 r : arith::prime_factors(h)) {
        const PolyP g = poly_gcd(f, poly_sub(frob[h / r], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

struct FieldData : std::enable_shared_from_this<FieldData> {
    u64 p = 2;
    unsigned h = 1;
    u64 q = 2;
    PolyP modulus;  // lowest degree first, monic, size h + 1
    std::vector<u64> pow_p;  // p^0 .. p^h
    std::vector<u64> group_factors;  // prime factors of q - 1
    u64 generator = 1;
    bool has_tables = false;
    std::vector<std::uint32_t> log_table;  // size q, entry 0 unused
    std::vector<std::uint32_t> exp_table;  // size 2(q - 1)

    u64 add(u64 a, u64 b) const {
        if (p == 2) return a ^ b;
        if (h == 1) return (a + b) % p;
        u64 r = 0;
        for (unsigned i = 0; i < h; ++i) {
            r += ((a % p + b % p) % p) * pow_p[i];
            a /= p;
            b /= p;
        }
        return r;
    }

    u64 neg(u64 a) const {
        if (p == 2) return a;
        if (h == 1) return (p - a) % p;
        u64 r = 0;
        for (unsigned i = 0; i < h; ++i) {
            r += ((p - a % p) % p) * pow_p[i];
            a /= p;
        }
        return r;
    }

    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }

    u64 mul_poly(u64 a, u64 b) const {
        if (h == 1) return arith::mulmod(a, b, p);
        std::vector<u64> da(h), db(h), prod(2 * h - 1, 0);
        for (unsigned i = 0; i < h; ++i) {
            da[i] = a % p;
            db[i] = b % p;
            a /= p;
            b /= p;
        }
        for (unsigned i = 0; i < h; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + arith::mulmod(da[i], db[j], p)) % p;
        }
        // x^h = -(m_0 + m_1 x + ... + m_{h-1} x^{h-1})
        for (std::size_t i = 2 * h - 2; i >= h; --i) {
            const u64 c = prod[i];
            if (c == 0) continue;
            for (unsigned j = 0; j < h; ++j) {
                prod[i - h + j] = (prod[i - h + j] + p - arith::mulmod(c, modulus[j], p)) % p;
            }
            prod[i] = 0;
        }
        u64 r = 0;
        for (unsigned i = 0; i < h; ++i) r += prod[i] * pow_p[i];
        return r;
    }

    u64 mul(u64 a, u64 b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables) return exp_table[log_table[a] + log_table[b]];
        return mul_poly(a, b);
    }

    /// a^e for e >= 0 (not reduced).
    u64 pow(u64 a, u64 e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (has_tables) return exp_table[static_cast<u64>(static_cast<arith::u128>(log_table[a]) * e % (q - 1))];
        u64 result = 1;
        while (e) {
            if (e & 1) result = mul_poly(result, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return result;
    }

    u64 inv(u64 a) const {
        if (a == 0) throw InvalidArgument("zero has no multiplicative inverse");
        if (has_tables) return exp_table[(q - 1 - log_table[a]) % (q - 1)];
        return pow(a, q - 2);
    }

    bool is_primitive(u64 a) const {
        if (a == 0) return false;
        for (u64 r : group_factors) {
            if (pow(a, (q - 1) / r) == 1) return false;
        }
        return true;
    }
};

}  // namespace detail

/// An element of GF(p^h); a value type tied to the field that produced it.
class Element {
  public:
    Element() = default;

    std::uint64_t value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1 && f_ != nullptr; }
    bool is_bound() const noexcept { return f_ != nullptr; }
    const void* spec_id() const noexcept { return f_; }

    inline Field field() const;

    /// Coordinates in the power basis, highest power first.
    std::vector<std::uint64_t> digits() const {
        const auto& d = data();
        std::vector<std::uint64_t> out(d.h);
        std::uint64_t v = v_;
        for (unsigned i = 0; i < d.h; ++i) {
            out[d.h - 1 - i] = v % d.p;
            v /= d.p;
        }
        return out;
    }

    std::string serialize() const {
        std::string s;
        for (auto c : digits()) {
            if (!s.empty()) s += ' ';
            s += std::to_string(c);
        }
        return s;
    }

    Element operator-() const { return {f_, data().neg(v_)}; }

    Element& operator+=(const Element& o) {
        v_ = common(o).add(v_, o.v_);
        return *this;
    }
    Element& operator-=(const Element& o) {
        v_ = common(o).sub(v_, o.v_);
        return *this;
    }
    Element& operator*=(const Element& o) {
        v_ = common(o).mul(v_, o.v_);
        return *this;
    }
    Element& operator/=(const Element& o) {
        const auto& d = common(o);
        v_ = d.mul(v_, d.inv(o.v_));
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Element& b) { return a *= b; }
    friend Element operator/(Element a, const Element& b) { return a /= b; }

    friend bool operator==(const Element& a, const Element& b) noexcept { return a.f_ == b.f_ && a.v_ == b.v_; }
    /// Orders by packed value (power-basis lexicographic order); only meaningful within one field.
    friend bool operator<(const Element& a, const Element& b) noexcept { return a.v_ < b.v_; }

    Element inverse() const { return {f_, data().inv(v_)}; }

    /// x^e for any integer e; negative exponents invert first.
    Element pow(std::int64_t e) const {
        const auto& d = data();
        if (v_ == 0) {
            if (e < 0) throw InvalidArgument("zero raised to a negative power");
            return {f_, e == 0 ? 1u : 0u};
        }
        const auto order = static_cast<std::int64_t>(d.q - 1);
        std::int64_t r = e % order;
        if (r < 0) r += order;
        return {f_, d.pow(v_, static_cast<std::uint64_t>(r))};
    }

  private:
    friend class Field;
    friend Element frobenius(const Element& x, long e);
    Element(const detail::FieldData* f, std::uint64_t v) : f_(f), v_(v) {}

    const detail::FieldData& data() const {
        if (!f_) throw FieldMismatch("element is not bound to a field");
        return *f_;
    }
    const detail::FieldData& common(const Element& o) const {
        if (!f_ || f_ != o.f_) throw FieldMismatch();
        return *f_;
    }

    const detail::FieldData* f_ = nullptr;
    std::uint64_t v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Element& x) {
    if (!x.is_bound()) return os << "<unbound>";
    return os << '[' << x.serialize() << ']';
}

/// Handle to an immutable GF(p^h) context.
class Field {
  public:
    /**
     * Builds GF(p^h).
     *
     * @p modulus lists the h+1 coefficients of a monic polynomial, leading coefficient first. When
     * omitted, the lexicographically smallest monic irreducible of degree h is used. The generator
     * is the smallest primitive element.
     */
    static Field create(std::uint64_t p, unsigned h, std::optional<std::vector<std::uint64_t>> modulus = std::nullopt,
                        FieldOptions options = {}) {
        if (!arith::is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
        if (h == 0) throw InvalidArgument("extension degree must be at least 1");
        const auto q = arith::checked_pow(p, h);
        if (!q || *q > kMaxFieldOrder) throw InvalidArgument("field order exceeds supported size 2^40");
        if (options.require_log_tables && *q > options.table_limit) {
            throw CapabilityError("field of order " + std::to_string(*q) + " exceeds the log-table limit " +
                                  std::to_string(options.table_limit));
        }

        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->h = h;
        d->q = *q;
        d->pow_p.resize(h + 1);
        for (unsigned i = 0; i <= h; ++i) d->pow_p[i] = arith::ipow(p, i);

        if (modulus) {
            if (modulus->size() != h + 1) throw InvalidArgument("modulus must have exactly h+1 coefficients");
            if ((*modulus)[0] != 1) throw InvalidArgument("modulus must be monic");
            detail::PolyP f(modulus->rbegin(), modulus->rend());
            for (auto c : f) {
                if (c >= p) throw InvalidArgument("modulus coefficient out of range [0, p)");
            }
            if (!detail::is_irreducible(f, p)) throw InvalidArgument("modulus is reducible over GF(p)");
            d->modulus = std::move(f);
        } else {
            d->modulus = smallest_irreducible(p, h, d->pow_p);
        }

        d->group_factors = arith::prime_factors(d->q - 1);
        for (std::uint64_t v = 1; v < d->q; ++v) {
            if (d->is_primitive(v)) {
                d->generator = v;
                break;
            }
        }

        if (d->q <= options.table_limit) {
            const auto n = d->q - 1;
            d->exp_table.resize(2 * n);
            d->log_table.assign(d->q, 0);
            std::uint64_t x = 1;
            for (std::uint64_t i = 0; i < n; ++i) {
                d->exp_table[i] = static_cast<std::uint32_t>(x);
                d->exp_table[i + n] = static_cast<std::uint32_t>(x);
                d->log_table[x] = static_cast<std::uint32_t>(i);
                x = d->mul_poly(x, d->generator);
            }
            if (x != 1) throw InternalError("generator order mismatch while building tables");
            d->has_tables = true;
        }
        return Field(std::move(d));
    }

    /// Parses the text form "p h c_h c_{h-1} ... c_0".
    static Field parse(std::string_view text, FieldOptions options = {}) {
        std::istringstream in{std::string(text)};
        std::uint64_t p = 0;
        unsigned h = 0;
        if (!(in >> p >> h)) throw InvalidArgument("field text must start with 'p h'");
        std::vector<std::uint64_t> mod(h + 1);
        for (auto& c : mod) {
            if (!(in >> c)) throw InvalidArgument("field text needs h+1 modulus coefficients");
        }
        std::string rest;
        if (in >> rest) throw InvalidArgument("trailing data after field text");
        return create(p, h, mod, options);
    }

    std::string serialize() const {
        std::string s = std::to_string(d_->p) + ' ' + std::to_string(d_->h);
        for (auto c : modulus()) s += ' ' + std::to_string(c);
        return s;
    }

    std::uint64_t p() const noexcept { return d_->p; }
    unsigned h() const noexcept { return d_->h; }
    std::uint64_t q() const noexcept { return d_->q; }
    bool has_log_tables() const noexcept { return d_->has_tables; }
    const void* spec_id() const noexcept { return d_.get(); }

    /// Modulus coefficients, leading (monic) coefficient first.
    std::vector<std::uint64_t> modulus() const { return {d_->modulus.rbegin(), d_->modulus.rend()}; }

    Element zero() const { return {d_.get(), 0}; }
    Element one() const { return {d_.get(), 1}; }
    Element generator() const { return {d_.get(), d_->generator}; }

    /// Element with packed value v (0 <= v < q).
    Element element(std::uint64_t v) const {
        if (v >= d_->q) throw InvalidArgument("packed element value out of range");
        return {d_.get(), v};
    }

    /// Image of an integer in the prime subfield.
    Element from_int(std::int64_t n) const {
        const auto p = static_cast<std::int64_t>(d_->p);
        return {d_.get(), static_cast<std::uint64_t>(((n % p) + p) % p)};
    }

    /// Element from power-basis digits, highest power first.
    Element from_digits(std::span<const std::uint64_t> digits) const {
        if (digits.size() != d_->h) throw InvalidArgument("element needs exactly h digits");
        std::uint64_t v = 0;
        for (auto c : digits) {
            if (c >= d_->p) throw InvalidArgument("element digit out of range [0, p)");
            v = v * d_->p + c;
        }
        return {d_.get(), v};
    }

    Element parse_element(std::string_view text) const {
        std::istringstream in{std::string(text)};
        std::vector<std::uint64_t> digits;
        std::uint64_t c = 0;
        while (in >> c) digits.push_back(c);
        if (!in.eof()) throw InvalidArgument("element text must be whitespace-separated digits");
        return from_digits(digits);
    }

    /// All q elements in increasing packed order.
    std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(d_->q);
        for (std::uint64_t v = 0; v < d_->q; ++v) out.push_back({d_.get(), v});
        return out;
    }

    /// Discrete logarithm to the base generator(); needs log tables.
    std::uint64_t log(const Element& x) const {
        check(x);
        require_tables("discrete logarithm");
        if (x.is_zero()) throw InvalidArgument("logarithm of zero");
        return d_->log_table[x.value()];
    }

    /// generator()^k.
    Element exp(std::uint64_t k) const {
        if (d_->has_tables) return {d_.get(), d_->exp_table[k % (d_->q - 1)]};
        return {d_.get(), d_->pow(d_->generator, k % (d_->q - 1))};
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(const Element& x) const {
        check(x);
        if (x.is_zero()) throw InvalidArgument("zero has no multiplicative order");
        std::uint64_t ord = d_->q - 1;
        for (auto r : d_->group_factors) {
            while (ord % r == 0 && d_->pow(x.value(), ord / r) == 1) ord /= r;
        }
        return ord;
    }

    void check(const Element& x) const {
        if (x.spec_id() != d_.get()) throw FieldMismatch();
    }

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.d_ == b.d_; }

  private:
    friend class Element;
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

    void require_tables(const char* what) const {
        if (!d_->has_tables) {
            throw CapabilityError(std::string(what) + " needs log tables, unavailable for q = " + std::to_string(d_->q));
        }
    }

    static detail::PolyP smallest_irreducible(std::uint64_t p, unsigned h, const std::vector<std::uint64_t>& pow_p) {
        // Lower coefficients packed with c_{h-1} most significant: numeric order is tuple order.
        for (std::uint64_t m = 0; m < pow_p[h]; ++m) {
            detail::PolyP f(h + 1);
            std::uint64_t v = m;
            for (unsigned i = 0; i < h; ++i) {
                f[i] = v % p;
                v /= p;
            }
            f[h] = 1;
            if (detail::is_irreducible(f, p)) return f;
        }
        throw InternalError("no irreducible polynomial found");
    }

    std::shared_ptr<const detail::FieldData> d_;
};

inline Field Element::field() const { return Field(data().shared_from_this()); }

/// x^(p^e); e is reduced modulo h, so applying it h times in total is the identity.
inline Element frobenius(const Element& x, long e) {
    const auto& d = x.data();
    const long h = static_cast<long>(d.h);
    const auto r = static_cast<unsigned>(((e % h) + h) % h);
    return {&d, d.pow(x.value(), d.pow_p[r])};
}

/**
 * Some v with v^d = x, choosing the root with the smallest discrete logarithm. Zero maps to zero.
 * Throws NoRootError when x is not a d-th power and CapabilityError without log tables.
 */
inline Element nth_root(const Element& x, std::uint64_t d) {
    if (d == 0) throw InvalidArgument("root degree must be positive");
    const Field f = x.field();
    if (x.is_zero()) return f.zero();
    const std::uint64_t n = f.q() - 1;
    const std::uint64_t lg = f.log(x);
    const std::uint64_t g = std::gcd(d, n);
    if (lg % g != 0) {
        throw NoRootError("element " + x.serialize() + " is not a " + std::to_string(d) + "-th power");
    }
    const std::uint64_t m = n / g;
    const std::uint64_t j = m == 1 ? 0 : arith::mulmod(lg / g % m, arith::inverse_mod((d / g) % m, m), m);
    return f.exp(j);
}

/// True iff x lies in the subfield GF(p^m); m must divide h.
inline bool in_subfield(const Element& x, unsigned m) {
    const Field f = x.field();
    if (m == 0 || f.h() % m != 0) throw InvalidArgument("subfield degree must divide h");
    return frobenius(x, m) == x;
}

/// An alpha with alpha^(p^e' + 1) != 1, namely the field generator.
inline Element find_alpha(const Field& f, unsigned e_prime) {
    const std::uint64_t n = f.q() - 1;
    if ((arith::powmod(f.p(), e_prime, n) + 1) % n == 0) {
        throw HypothesisError("q-1 divides p^e'+1, so alpha^(p^e'+1) = 1 for every alpha");
    }
    return f.generator();
}

}  // namespace galhull

template <>
struct std::hash<galhull::Element> {
    std::size_t operator()(const galhull::Element& x) const noexcept {
        return std::hash<std::uint64_t>{}(x.value()) ^ (std::hash<const void*>{}(x.spec_id()) << 1);
    }
};

#endif  // GALHULL_FIELD_HPP
