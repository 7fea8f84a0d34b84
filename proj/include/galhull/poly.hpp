#ifndef GALHULL_POLY_HPP
#define GALHULL_POLY_HPP

#include <climits>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace galhull {

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = INT_MIN;

/// Dense univariate polynomial over GF(q), constant term first, kept without trailing zeros.
class Poly {
  public:
    explicit Poly(Field f) : f_(std::move(f)) {}
    Poly(Field f, std::vector<Element> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        for (const auto& x : c_) f_.check(x);
        normalize();
    }

    static Poly constant(const Element& c) { return Poly(c.field(), {c}); }
    static Poly monomial(const Element& c, std::size_t degree) {
        std::vector<Element> cs(degree + 1, c.field().zero());
        cs[degree] = c;
        return Poly(c.field(), std::move(cs));
    }
    /// Product of (x - r) over all roots.
    static Poly from_roots(const Field& f, std::span<const Element> roots) {
        Poly out = constant(f.one());
        for (const auto& r : roots) out = out * Poly(f, {-r, f.one()});
        return out;
    }

    /**
     * The unique polynomial of degree < n through n points with distinct abscissae.
     * O(n^2): divides the master polynomial prod(x - x_j) by each linear factor in turn.
     */
    static Poly interpolate(const Field& f, std::span<const Element> xs, std::span<const Element> ys) {
        if (xs.size() != ys.size()) throw InvalidArgument("interpolation needs as many values as points");
        const std::size_t n = xs.size();
        if (n == 0) return Poly(f);
        const Poly master = from_roots(f, xs);
        std::vector<Element> acc(n, f.zero());
        std::vector<Element> quot(n, f.zero());
        for (std::size_t i = 0; i < n; ++i) {
            // synthetic division of master by (x - xs[i])
            Element carry = f.zero();
            for (std::size_t d = n; d-- > 0;) {
                carry = master.coeff(d + 1) + carry * xs[i];
                quot[d] = carry;
            }
            Element denom = f.zero();
            for (std::size_t d = n; d-- > 0;) denom = denom * xs[i] + quot[d];
            if (denom.is_zero()) throw InvalidArgument("interpolation points must be distinct");
            const Element w = ys[i] / denom;
            if (w.is_zero()) continue;
            for (std::size_t d = 0; d < n; ++d) acc[d] += w * quot[d];
        }
        return Poly(f, std::move(acc));
    }

    const Field& field() const noexcept { return f_; }
    const std::vector<Element>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }

    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
    Element lead() const { return c_.empty() ? f_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Element operator()(const Element& x) const {
        f_.check(x);
        Element acc = f_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly monic() const {
        if (c_.empty()) throw InvalidArgument("zero polynomial has no monic associate");
        return *this * lead().inverse();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_same(a, b);
        std::vector<Element> out(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return Poly(a.f_, std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        check_same(a, b);
        std::vector<Element> out(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
        return Poly(a.f_, std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.f_);
        std::vector<Element> out(a.c_.size() + b.c_.size() - 1, a.f_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(a.f_, std::move(out));
    }
    friend Poly operator*(const Poly& a, const Element& s) {
        std::vector<Element> out = a.c_;
        for (auto& c : out) c *= s;
        return Poly(a.f_, std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += '[' + c_[i].serialize() + ']';
            if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
        }
        return s;
    }

  private:
    static void check_same(const Poly& a, const Poly& b) {
        if (!(a.f_ == b.f_)) throw FieldMismatch();
    }
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Field f_;
    std::vector<Element> c_;
};

}  // namespace galhull

#endif  // GALHULL_POLY_HPP
