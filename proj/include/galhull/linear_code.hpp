#ifndef GALHULL_LINEAR_CODE_HPP
#define GALHULL_LINEAR_CODE_HPP

/**
 * @file linear_code.hpp
 * @brief [n, k] linear codes over GF(q): e-Galois duals, hulls, MDS and minimum-distance checks.
 *
 * The e-Galois inner product is (x, y)_e = sum_i x_i * y_i^(p^e). A vector y is e-orthogonal to a
 * code C iff its entrywise Frobenius image y^(p^e) lies in the Euclidean dual of C, so the e-dual is
 * obtained by applying x -> x^(p^(h-e)) to every entry of a Euclidean dual basis.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace galhull {

/// Work limit shared by the exhaustive checks (number of minors or codewords).
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

class LinearCode {
  public:
    /// @p generator must have full row rank; its rows are kept as given.
    explicit LinearCode(Matrix generator) : gen_(std::move(generator)) {
        if (rank(gen_) != gen_.rows()) throw InvalidArgument("generator matrix is not of full row rank");
    }

    /// The code spanned by the rows of @p m (any rank), with an RREF generator.
    static LinearCode span(const Matrix& m) { return LinearCode(rowspace_basis(m)); }

    const Matrix& generator() const noexcept { return gen_; }
    const Field& field() const noexcept { return gen_.field(); }
    std::size_t n() const noexcept { return gen_.cols(); }
    std::size_t k() const noexcept { return gen_.rows(); }

    /// Same row space (compared through canonical RREF bases).
    bool same_space(const LinearCode& o) const {
        return n() == o.n() && rowspace_basis(gen_) == rowspace_basis(o.gen_);
    }

  private:
    Matrix gen_;
};

/// e-Galois inner product sum_i x_i * y_i^(p^e).
inline Element galois_inner_product(std::span<const Element> x, std::span<const Element> y, long e) {
    if (x.size() != y.size() || x.empty()) throw InvalidArgument("inner product needs equal nonzero lengths");
    Element acc = x.front().field().zero();
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * frobenius(y[i], e);
    return acc;
}

/// C^{⊥e}: the Euclidean dual basis with x -> x^(p^(h-e)) applied entrywise, in RREF.
inline LinearCode galois_dual(const LinearCode& c, unsigned e) {
    const long h = c.field().h();
    const long twist = (h - static_cast<long>(e) % h) % h;
    Matrix dual = kernel_basis(c.generator()).map([twist](const Element& x) { return frobenius(x, twist); });
    return LinearCode(rowspace_basis(dual));
}

struct HullReport {
    unsigned e = 0;
    std::size_t dim = 0;
    Matrix basis;  // RREF
};

/// Hull_e(C) = C ∩ C^{⊥e}.
inline HullReport hull(const LinearCode& c, unsigned e) {
    const LinearCode dual = galois_dual(c, e);
    const std::size_t stacked = rank(vstack(c.generator(), dual.generator()));
    const std::size_t dim = c.n() - stacked;
    Matrix basis = rowspace_intersection(c.generator(), dual.generator());
    if (basis.rows() != dim) throw InternalError("hull dimension disagrees with intersection basis");
    return {e, dim, std::move(basis)};
}

enum class MdsStrategy { Auto, Minors, MinWeight };
enum class MdsVerdict { ProvedMds, ProvedNotMds, Skipped };

inline std::string to_string(MdsVerdict v) {
    switch (v) {
        case MdsVerdict::ProvedMds: return "proved-mds";
        case MdsVerdict::ProvedNotMds: return "proved-not-mds";
        case MdsVerdict::Skipped: return "skipped";
    }
    return "skipped";
}

inline std::string to_string(MdsStrategy s) {
    switch (s) {
        case MdsStrategy::Auto: return "auto";
        case MdsStrategy::Minors: return "minors";
        case MdsStrategy::MinWeight: return "minweight";
    }
    return "auto";
}

struct MdsResult {
    MdsVerdict verdict = MdsVerdict::Skipped;
    MdsStrategy strategy = MdsStrategy::Auto;  // the one actually run
    std::optional<std::size_t> min_distance;  // set by the minweight strategy
};

namespace detail {

/// C(n, k), saturated just above @p cap.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    arith::u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

inline std::uint64_t codeword_count_capped(std::uint64_t q, std::size_t k, std::uint64_t cap) {
    arith::u128 r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= q;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

inline bool square_nonsingular(std::vector<Element>& a, std::size_t k) {
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv * k + col].is_zero()) ++piv;
        if (piv == k) return false;
        if (piv != col)
            for (std::size_t c = col; c < k; ++c) std::swap(a[piv * k + c], a[col * k + c]);
        const Element inv = a[col * k + col].inverse();
        for (std::size_t r = col + 1; r < k; ++r) {
            if (a[r * k + col].is_zero()) continue;
            const Element factor = a[r * k + col] * inv;
            for (std::size_t c = col; c < k; ++c) a[r * k + c] -= factor * a[col * k + c];
        }
    }
    return true;
}

/// Every k x k minor of the generator is nonzero.
inline bool all_minors_nonzero(const Matrix& g, unsigned threads) {
    const std::size_t k = g.rows(), n = g.cols();
    if (k == 0) return true;
    threads = std::max(1u, threads);
    std::atomic<bool> singular{false};
    auto worker = [&](unsigned tid) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        std::vector<Element> buf(k * k);
        std::uint64_t counter = 0;
        while (!singular.load(std::memory_order_relaxed)) {
            if (counter++ % threads == tid) {
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c) buf[r * k + c] = g(r, idx[c]);
                if (!square_nonsingular(buf, k)) {
                    singular = true;
                    return;
                }
            }
            // next k-subset in lexicographic order
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) return;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    }
    return !singular.load();
}

}  // namespace detail

/**
 * Exact minimum distance by enumerating all q^k - 1 nonzero codewords.
 * Throws InstanceTooLarge above kEnumerationLimit codewords and InvalidArgument for k = 0.
 */
inline std::size_t min_distance_bruteforce(const LinearCode& c, std::uint64_t limit = kEnumerationLimit) {
    const std::size_t k = c.k(), n = c.n();
    if (k == 0) throw InvalidArgument("minimum distance of the zero code is undefined");
    const Field& f = c.field();
    if (detail::codeword_count_capped(f.q(), k, limit) > limit) {
        throw InstanceTooLarge("q^k = " + std::to_string(f.q()) + "^" + std::to_string(k) + " codewords exceed the limit");
    }
    const Matrix& g = c.generator();
    std::vector<std::uint64_t> msg(k, 0);
    std::vector<Element> word(n, f.zero());
    std::size_t best = n;
    // Odometer over messages; each step changes one coefficient and updates the codeword in O(n).
    while (true) {
        std::size_t i = 0;
        while (i < k) {
            const Element old_coeff = f.element(msg[i]);
            msg[i] = (msg[i] + 1) % f.q();
            const Element delta = f.element(msg[i]) - old_coeff;
            for (std::size_t j = 0; j < n; ++j) word[j] += delta * g(i, j);
            if (msg[i] != 0) break;
            ++i;
        }
        if (i == k) break;
        std::size_t weight = 0;
        for (const auto& x : word) weight += x.is_zero() ? 0 : 1;
        best = std::min(best, weight);
    }
    return best;
}

/**
 * MDS verification. Minors proves MDS iff every k x k submatrix of the generator is nonsingular;
 * MinWeight compares the enumerated minimum distance with n - k + 1. Auto runs minors when
 * C(n, k) <= 10^6, else minweight when q^k <= 10^6, else reports Skipped.
 */
inline MdsResult is_mds(const LinearCode& c, MdsStrategy strategy = MdsStrategy::Auto, unsigned threads = 1) {
    const std::size_t n = c.n(), k = c.k();
    if (strategy == MdsStrategy::Auto) {
        if (detail::binomial_capped(n, k, kEnumerationLimit) <= kEnumerationLimit) {
            strategy = MdsStrategy::Minors;
        } else if (detail::codeword_count_capped(c.field().q(), k, kEnumerationLimit) <= kEnumerationLimit) {
            strategy = MdsStrategy::MinWeight;
        } else {
            return {MdsVerdict::Skipped, MdsStrategy::Auto, std::nullopt};
        }
    }
    if (strategy == MdsStrategy::Minors) {
        const bool ok = detail::all_minors_nonzero(c.generator(), threads);
        return {ok ? MdsVerdict::ProvedMds : MdsVerdict::ProvedNotMds, MdsStrategy::Minors, std::nullopt};
    }
    if (k == 0) return {MdsVerdict::ProvedMds, MdsStrategy::MinWeight, std::nullopt};
    const std::size_t d = min_distance_bruteforce(c, std::numeric_limits<std::uint64_t>::max() - 1);
    return {d == n - k + 1 ? MdsVerdict::ProvedMds : MdsVerdict::ProvedNotMds, MdsStrategy::MinWeight, d};
}

}  // namespace galhull

#endif  // GALHULL_LINEAR_CODE_HPP
