#ifndef GALHULL_MATRIX_HPP
#define GALHULL_MATRIX_HPP

/**
 * @file matrix.hpp
 * @brief Dense matrices over GF(q) with exact row reduction.
 *
 * Everything here is value-semantic. Bases returned by kernel_basis() and rowspace_intersection()
 * are in reduced row echelon form, so two runs (or two routes) that describe the same subspace
 * produce identical matrices.
 */

#include <cstddef>
#include <functional>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace galhull {

class Matrix {
  public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, f_.zero()) {}

    static Matrix from_rows(const Field& f, const std::vector<std::vector<Element>>& rows, std::size_t cols = 0) {
        if (!rows.empty()) cols = rows.front().size();
        Matrix m(f, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw InvalidArgument("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c) {
                f.check(rows[r][c]);
                m(r, c) = rows[r][c];
            }
        }
        return m;
    }

    /// Convenience for tests and examples: entries given as packed element values.
    static Matrix from_values(const Field& f, const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols = 0) {
        std::vector<std::vector<Element>> es;
        for (const auto& row : rows) {
            auto& out = es.emplace_back();
            for (auto v : row) out.push_back(f.element(v));
        }
        return from_rows(f, es, cols);
    }

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    const Field& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    std::vector<Element> row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

    void append_row(std::span<const Element> values) {
        if (values.size() != cols_) throw InvalidArgument("row length does not match matrix width");
        for (const auto& x : values) f_.check(x);
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Entrywise image under fn.
    Matrix map(const std::function<Element(const Element&)>& fn) const {
        Matrix out = *this;
        for (auto& x : out.data_) x = fn(x);
        return out;
    }

    Matrix select_columns(std::span<const std::size_t> columns) const {
        Matrix out(f_, rows_, columns.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (!(a.f_ == b.f_)) throw FieldMismatch();
        if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
        Matrix out(a.f_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Element& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Header "rows cols", then one line per row of element digit strings.
    std::string serialize() const {
        std::ostringstream os;
        os << rows_ << ' ' << cols_ << '\n';
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) os << (c ? "  " : "") << (*this)(r, c).serialize();
            os << '\n';
        }
        return os.str();
    }

    static Matrix parse(const Field& f, std::string_view text) {
        std::istringstream in{std::string(text)};
        std::size_t rows = 0, cols = 0;
        if (!(in >> rows >> cols)) throw InvalidArgument("matrix text must start with 'rows cols'");
        Matrix m(f, rows, cols);
        std::vector<std::uint64_t> digits(f.h());
        for (std::size_t i = 0; i < rows * cols; ++i) {
            for (auto& d : digits) {
                if (!(in >> d)) throw InvalidArgument("matrix text is missing entries");
            }
            m.data_[i] = f.from_digits(digits);
        }
        std::string rest;
        if (in >> rest) throw InvalidArgument("trailing data after matrix text");
        return m;
    }

  private:
    Field f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

/// Stacks b below a.
inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch();
    if (a.cols() != b.cols()) throw InvalidArgument("vstack needs equal column counts");
    Matrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
    return out;
}

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row echelon form (same shape as the input, zero rows at the bottom).
inline RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t piv = lead_row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(lead_row, c));
        const Element inv = m(lead_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) continue;
            const Element factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead_row, c);
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return {std::move(m), std::move(pivots), lead_row};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Nonzero rows of the RREF: the canonical basis of the row space.
inline Matrix rowspace_basis(const Matrix& m) {
    auto r = rref(m);
    Matrix out(m.field(), 0, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.reduced.row(i));
    return out;
}

/// Basis (in RREF) of {x : m * x^T = 0}.
inline Matrix kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    Matrix basis(f, 0, m.cols());
    std::vector<Element> v(m.cols(), f.zero());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
        basis.append_row(v);
    }
    return rowspace_basis(basis);
}

/// Basis (in RREF) of rowspace(a) ∩ rowspace(b), computed as (a^⊥ + b^⊥)^⊥.
inline Matrix rowspace_intersection(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch();
    if (a.cols() != b.cols()) throw InvalidArgument("row-space intersection needs equal column counts");
    return kernel_basis(vstack(kernel_basis(a), kernel_basis(b)));
}

}  // namespace galhull

#endif  // GALHULL_MATRIX_HPP
