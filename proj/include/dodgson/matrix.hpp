#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dodgson/error.hpp"
#include "dodgson/scalar.hpp"

namespace dodgson {

/// Dense row-major matrix with exact entries and 0-based indexing.
template <class T>
class Mat {
public:
    Mat() = default;

    Mat(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
        if ((rows == 0) != (cols == 0)) throw DimensionError("zero-by-nonzero matrix");
        data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    }

    Mat(int rows, int cols, std::vector<T> entries) : Mat(rows, cols) {
        if (entries.size() != data_.size()) throw DimensionError("entry count does not match shape");
        data_ = std::move(entries);
    }

    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        for (const auto& row : rows) {
            if (cols_ == 0) cols_ = static_cast<int>(row.size());
            if (static_cast<int>(row.size()) != cols_) throw DimensionError("ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
        if (rows_ > 0 && cols_ == 0) throw DimensionError("zero-by-nonzero matrix");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Mat constant(int rows, int cols, const T& value) {
        Mat m(rows, cols);
        for (auto& e : m.data_) e = value;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int r, int c) {
        assert(0 <= r && r < rows_ && 0 <= c && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const T& operator()(int r, int c) const {
        assert(0 <= r && r < rows_ && 0 <= c && c < cols_);
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    const std::vector<T>& entries() const { return data_; }

    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using Matrix = Mat<Scalar>;
using IntMatrix = Mat<Int>;

/// Copies the block starting at (r0, c0) spanning nr x nc entries.
template <class T>
Mat<T> submatrix(const Mat<T>& m, int r0, int c0, int nr, int nc) {
    if (nr < 0 || nc < 0) throw DimensionError("negative block size");
    if (r0 < 0 || c0 < 0 || r0 + nr > m.rows() || c0 + nc > m.cols())
        throw DimensionError("block exceeds matrix bounds");
    if (nr == 0 || nc == 0) return Mat<T>();
    Mat<T> out(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) out(i, j) = m(r0 + i, c0 + j);
    return out;
}

/// Drops the first and last row and column. Defined for n >= 2; the interior
/// of a 2x2 matrix is the empty matrix.
template <class T>
Mat<T> interior(const Mat<T>& m) {
    if (!m.square() || m.rows() < 2) throw DimensionError("interior needs a square matrix, n >= 2");
    return submatrix(m, 1, 1, m.rows() - 2, m.cols() - 2);
}

template <class T>
Mat<T> matmul(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("inner dimensions disagree");
    Mat<T> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
}

Matrix to_scalar_matrix(const IntMatrix& m);

/// Exact narrowing; nullopt when any entry has a denominator.
std::optional<IntMatrix> to_integer_matrix(const Matrix& m);

/// Text format: '#' starts a comment line, blank lines are skipped, every
/// other line is one row of whitespace-separated entries, each an optionally
/// signed decimal integer or a p/q rational.
Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);

}  // namespace dodgson
