#pragma once

// Dense exact linear algebra over a cyclotomic field.

#include <optional>
#include <vector>

#include "qdiv/cyclotomic.hpp"

namespace qdiv {

using Vec = std::vector<CycScalar>;

bool is_zero(const Vec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(const CyclotomicField& f, int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    CycScalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const CycScalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    Vec apply(const Vec& v) const;
    /// Flattened row-major entries.
    const Vec& entries() const { return a_; }

    bool is_zero() const;
    Matrix transpose() const;
    CycScalar trace() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const CycScalar& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int r_ = 0, c_ = 0;
    Vec a_;
};

/// Incrementally maintained reduced row echelon basis of a subspace of K^dim.
/// Rows are kept sorted by pivot, each pivot entry is 1 and pivot columns are
/// zero in every other row, so the basis is canonical.
class RowEchelon {
public:
    explicit RowEchelon(int dim = 0) : dim_(dim) {}

    int ambient() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }

    /// Adds v to the span; true if the rank grew.
    bool insert(Vec v);
    /// v minus its projection along pivots; zero iff v lies in the span.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    /// Coefficients of v in terms of rows(), if v lies in the span.
    std::optional<Vec> coordinates(const Vec& v) const;
    /// Columns without a pivot, ascending.
    std::vector<int> free_columns() const;

    friend bool operator==(const RowEchelon& a, const RowEchelon& b);

private:
    int dim_;
    std::vector<Vec> rows_;
    std::vector<int> piv_;
};

RowEchelon row_space(const Matrix& m);
int rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column (canonical).
std::vector<Vec> kernel(const Matrix& m, const CyclotomicField& field);
/// Basis of {x : x m = 0}, i.e. the kernel of the transpose.
std::vector<Vec> left_kernel(const Matrix& m, const CyclotomicField& field);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m, const CyclotomicField& field);

}  // namespace qdiv
