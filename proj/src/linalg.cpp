#include "qdiv/linalg.hpp"

#include <algorithm>

#include "qdiv/errors.hpp"

namespace qdiv {

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::identity(const CyclotomicField& f, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Vec Matrix::row(int i) const { return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i) * c_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * c_); }

Vec Matrix::col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != c_) throw LengthMismatch("matrix-vector size mismatch");
    Vec out(r_);
    for (int j = 0; j < c_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < r_; ++i)
            if (!(*this)(i, j).is_zero()) out[i].add_product((*this)(i, j), v[j]);
    }
    return out;
}

bool Matrix::is_zero() const { return qdiv::is_zero(a_); }

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

CycScalar Matrix::trace() const {
    CycScalar t;
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw LengthMismatch("matrix product size mismatch");
    Matrix out(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const CycScalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.c_; ++j)
                if (!b(k, j).is_zero()) out(i, j).add_product(x, b(k, j));
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw LengthMismatch("matrix sum size mismatch");
    Matrix out = a;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += b.a_[k];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw LengthMismatch("matrix difference size mismatch");
    Matrix out = a;
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= b.a_[k];
    return out;
}

Matrix operator*(const CycScalar& c, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.a_) x = c * x;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t k = 0; k < a.a_.size(); ++k)
        if (a.a_[k] != b.a_[k]) return false;
    return true;
}

// ---------------------------------------------------------------------------

Vec RowEchelon::reduce(Vec v) const {
    if (static_cast<int>(v.size()) != dim_) throw LengthMismatch("vector length differs from ambient dimension");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int p = piv_[k];
        if (v[p].is_zero()) continue;
        CycScalar f = v[p];
        const Vec& r = rows_[k];
        for (int j = p; j < dim_; ++j)
            if (!r[j].is_zero()) v[j] -= f * r[j];
    }
    return v;
}

bool RowEchelon::insert(Vec v) {
    v = reduce(std::move(v));
    int p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    CycScalar inv = v[p].inverse();
    for (int j = p; j < dim_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    for (auto& r : rows_) {
        if (r[p].is_zero()) continue;
        CycScalar f = r[p];
        for (int j = p; j < dim_; ++j)
            if (!v[j].is_zero()) r[j] -= f * v[j];
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool RowEchelon::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::optional<Vec> RowEchelon::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[piv_[k]];
    return c;
}

std::vector<int> RowEchelon::free_columns() const {
    std::vector<int> out;
    std::size_t k = 0;
    for (int j = 0; j < dim_; ++j) {
        if (k < piv_.size() && piv_[k] == j) {
            ++k;
            continue;
        }
        out.push_back(j);
    }
    return out;
}

bool operator==(const RowEchelon& a, const RowEchelon& b) {
    if (a.dim_ != b.dim_ || a.piv_ != b.piv_) return false;
    for (std::size_t k = 0; k < a.rows_.size(); ++k)
        for (int j = 0; j < a.dim_; ++j)
            if (a.rows_[k][j] != b.rows_[k][j]) return false;
    return true;
}

RowEchelon row_space(const Matrix& m) {
    RowEchelon e(m.cols());
    for (int i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    return e;
}

int rank(const Matrix& m) { return row_space(m).rank(); }

std::vector<Vec> kernel(const Matrix& m, const CyclotomicField& field) {
    RowEchelon e = row_space(m);
    std::vector<Vec> out;
    for (int f : e.free_columns()) {
        Vec x(m.cols());
        x[f] = field.one();
        for (std::size_t k = 0; k < e.rows().size(); ++k) x[e.pivots()[k]] = -e.rows()[k][f];
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Vec> left_kernel(const Matrix& m, const CyclotomicField& field) { return kernel(m.transpose(), field); }

std::optional<Matrix> inverse(const Matrix& m, const CyclotomicField& field) {
    if (m.rows() != m.cols()) throw LengthMismatch("inverse of a non-square matrix");
    const int n = m.rows();
    RowEchelon e(2 * n);
    for (int i = 0; i < n; ++i) {
        Vec r(2 * n);
        for (int j = 0; j < n; ++j) r[j] = m(i, j);
        r[n + i] = field.one();
        e.insert(std::move(r));
    }
    for (int k = 0; k < n; ++k)
        if (k >= e.rank() || e.pivots()[k] != k) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.rows()[i][n + j];
    return inv;
}

}  // namespace qdiv
