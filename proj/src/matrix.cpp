#include "codedesign/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace codedesign {

FieldMatrix::FieldMatrix(const FieldContext& F, std::size_t rows,
                         std::size_t cols)
    : F_(&F), rows_(rows), cols_(cols), a_(rows * cols, F.zero()) {}

FieldMatrix FieldMatrix::identity(const FieldContext& F, std::size_t n) {
    FieldMatrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
}

FieldMatrix FieldMatrix::vandermonde(const FieldContext& F, std::size_t rows,
                                     const std::vector<FieldElement>& points) {
    FieldMatrix m(F, rows, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        FieldElement acc = F.one();
        for (std::size_t i = 0; i < rows; ++i) {
            m.at(i, j) = acc;
            acc = F.mul(acc, points[j]);
        }
    }
    return m;
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    FieldMatrix out(*F_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t t = 0; t < cols_; ++t) {
            FieldElement f = at(i, t);
            if (f.v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = F_->add(out.at(i, j), F_->mul(f, rhs.at(t, j)));
        }
    }
    return out;
}

std::vector<FieldElement> FieldMatrix::left_mul(
    const std::vector<FieldElement>& v) const {
    if (v.size() != rows_)
        throw std::invalid_argument("row vector length mismatch");
    std::vector<FieldElement> out(cols_, F_->zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i].v == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            out[j] = F_->add(out[j], F_->mul(v[i], at(i, j)));
    }
    return out;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(*F_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

FieldElement FieldMatrix::det() const {
    if (rows_ != cols_)
        throw std::invalid_argument("determinant of a non-square matrix");
    FieldMatrix w(*this);
    FieldElement d = F_->one();
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && w.at(pivot, col).v == 0) ++pivot;
        if (pivot == rows_) return F_->zero();
        if (pivot != col) {
            for (std::size_t j = col; j < cols_; ++j)
                std::swap(w.at(pivot, j), w.at(col, j));
            d = F_->neg(d);
        }
        d = F_->mul(d, w.at(col, col));
        FieldElement ip = F_->inv(w.at(col, col));
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (w.at(r, col).v == 0) continue;
            FieldElement f = F_->mul(w.at(r, col), ip);
            for (std::size_t j = col; j < cols_; ++j)
                w.at(r, j) = F_->sub(w.at(r, j), F_->mul(f, w.at(col, j)));
        }
    }
    return d;
}

std::size_t FieldMatrix::rank() const {
    FieldMatrix w(*this);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && w.at(pivot, col).v == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r)
            for (std::size_t j = col; j < cols_; ++j)
                std::swap(w.at(pivot, j), w.at(r, j));
        FieldElement ip = F_->inv(w.at(r, col));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (w.at(i, col).v == 0) continue;
            FieldElement f = F_->mul(w.at(i, col), ip);
            for (std::size_t j = col; j < cols_; ++j)
                w.at(i, j) = F_->sub(w.at(i, j), F_->mul(f, w.at(r, j)));
        }
        ++r;
    }
    return r;
}

std::optional<FieldMatrix> FieldMatrix::inverse() const {
    if (rows_ != cols_)
        throw std::invalid_argument("inverse of a non-square matrix");
    FieldMatrix w(*this);
    FieldMatrix inv = identity(*F_, rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && w.at(pivot, col).v == 0) ++pivot;
        if (pivot == rows_) return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(w.at(pivot, j), w.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        FieldElement ip = F_->inv(w.at(col, col));
        for (std::size_t j = 0; j < cols_; ++j) {
            w.at(col, j) = F_->mul(w.at(col, j), ip);
            inv.at(col, j) = F_->mul(inv.at(col, j), ip);
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == col || w.at(r, col).v == 0) continue;
            FieldElement f = w.at(r, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                w.at(r, j) = F_->sub(w.at(r, j), F_->mul(f, w.at(col, j)));
                inv.at(r, j) = F_->sub(inv.at(r, j), F_->mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

std::optional<std::vector<FieldElement>> FieldMatrix::left_nullspace_vector()
    const {
    // Row-reduce [M | I]; a zero row of the reduced M exposes y with yM = 0
    // in the corresponding row of the transformed identity.
    FieldMatrix w(*this);
    FieldMatrix e = identity(*F_, rows_);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < rows_ && w.at(pivot, col).v == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(w.at(pivot, j), w.at(r, j));
            for (std::size_t j = 0; j < rows_; ++j)
                std::swap(e.at(pivot, j), e.at(r, j));
        }
        FieldElement ip = F_->inv(w.at(r, col));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (w.at(i, col).v == 0) continue;
            FieldElement f = F_->mul(w.at(i, col), ip);
            for (std::size_t j = col; j < cols_; ++j)
                w.at(i, j) = F_->sub(w.at(i, j), F_->mul(f, w.at(r, j)));
            for (std::size_t j = 0; j < rows_; ++j)
                e.at(i, j) = F_->sub(e.at(i, j), F_->mul(f, e.at(r, j)));
        }
        ++r;
    }
    if (r == rows_) return std::nullopt;
    // Row r of w is the first zero row after reduction.
    std::vector<FieldElement> y(rows_);
    for (std::size_t j = 0; j < rows_; ++j) y[j] = e.at(r, j);
    return y;
}

bool FieldMatrix::is_zero() const {
    for (auto x : a_)
        if (x.v != 0) return false;
    return true;
}

}  // namespace codedesign
