#ifndef CODEDESIGN_MATRIX_HPP
#define CODEDESIGN_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "codedesign/field.hpp"

namespace codedesign {

// Dense row-major matrix over one field. Elimination is deterministic: pivots
// are chosen as the first nonzero entry scanning rows top to bottom, so equal
// inputs give bit-equal outputs on every platform.
class FieldMatrix {
public:
    FieldMatrix(const FieldContext& F, std::size_t rows, std::size_t cols);
    static FieldMatrix identity(const FieldContext& F, std::size_t n);
    // Entry (i, j) is points[j]^i; rows indexed 0..rows-1.
    static FieldMatrix vandermonde(const FieldContext& F, std::size_t rows,
                                   const std::vector<FieldElement>& points);

    const FieldContext& field() const { return *F_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    FieldElement at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    FieldMatrix mul(const FieldMatrix& rhs) const;
    // Row vector times matrix: v has rows() entries, result has cols().
    std::vector<FieldElement> left_mul(const std::vector<FieldElement>& v) const;
    FieldMatrix transpose() const;

    FieldElement det() const;  // square matrices only
    std::size_t rank() const;
    std::optional<FieldMatrix> inverse() const;  // nullopt when singular

    // Nonzero y with y * M = 0, or nullopt when the rows are independent.
    // Deterministic: the first free row index gets coefficient 1.
    std::optional<std::vector<FieldElement>> left_nullspace_vector() const;

    bool is_zero() const;
    friend bool operator==(const FieldMatrix& x, const FieldMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    const FieldContext* F_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

}  // namespace codedesign

#endif
