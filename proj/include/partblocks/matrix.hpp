#pragma once

#include <map>
#include <utility>
#include <vector>

#include "partblocks/field.hpp"

namespace partblocks {

/// Dense matrix over a Field. Small and exact; no attempt at performance
/// beyond what desk-scale verification needs.
class Matrix {
public:
    Matrix(const Field& f, int rows, int cols);
    static Matrix identity(const Field& f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    FieldScalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const FieldScalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    Matrix operator+(const Matrix&) const;
    Matrix operator-(const Matrix&) const;
    Matrix operator*(const Matrix&) const;
    Matrix scaled(const FieldScalar&) const;
    Matrix transposed() const;
    FieldScalar trace() const;
    bool is_zero() const;
    bool operator==(const Matrix&) const;

    int rank() const;
    /// True iff some power (equivalently the min(rows,cols)-th) vanishes.
    bool is_nilpotent() const;

private:
    Field field_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldScalar> data_;
};

/// Incremental sparse row reduction (Gauss-Jordan) over a Field. Rows are
/// sorted (column, value) lists; suited to the near-permutation systems that
/// arise from commutator constraints on a diagram basis.
class SparseSolver {
public:
    using Row = std::vector<std::pair<int, FieldScalar>>;

    SparseSolver(const Field& f, int ncols);

    /// Reduces the row against current pivots and absorbs it if independent.
    void add_row(Row row);

    int rank() const { return static_cast<int>(pivots_.size()); }
    /// Basis of the right nullspace as dense vectors of length ncols.
    std::vector<std::vector<FieldScalar>> nullspace() const;

private:
    Field field_;
    int ncols_;
    std::map<int, Row> pivots_; // pivot column -> normalized, fully reduced row
};

} // namespace partblocks
