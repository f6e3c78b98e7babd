#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arq/field.hpp"

namespace arq {

/// Dense matrix of exact scalars; zero-sized shapes are legal.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Builds a matrix from nested rows (all rows must have equal length).
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols = 0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    Matrix select_columns(const std::vector<std::size_t>& cols) const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;
    std::vector<Scalar> column(std::size_t j) const;
    std::vector<Scalar> row(std::size_t i) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix column_vector(const std::vector<Scalar>& v);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, const Scalar& s, const Matrix& a);
/// Reduces every entry into the field.
Matrix reduce(const Field& f, const Matrix& a);
Matrix power(const Field& f, const Matrix& a, unsigned long k);

/// Reduced row echelon form with its pivot columns.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Over Q the elimination is fraction-free on
/// integer rows with content removal; the result is normalized to RREF.
RowEchelon rref(const Field& f, const Matrix& m);
std::size_t rank(const Field& f, const Matrix& m);

/// Result of rank_kernel: rank plus an echelon-normalized kernel basis.
struct RankKernel {
    std::size_t rank = 0;
    /// Each vector has length cols(m); together they form a matrix in RREF.
    std::vector<std::vector<Scalar>> kernel;
};

/// @returns rank and kernel basis; rank + kernel.size() == cols(m).
RankKernel rank_kernel(const Field& f, const Matrix& m);
/// Kernel basis as the columns of a matrix (cols(m) x nullity).
Matrix kernel_matrix(const Field& f, const Matrix& m);
/// Rows are functionals spanning the annihilator of im(m): a projection onto
/// (target space)/im(m). Shape (rows - rank) x rows.
Matrix cokernel_basis(const Field& f, const Matrix& m);
/// Basis of the column space of m as columns (deterministic, reduced).
Matrix column_space(const Field& f, const Matrix& m);
/// Solves a * x = b; std::nullopt when inconsistent.
std::optional<Matrix> solve(const Field& f, const Matrix& a, const Matrix& b);
bool is_invertible(const Field& f, const Matrix& a);
/// @throws ArqError("Singular") when not invertible.
Matrix inverse(const Field& f, const Matrix& a);
/// For a matrix in RREF with the given pivots: a right inverse selecting
/// pivot coordinates (cols x rank), i.e. reduced * section = identity.
Matrix pivot_section(const RowEchelon& e);

}  // namespace arq
