#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "setreal/field.hpp"

namespace sr {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of field encodings. A map F^a -> F^b is a b x a matrix.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  Matrix(std::size_t r, std::size_t c, std::vector<Elem> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t ncols = 0);

  Elem& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  Elem* row(std::size_t i) { return a.data() + i * cols; }
  const Elem* row(std::size_t i) const { return a.data() + i * cols; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const;

  std::vector<std::vector<Elem>> to_rows() const;
  std::string str() const;
};

Matrix mul(const Field& F, const Matrix& A, const Matrix& B);
Matrix add(const Field& F, const Matrix& A, const Matrix& B);
Matrix sub(const Field& F, const Matrix& A, const Matrix& B);
Matrix scale(const Field& F, Elem c, const Matrix& A);
Matrix transpose(const Matrix& A);
Matrix hstack(const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);
Matrix block_diag(const Matrix& A, const Matrix& B);
Matrix submatrix(const Matrix& A, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);
/// Columns [c0, c0+n) of A.
Matrix columns(const Matrix& A, std::size_t c0, std::size_t n);
Matrix rows_of(const Matrix& A, std::size_t r0, std::size_t n);
Matrix matrix_pow(const Field& F, const Matrix& A, std::uint64_t e);

/// dst[j] += f * src[j] for j in [0, n).
void axpy(const Field& F, Elem* dst, const Elem* src, Elem f, std::size_t n);

struct Echelon {
  Matrix r;                         // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of row i, i < rank
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. Columns are processed left to right; within a
/// column the first row (top to bottom) with a nonzero entry becomes the pivot.
Echelon rref(const Field& F, Matrix M);
std::size_t rank(const Field& F, const Matrix& M);
/// Basis of {x : Mx = 0} as the columns of a cols x nullity matrix; one
/// basis vector per free column, with that free variable set to 1.
Matrix nullspace(const Field& F, const Matrix& M);
/// Basis of the column space, as columns (the pivot columns of M).
Matrix column_space(const Field& F, const Matrix& M);
/// One solution of Ax = b (free variables zero), or nothing.
std::optional<Matrix> solve(const Field& F, const Matrix& A, const Matrix& b);
std::optional<Matrix> inverse(const Field& F, const Matrix& A);
bool is_invertible(const Field& F, const Matrix& A);

/// A linear system whose unknowns are entries of per-object blocks.
struct VarName {
  std::string object;
  std::size_t row = 0, col = 0;
};

struct LinearSystem {
  Matrix A;
  Matrix b;  // column
  std::vector<VarName> vars;
  std::size_t unknowns() const { return A.cols; }
  std::size_t equations() const { return A.rows; }
};

std::optional<Matrix> solve(const Field& F, const LinearSystem& sys);

}  // namespace sr
