#include "setreal/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sr {

Matrix::Matrix(std::size_t r, std::size_t c, std::vector<Elem> entries)
    : rows(r), cols(c), a(std::move(entries)) {
  if (a.size() != r * c) throw DimensionError("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rs, std::size_t ncols) {
  std::size_t c = rs.empty() ? ncols : rs.front().size();
  Matrix M(rs.size(), c);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].size() != c) throw DimensionError("ragged matrix rows");
    std::copy(rs[i].begin(), rs[i].end(), M.row(i));
  }
  return M;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

bool Matrix::operator<(const Matrix& o) const {
  if (rows != o.rows) return rows < o.rows;
  if (cols != o.cols) return cols < o.cols;
  return a < o.a;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out(rows);
  for (std::size_t i = 0; i < rows; ++i) out[i].assign(row(i), row(i) + cols);
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << ']';
  return os.str();
}

void axpy(const Field& F, Elem* dst, const Elem* src, Elem f, std::size_t n) {
  if (f == 0) return;
  if (F.p() == 2 && f == 1) {
    for (std::size_t j = 0; j < n; ++j) dst[j] ^= src[j];
    return;
  }
  const Elem* mr = F.mul_row(f);
  const Elem* at = F.add_table();
  if (mr && at) {
    const Elem q = F.q();
    for (std::size_t j = 0; j < n; ++j)
      if (src[j]) dst[j] = at[dst[j] * q + mr[src[j]]];
    return;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (src[j]) dst[j] = F.add(dst[j], F.mul(f, src[j]));
}

Matrix mul(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.cols != B.rows)
    throw DimensionError("cannot multiply " + std::to_string(A.rows) + "x" + std::to_string(A.cols) +
                         " by " + std::to_string(B.rows) + "x" + std::to_string(B.cols));
  Matrix C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t l = 0; l < A.cols; ++l) axpy(F, C.row(i), B.row(l), A(i, l), B.cols);
  return C;
}

Matrix add(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw DimensionError("matrix sum shape mismatch");
  Matrix C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(C.a[i], B.a[i]);
  return C;
}

Matrix sub(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw DimensionError("matrix difference shape mismatch");
  Matrix C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.sub(C.a[i], B.a[i]);
  return C;
}

Matrix scale(const Field& F, Elem c, const Matrix& A) {
  Matrix C = A;
  for (auto& x : C.a) x = F.mul(c, x);
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows) throw DimensionError("hstack row mismatch");
  Matrix C(A.rows, A.cols + B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    std::copy(A.row(i), A.row(i) + A.cols, C.row(i));
    std::copy(B.row(i), B.row(i) + B.cols, C.row(i) + A.cols);
  }
  return C;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
  if (A.cols != B.cols) throw DimensionError("vstack column mismatch");
  Matrix C(A.rows + B.rows, A.cols);
  std::copy(A.a.begin(), A.a.end(), C.a.begin());
  std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
  return C;
}

Matrix block_diag(const Matrix& A, const Matrix& B) {
  Matrix C(A.rows + B.rows, A.cols + B.cols);
  for (std::size_t i = 0; i < A.rows; ++i) std::copy(A.row(i), A.row(i) + A.cols, C.row(i));
  for (std::size_t i = 0; i < B.rows; ++i) std::copy(B.row(i), B.row(i) + B.cols, C.row(A.rows + i) + A.cols);
  return C;
}

Matrix submatrix(const Matrix& A, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > A.rows || c0 + nc > A.cols) throw DimensionError("submatrix out of range");
  Matrix S(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) std::copy(A.row(r0 + i) + c0, A.row(r0 + i) + c0 + nc, S.row(i));
  return S;
}

Matrix columns(const Matrix& A, std::size_t c0, std::size_t n) { return submatrix(A, 0, c0, A.rows, n); }
Matrix rows_of(const Matrix& A, std::size_t r0, std::size_t n) { return submatrix(A, r0, 0, n, A.cols); }

Matrix matrix_pow(const Field& F, const Matrix& A, std::uint64_t e) {
  if (A.rows != A.cols) throw DimensionError("power of non-square matrix");
  Matrix R = Matrix::identity(A.rows), B = A;
  while (e) {
    if (e & 1) R = mul(F, R, B);
    e >>= 1;
    if (e) B = mul(F, B, B);
  }
  return R;
}

Echelon rref(const Field& F, Matrix M) {
  Echelon E;
  std::size_t r = 0;
  const std::size_t n = M.cols;
  for (std::size_t c = 0; c < n && r < M.rows; ++c) {
    std::size_t piv = M.rows;
    for (std::size_t i = r; i < M.rows; ++i)
      if (M(i, c)) {
        piv = i;
        break;
      }
    if (piv == M.rows) continue;
    if (piv != r) std::swap_ranges(M.row(piv), M.row(piv) + n, M.row(r));
    Elem s = F.inv(M(r, c));
    if (s != 1)
      for (std::size_t j = c; j < n; ++j) M(r, j) = F.mul(s, M(r, j));
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      Elem f = M(i, c);
      if (f) axpy(F, M.row(i) + c, M.row(r) + c, F.neg(f), n - c);
    }
    E.pivots.push_back(c);
    ++r;
  }
  E.r = std::move(M);
  return E;
}

std::size_t rank(const Field& F, const Matrix& M) { return rref(F, M).rank(); }

Matrix nullspace(const Field& F, const Matrix& M) {
  auto E = rref(F, M);
  std::vector<bool> is_piv(M.cols, false);
  for (auto c : E.pivots) is_piv[c] = true;
  Matrix N(M.cols, M.cols - E.rank());
  std::size_t k = 0;
  for (std::size_t c = 0; c < M.cols; ++c) {
    if (is_piv[c]) continue;
    N(c, k) = 1;
    for (std::size_t i = 0; i < E.rank(); ++i) N(E.pivots[i], k) = F.neg(E.r(i, c));
    ++k;
  }
  return N;
}

Matrix column_space(const Field& F, const Matrix& M) {
  auto E = rref(F, M);
  Matrix C(M.rows, E.rank());
  for (std::size_t k = 0; k < E.rank(); ++k)
    for (std::size_t i = 0; i < M.rows; ++i) C(i, k) = M(i, E.pivots[k]);
  return C;
}

std::optional<Matrix> solve(const Field& F, const Matrix& A, const Matrix& b) {
  if (A.rows != b.rows || b.cols != 1) throw DimensionError("right-hand side does not match system");
  auto E = rref(F, hstack(A, b));
  if (E.rank() && E.pivots.back() == A.cols) return std::nullopt;
  Matrix x(A.cols, 1);
  for (std::size_t i = 0; i < E.rank(); ++i) x(E.pivots[i], 0) = E.r(i, A.cols);
  return x;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& A) {
  if (A.rows != A.cols) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = A.rows;
  auto E = rref(F, hstack(A, Matrix::identity(n)));
  if (E.rank() < n || (n && E.pivots[n - 1] != n - 1)) return std::nullopt;
  return submatrix(E.r, 0, n, n, n);
}

bool is_invertible(const Field& F, const Matrix& A) {
  return A.rows == A.cols && rank(F, A) == A.rows;
}

std::optional<Matrix> solve(const Field& F, const LinearSystem& sys) {
  if (sys.vars.size() != sys.A.cols) throw DimensionError("variable map does not cover all unknowns");
  return solve(F, sys.A, sys.b);
}

}  // namespace sr
