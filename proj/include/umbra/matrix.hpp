#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umbra/field.hpp"

namespace umbra {

// Dense exact matrix over a Field, row-major. Columns act on the right:
// (A*x)_i = sum_j A(i,j) x_j, and composition of linear maps is matrix
// product in the usual order.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
  Matrix(int rows, int cols, Field f)
      : rows_(rows), cols_(cols), field_(f), data_(size_t(rows) * cols, Scalar(0)) {}

  static Matrix identity(int n, Field f);
  static Matrix zero(int rows, int cols, Field f) { return Matrix(rows, cols, f); }
  static Matrix from_rows(const std::vector<std::vector<long>>& rows, Field f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }
  void set(int i, int j, const Scalar& v) { at(i, j) = field_.normalize(v); }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;

  // Kronecker product: (A⊗B)((i1,i2),(j1,j2)) = A(i1,j1) B(i2,j2),
  // indices ordered with the A-index major.
  Matrix kron(const Matrix& o) const;

  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix submatrix(int row0, int col0, int nrows, int ncols) const;

  int rank() const;
  bool invertible() const;
  Matrix inverse() const;  // throws if not square invertible

  // Null space: matrix K with A*K = 0 whose columns are the canonical
  // basis (one column per free column of rref(A), unit at the free index).
  Matrix kernel() const;

  // Quotient projection: matrix C with C*A = 0, rows() - rank() rows,
  // surjective; built from the canonical complement of im(A) spanned by
  // the lexicographically first standard vectors.
  Matrix cokernel() const;

  // Particular solution for A x = b together with kernel basis;
  // nullopt when infeasible. b is a rows() x 1 column.
  struct Solution;
  std::optional<Solution> solve(const Matrix& b) const;

  // Find X with (*this) * X = B (nullopt if infeasible). Free variables 0.
  std::optional<Matrix> solve_right(const Matrix& B) const;
  // Find X with X * (*this) = B.
  std::optional<Matrix> solve_left(const Matrix& B) const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

struct Matrix::Solution {
  Matrix particular;
  Matrix kernel;
};

// Reduced row echelon form with deterministic pivoting (leftmost column,
// then topmost row). Returns pivot columns. Operates in place.
std::vector<int> rref_in_place(Matrix& m);

namespace kernels {

// Serial reference implementations, kept alongside the OpenMP versions so
// tests and the benchmark can compare them directly.
Matrix mul_serial(const Matrix& a, const Matrix& b);
Matrix mul_parallel(const Matrix& a, const Matrix& b);
std::vector<int> rref_serial(Matrix& m);
std::vector<int> rref_parallel(Matrix& m);

// Global switch; defaults to true when compiled with OpenMP. Results are
// identical either way, only the schedule changes.
void set_parallel(bool on);
bool parallel_enabled();

}  // namespace kernels

}  // namespace umbra
