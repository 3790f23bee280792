#include "umbra/matrix.hpp"

#include <sstream>
#include <stdexcept>

#ifdef UMBRA_WITH_OPENMP
#include <omp.h>
#endif

namespace umbra {

namespace kernels {

namespace {
bool g_parallel =
#ifdef UMBRA_WITH_OPENMP
    true;
#else
    false;
#endif
}  // namespace

void set_parallel(bool on) { g_parallel = on; }
bool parallel_enabled() { return g_parallel; }

Matrix mul_serial(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols(), a.field());
  const Field& f = a.field();
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) c.at(i, j) = f.normalize(c.at(i, j));
  return c;
}

Matrix mul_parallel(const Matrix& a, const Matrix& b) {
#ifndef UMBRA_WITH_OPENMP
  return mul_serial(a, b);
#else
  Matrix c(a.rows(), b.cols(), a.field());
  const Field& f = a.field();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        c.at(i, j) += aik * b.at(k, j);
      }
    }
    for (int j = 0; j < c.cols(); ++j) c.at(i, j) = f.normalize(c.at(i, j));
  }
  return c;
#endif
}

namespace {

// Shared skeleton: pivot search and row normalization are inherently
// ordered; only the elimination across rows is parallel. Row updates are
// independent, so the result does not depend on the thread count.
template <bool Parallel>
std::vector<int> rref_impl(Matrix& m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!(m.at(i, col) == 0)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Scalar invp = f.inv(m.at(r, col));
    for (int j = col; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), invp);

    auto eliminate = [&](int i) {
      if (i == r) return;
      const Scalar c = m.at(i, col);
      if (c == 0) return;
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), c * m.at(r, j));
    };
    if constexpr (Parallel) {
#ifdef UMBRA_WITH_OPENMP
#pragma omp parallel for schedule(static)
      for (int i = 0; i < m.rows(); ++i) eliminate(i);
#else
      for (int i = 0; i < m.rows(); ++i) eliminate(i);
#endif
    } else {
      for (int i = 0; i < m.rows(); ++i) eliminate(i);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<int> rref_serial(Matrix& m) { return rref_impl<false>(m); }
std::vector<int> rref_parallel(Matrix& m) { return rref_impl<true>(m); }

}  // namespace kernels

namespace {
// Below these sizes the OpenMP fork/join overhead dominates.
constexpr long kMulCutoff = 64 * 64;
constexpr long kRrefCutoff = 48 * 48;
}  // namespace

Matrix Matrix::identity(int n, Field f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows, Field f) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  Matrix m(r, c, f);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = f.from_long(rows[i][j]);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!(v == 0)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix product shape/field mismatch");
  if (kernels::parallel_enabled() && long(rows_) * o.cols_ >= kMulCutoff)
    return kernels::mul_parallel(*this, o);
  return kernels::mul_serial(*this, o);
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  Matrix c = *this;
  for (size_t i = 0; i < data_.size(); ++i) c.data_[i] = field_.add(c.data_[i], o.data_[i]);
  return c;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  Matrix c = *this;
  for (size_t i = 0; i < data_.size(); ++i) c.data_[i] = field_.sub(c.data_[i], o.data_[i]);
  return c;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& v : m.data_) v = field_.mul(v, c);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix k(rows_ * o.rows_, cols_ * o.cols_, field_);
  for (int i1 = 0; i1 < rows_; ++i1)
    for (int j1 = 0; j1 < cols_; ++j1) {
      const Scalar& a = at(i1, j1);
      if (a == 0) continue;
      for (int i2 = 0; i2 < o.rows_; ++i2)
        for (int j2 = 0; j2 < o.cols_; ++j2)
          k.at(i1 * o.rows_ + i2, j1 * o.cols_ + j2) = field_.mul(a, o.at(i2, j2));
    }
  return k;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix m(rows_, cols_ + o.cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
  Matrix m(rows_ + o.rows_, cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
  return m;
}

Matrix Matrix::submatrix(int row0, int col0, int nrows, int ncols) const {
  Matrix m(nrows, ncols, field_);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m.at(i, j) = at(row0 + i, col0 + j);
  return m;
}

std::vector<int> rref_in_place(Matrix& m) {
  if (kernels::parallel_enabled() && long(m.rows()) * m.cols() >= kRrefCutoff)
    return kernels::rref_parallel(m);
  return kernels::rref_serial(m);
}

int Matrix::rank() const {
  Matrix m = *this;
  return int(rref_in_place(m).size());
}

bool Matrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug = hstack(identity(rows_, field_));
  auto piv = rref_in_place(aug);
  if (int(piv.size()) != rows_) throw std::domain_error("matrix not invertible");
  return aug.submatrix(0, cols_, rows_, cols_);
}

Matrix Matrix::kernel() const {
  Matrix m = *this;
  auto piv = rref_in_place(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(cols_, int(free_cols.size()), field_);
  for (size_t fc = 0; fc < free_cols.size(); ++fc) {
    int j = free_cols[fc];
    k.at(j, int(fc)) = 1;
    for (size_t r = 0; r < piv.size(); ++r) k.at(piv[r], int(fc)) = field_.neg(m.at(int(r), j));
  }
  return k;
}

Matrix Matrix::cokernel() const {
  // Canonical basis of im(A), then greedy completion by standard vectors.
  Matrix m = *this;
  auto piv = rref_in_place(m);
  int r = int(piv.size());
  Matrix basis(rows_, rows_, field_);
  // Pivot columns of A span the image.
  for (int c = 0; c < r; ++c)
    for (int i = 0; i < rows_; ++i) basis.at(i, c) = at(i, piv[c]);
  int have = r;
  for (int j = 0; j < rows_ && have < rows_; ++j) {
    Matrix trial = basis.submatrix(0, 0, rows_, have);
    Matrix e(rows_, 1, field_);
    e.at(j, 0) = 1;
    if (trial.hstack(e).rank() > have) {
      for (int i = 0; i < rows_; ++i) basis.at(i, have) = e.at(i, 0);
      ++have;
    }
  }
  if (have != rows_) throw std::logic_error("cokernel basis completion failed");
  Matrix pinv = basis.inverse();
  return pinv.submatrix(r, 0, rows_ - r, rows_);
}

std::optional<Matrix> Matrix::solve_right(const Matrix& B) const {
  if (B.rows() != rows_) throw std::invalid_argument("solve_right shape mismatch");
  Matrix aug = hstack(B);
  auto piv = rref_in_place(aug);
  // Any pivot landing in the B block signals infeasibility.
  for (int c : piv)
    if (c >= cols_) return std::nullopt;
  Matrix x(cols_, B.cols(), field_);
  for (size_t r = 0; r < piv.size(); ++r)
    for (int j = 0; j < B.cols(); ++j) x.at(piv[r], j) = aug.at(int(r), cols_ + j);
  return x;
}

std::optional<Matrix> Matrix::solve_left(const Matrix& B) const {
  auto xt = transpose().solve_right(B.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

std::optional<Matrix::Solution> Matrix::solve(const Matrix& b) const {
  if (b.cols() != 1) throw std::invalid_argument("rhs must be a column");
  auto x = solve_right(b);
  if (!x) return std::nullopt;
  return Solution{*x, kernel()};
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << field_.print(at(i, j));
    }
  }
  os << "]";
  return os.str();
}

}  // namespace umbra
