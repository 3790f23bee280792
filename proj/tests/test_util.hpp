#pragma once

#include <random>

#include "umbra/graded.hpp"

namespace umbra::testutil {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Scalar rand_scalar(Rng& rng, const Field& f) {
  return f.from_long(rand_int(rng, -2, 2));
}

inline Matrix rand_matrix(Rng& rng, const Field& f, int rows, int cols) {
  Matrix m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, rand_scalar(rng, f));
  return m;
}

inline GradedVectorSpace rand_space(Rng& rng, const Field& f, int max_dim = 3, int deg_lo = -2,
                                    int deg_hi = 2) {
  GradedVectorSpace v(f);
  int support = rand_int(rng, 1, 3);
  for (int k = 0; k < support; ++k) {
    int d = rand_int(rng, deg_lo, deg_hi);
    int n = rand_int(rng, 0, max_dim);
    if (n > 0) v.dims[d] = n;
  }
  return v;
}

inline GradedLinearMap rand_map(Rng& rng, const GradedVectorSpace& src,
                                const GradedVectorSpace& dst, int degree) {
  GradedLinearMap m = GradedLinearMap::zero(src, dst, degree);
  for (auto& [t, blk] : m.blocks) blk = rand_matrix(rng, src.field, blk.rows(), blk.cols());
  return m;
}

}  // namespace umbra::testutil
