#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "umbra/matrix.hpp"

using namespace umbra;
using testutil::Rng;

// The OpenMP kernels must agree with the serial reference bit for bit.

TEST_CASE("parallel and serial matrix product agree") {
  Rng rng(101);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 10; ++trial) {
      int n = testutil::rand_int(rng, 1, 40);
      int m = testutil::rand_int(rng, 1, 40);
      int k = testutil::rand_int(rng, 1, 40);
      Matrix a = testutil::rand_matrix(rng, f, n, m);
      Matrix b = testutil::rand_matrix(rng, f, m, k);
      CHECK(kernels::mul_serial(a, b) == kernels::mul_parallel(a, b));
    }
  }
}

TEST_CASE("parallel and serial rref agree") {
  Rng rng(103);
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    for (int trial = 0; trial < 10; ++trial) {
      int n = testutil::rand_int(rng, 1, 30);
      int m = testutil::rand_int(rng, 1, 30);
      Matrix a = testutil::rand_matrix(rng, f, n, m);
      Matrix b = a;
      auto p1 = kernels::rref_serial(a);
      auto p2 = kernels::rref_parallel(b);
      CHECK(p1 == p2);
      CHECK(a == b);
    }
  }
}

TEST_CASE("results do not depend on the parallel switch") {
  Rng rng(107);
  Field q = Field::rationals();
  Matrix a = testutil::rand_matrix(rng, q, 50, 60);
  bool saved = kernels::parallel_enabled();
  kernels::set_parallel(false);
  Matrix k1 = a.kernel();
  Matrix c1 = a.cokernel();
  kernels::set_parallel(true);
  Matrix k2 = a.kernel();
  Matrix c2 = a.cokernel();
  kernels::set_parallel(saved);
  CHECK(k1 == k2);
  CHECK(c1 == c2);
}
