#pragma once

#include <map>
#include <vector>

#include "umbra/matrix.hpp"

namespace umbra {

// Finite-dimensional Z-graded vector space over an exact field. Degrees may
// be negative; only nonzero dimensions are stored.
struct GradedVectorSpace {
  Field field = Field::rationals();
  std::map<int, int> dims;

  GradedVectorSpace() = default;
  explicit GradedVectorSpace(Field f) : field(f) {}

  static GradedVectorSpace zero(Field f) { return GradedVectorSpace(f); }
  static GradedVectorSpace line(Field f, int deg = 0);
  static GradedVectorSpace concentrated(Field f, int deg, int dim);
  // The monoidal unit S: one dimension in degree 0.
  static GradedVectorSpace unit(Field f) { return line(f, 0); }

  int dim(int n) const {
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
  }
  int total_dim() const;
  std::vector<int> degrees() const;
  bool is_zero() const { return dims.empty(); }
  void set_dim(int n, int d);

  GradedVectorSpace shifted(int u) const;  // (Σ^u V)_n = V_{n-u}
  bool operator==(const GradedVectorSpace&) const = default;
};

GradedVectorSpace direct_sum(const GradedVectorSpace& a, const GradedVectorSpace& b);

// Degree-d map of graded spaces: a matrix block V_t -> W_{t+d} for every
// t in the support of V.
struct GradedLinearMap {
  GradedVectorSpace source, target;
  int degree = 0;
  std::map<int, Matrix> blocks;

  static GradedLinearMap zero(const GradedVectorSpace& src, const GradedVectorSpace& dst,
                              int degree = 0);
  static GradedLinearMap identity(const GradedVectorSpace& v);

  const Matrix& block(int t) const;
  Matrix& block(int t);

  GradedLinearMap compose(const GradedLinearMap& inner) const;  // (*this) ∘ inner
  GradedLinearMap operator+(const GradedLinearMap& o) const;
  GradedLinearMap operator-(const GradedLinearMap& o) const;
  GradedLinearMap scaled(const Scalar& c) const;

  bool is_zero() const;
  bool is_iso() const;
  GradedLinearMap inverse() const;
  bool operator==(const GradedLinearMap& o) const;

  // Reinterpret as a map Σ^u source -> Σ^u target (same blocks, reindexed).
  GradedLinearMap shifted(int u) const;

  std::string to_string() const;
};

// ----- tensor -----

GradedVectorSpace graded_tensor(const GradedVectorSpace& v, const GradedVectorSpace& w);

// Basis order of (V⊗W)_n: degrees i of V ascending, then V-index, then
// W-index (Kronecker within a fixed (i, n-i) block).
struct TensorIndex {
  struct Entry {
    int vdeg;
    int vidx;
    int widx;
  };
  std::map<int, std::vector<Entry>> entries;  // per total degree
  TensorIndex(const GradedVectorSpace& v, const GradedVectorSpace& w);
  int index_of(int n, int vdeg, int vidx, int widx) const;
};

// φ⊗ψ with the Koszul sign (−1)^{|ψ|·|v|} on the V_{|v|} block.
GradedLinearMap tensor_map(const GradedLinearMap& phi, const GradedLinearMap& psi);

// v⊗w ↦ (−1)^{|v||w|} w⊗v.
GradedLinearMap symmetry(const GradedVectorSpace& v, const GradedVectorSpace& w);

// (U⊗V)⊗W → U⊗(V⊗W), a permutation-free reindexing (coefficients 1).
GradedLinearMap tensor_assoc(const GradedVectorSpace& u, const GradedVectorSpace& v,
                             const GradedVectorSpace& w);
GradedLinearMap tensor_unit_left(const GradedVectorSpace& v);   // S⊗V → V
GradedLinearMap tensor_unit_right(const GradedVectorSpace& v);  // V⊗S → V

// ----- hom -----

// Hom(V,W)_d = ⊕_t Hom(V_t, W_{t+d}); basis ordered by t, then source
// index, then target index.
GradedVectorSpace graded_hom(const GradedVectorSpace& v, const GradedVectorSpace& w);

struct HomIndex {
  struct Entry {
    int t;
    int src;
    int dst;
  };
  std::map<int, std::vector<Entry>> entries;
  HomIndex(const GradedVectorSpace& v, const GradedVectorSpace& w);
  int index_of(int d, int t, int src, int dst) const;
};

// Evaluation Hom(V,W)⊗V → W, sign-free.
GradedLinearMap hom_eval(const GradedVectorSpace& v, const GradedVectorSpace& w);

// curry(f: U⊗V→W): U → Hom(V,W), inverse of uncurry_to; both sign-free.
GradedLinearMap curry(const GradedLinearMap& f, const GradedVectorSpace& u,
                      const GradedVectorSpace& v);
GradedLinearMap uncurry_to(const GradedLinearMap& g, const GradedVectorSpace& v,
                           const GradedVectorSpace& w);

// Postcomposition q_*: Hom(V,W) → Hom(V,W'), degree |q|, sign-free.
GradedLinearMap hom_post(const GradedVectorSpace& v, const GradedLinearMap& q);
// Precomposition p^*: Hom(V,W) → Hom(V',W), degree |p|, with the Koszul
// sign (−1)^{|p||φ|}.
GradedLinearMap hom_pre(const GradedLinearMap& p, const GradedVectorSpace& w);

// Dual DV = Hom(V, S) and the evaluation DV⊗V → S.
GradedVectorSpace graded_dual(const GradedVectorSpace& v);
GradedLinearMap dual_eval(const GradedVectorSpace& v);
// S → V⊗DV (coevaluation of the (V, DV) duality).
GradedLinearMap dual_coeval(const GradedVectorSpace& v);

// Embed a single vector as a map S → V (degree = deg, unit basis vector idx).
GradedLinearMap basis_vector(const GradedVectorSpace& v, int deg, int idx);

// Given a degreewise surjection P: A → B (degree 0) and R: A → C, the unique
// M: B → C with M∘P = R. Throws if R does not descend.
GradedLinearMap factor_through_surjection(const GradedLinearMap& p, const GradedLinearMap& r);

// Given a degreewise injection K: B → A (degree 0) and R: C → A landing in
// the image of K, the unique M: C → B with K∘M = R.
GradedLinearMap factor_through_injection(const GradedLinearMap& k, const GradedLinearMap& r);

}  // namespace umbra
