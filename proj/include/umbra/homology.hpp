#pragma once

#include "umbra/hp.hpp"

namespace umbra {

// H_•(B;X) = r_!X for r: B → pt, together with the canonical opcartesian
// witness X → r_!X used by all induced maps.
struct HBulletResult {
  GradedVectorSpace value;
  HpMorphism witness;
};

HBulletResult h_bullet(const LocalSystem& x);

// (f,φ)_•: the unique map closing the square of canonical opcartesian
// witnesses. Sends opcartesian hp-morphisms to isomorphisms.
GradedLinearMap h_bullet_map(const HpMorphism& m);

// (f,θ)^←: H_•(B;Y) → H_•(A;X), contravariantly functorial.
GradedLinearMap umkehr_map(const UMorphism& t);

// Monoidality constraint H_•(A;X)⊗H_•(B;Y) → H_•(A×B;X⊗̄Y); always iso.
GradedLinearMap cross_product(const LocalSystem& x, const LocalSystem& y);

// ----- Thom layer -----

// An invertible system whose fibres are lines in one common degree.
struct ThomLine {
  LocalSystem line;
  int dim = 0;  // the common fibre degree d
};

ThomLine make_thom_line(const LocalSystem& l);  // throws if not a line system

GradedVectorSpace thom_object(const ThomLine& l);  // B^ξ = H_•(B; S^ξ)

struct OrientationCheck {
  bool ok = false;
  ParamMap trivialization;  // ũ: L → S_B of degree -d
};

// u: thom_object(L) → k of degree -d; ok iff the right adjunct ũ is an iso.
OrientationCheck orientation_check(const ThomLine& l, const GradedLinearMap& u);

// Thom diagonal B^ξ → H_•(B;S_B) ⊗ B^ξ via the unique factorization
// through the cartesian composite over the diagonal.
GradedLinearMap thom_diagonal(const ThomLine& l);

enum class ThomDirection { Homology, Cohomology };

// Homology: postcomposition with ũ_• (degree -d iso). Cohomology: the
// dualized map with the Koszul sign (−1)^{kd} on degree-k functionals.
GradedLinearMap thom_iso(const ThomLine& l, const GradedLinearMap& u, ThomDirection dir);

}  // namespace umbra
