#pragma once

#include "umbra/base_change.hpp"

namespace umbra {

// Morphism of parametrized objects covering f: A → B, encoded Grothendieck
// style as a vertical component X → f*Y.
struct HpMorphism {
  GroupoidMap f;
  LocalSystem source;  // X over A
  LocalSystem target;  // Y over B
  ParamMap phi;        // X → f*Y

  int degree() const { return phi.degree; }
  ValidationReport validate() const;

  static HpMorphism vertical(const ParamMap& phi);
  static HpMorphism canonical_cartesian(const GroupoidMap& f, const LocalSystem& y);
  // X → f_!X with component the unit of (f_!, f*).
  static HpMorphism canonical_opcartesian(const GroupoidMap& f, const LocalSystem& x);
};

HpMorphism hp_compose(const HpMorphism& g, const HpMorphism& f);
HpMorphism hp_identity(const LocalSystem& x);
bool is_cartesian_hp(const HpMorphism& m);
// adjunct f_!X → Y of the component
ParamMap hp_adjunct(const HpMorphism& m);
bool is_opcartesian_hp(const HpMorphism& m);
HpMorphism ext_tensor_hp(const HpMorphism& a, const HpMorphism& b);
// tensor over a common base and covered map
HpMorphism int_tensor_hp(const HpMorphism& a, const HpMorphism& b);

// u-morphism X ⊸ Y covering f: A → B: the zigzag X → f_!X ← Y, encoded by
// its vertical part β: Y → f_!X.
struct UMorphism {
  GroupoidMap f;
  LocalSystem source;  // X over A
  LocalSystem target;  // Y over B
  ParamMap beta;       // Y → f_!X

  int degree() const { return -beta.degree; }
  ValidationReport validate() const;

  static UMorphism identity(const LocalSystem& x);
  static UMorphism from_vertical(const GroupoidMap& f, const LocalSystem& x,
                                 const ParamMap& beta);
  // β = id: the canonical opcartesian X ⊸ f_!X.
  static UMorphism canonical_opcartesian(const GroupoidMap& f, const LocalSystem& x);
};

UMorphism u_compose(const UMorphism& outer, const UMorphism& inner);
bool is_opcartesian_u(const UMorphism& t);
UMorphism ext_tensor_u(const UMorphism& a, const UMorphism& b);

// φ ⊘ θ for a cartesian hp-morphism and a u-morphism covering the same map.
UMorphism oslash(const HpMorphism& phi, const UMorphism& theta);

// Mixed square
//      X --φ--> Y
//      θ⦶       ⦶κ        commutes iff the unique witness φ' through the
//      Z --ψ--> W         opcartesian leg also closes the bottom square.
struct MixedSquare {
  bool commutes = false;
  HpMorphism witness;  // h_!X → k_!Y covering ψ's map
};
MixedSquare mixed_square_commutes(const HpMorphism& phi, const UMorphism& theta,
                                  const UMorphism& kappa, const HpMorphism& psi);

// Base change of κ along a homotopy cartesian square with respect to the
// cartesian morphisms φ (top) and ψ (bottom). In the square sq, the roles
// are: sq.q covers φ (D→E), sq.p is the left leg covered by the result,
// sq.g is the right leg covered by κ, and sq.f is covered by ψ.
UMorphism base_change_u(const UMorphism& kappa, const GroupoidSquare& sq,
                        const HpMorphism& phi, const HpMorphism& psi);

// t_C on a square: with sq = (p: P→A, q: P→E, f: A→C, g: E→C, filler
// f∘p ⇒ g∘q), the unique hp-morphism p_!S_P → g_!S_E covering f that
// closes the square of canonical opcartesian morphisms. Cartesian when
// the square is homotopy cartesian.
HpMorphism push_unit_map(const GroupoidSquare& sq, Field k);

}  // namespace umbra
