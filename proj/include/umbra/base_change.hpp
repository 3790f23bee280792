#pragma once

#include "umbra/diagram.hpp"
#include "umbra/local_system.hpp"

namespace umbra {

// ----- f* -----

LocalSystem pullback(const GroupoidMap& f, const LocalSystem& y);
ParamMap pullback_map(const GroupoidMap& f, const ParamMap& psi);

// ----- f_! (left Kan extension along f) -----

// Comma object for f_! at b: a pair (a, γ: b → f a).
struct CommaObj {
  int a;
  int gamma;
};

struct ShriekAt {
  std::vector<CommaObj> objs;
  ColimitResult colim;
};

// f_! X with its pointwise colimit presentations. The presentation is a
// deterministic function of (f, X), which strictifies all comparisons
// built from it.
struct Shriek {
  GroupoidMap f;
  LocalSystem source;
  LocalSystem sys;
  std::vector<ShriekAt> at;  // per object of the codomain
  int obj_index(int b, int a, int gamma) const;
};

Shriek shriek(const GroupoidMap& f, const LocalSystem& x);
ParamMap shriek_unit(const Shriek& s);                               // X → f*f_!X
ParamMap shriek_counit(const GroupoidMap& f, const LocalSystem& y);  // f_!f*Y → Y
ParamMap shriek_map(const GroupoidMap& f, const ParamMap& theta);    // f_!θ
// φ: X → f*Y  ⟼  f_!X → Y
ParamMap adjunct_shriek(const GroupoidMap& f, const ParamMap& phi, const LocalSystem& y);
// ψ: f_!X → Y  ⟼  X → f*Y
ParamMap coadjunct_shriek(const Shriek& s, const ParamMap& psi);

// ----- f_* (right Kan extension along f) -----

// Comma object for f_* at b: a pair (a, δ: f a → b).
struct StarAt {
  std::vector<CommaObj> objs;  // gamma field holds δ
  LimitResult lim;
};

struct Star {
  GroupoidMap f;
  LocalSystem source;
  LocalSystem sys;
  std::vector<StarAt> at;
  int obj_index(int b, int a, int delta) const;
};

Star star(const GroupoidMap& f, const LocalSystem& x);
ParamMap star_unit(const GroupoidMap& f, const LocalSystem& y);  // Y → f_*f*Y
ParamMap star_counit(const Star& s);                             // f*f_*X → X
ParamMap star_map(const GroupoidMap& f, const ParamMap& theta);  // f_*θ
// φ: f*Y → X  ⟼  Y → f_*X
ParamMap adjunct_star(const GroupoidMap& f, const LocalSystem& y, const ParamMap& phi);
// ψ: Y → f_*X  ⟼  f*Y → X
ParamMap coadjunct_star(const Star& s, const ParamMap& psi);

// ----- composition comparisons (isomorphisms in this model) -----

ParamMap compose_shriek_iso(const GroupoidMap& g, const GroupoidMap& f,
                            const LocalSystem& x);  // g_!f_!X → (g∘f)_!X
ParamMap compose_star_iso(const GroupoidMap& g, const GroupoidMap& f,
                          const LocalSystem& x);  // (g∘f)_*X → g_*f_*X

// Natural-iso induced comparisons. For σ: F ⇒ G and W over the codomain,
// sigma_pull: G*W → F*W; for W over the domain, sigma_star: F_*W → G_*W.
ParamMap sigma_pull(const NaturalIso& sigma, const LocalSystem& w);
ParamMap sigma_star(const NaturalIso& sigma, const LocalSystem& w);

// ----- monoidal structure -----

LocalSystem tensor_system(const LocalSystem& x, const LocalSystem& y);
ParamMap tensor_param(const ParamMap& phi, const ParamMap& psi);
LocalSystem hom_system(const LocalSystem& x, const LocalSystem& y);
ParamMap hom_system_post(const LocalSystem& x, const ParamMap& q);  // F(X, q)
ParamMap hom_system_pre(const ParamMap& p, const LocalSystem& w);   // F(p, W)
ParamMap tensor_system_assoc(const LocalSystem& x, const LocalSystem& y, const LocalSystem& z);
ParamMap tensor_system_unit_left(const LocalSystem& x);
ParamMap tensor_system_unit_right(const LocalSystem& x);
ParamMap tensor_system_symmetry(const LocalSystem& x, const LocalSystem& y);
ParamMap hom_system_eval(const LocalSystem& x, const LocalSystem& y);  // F(X,Y)⊗X → Y
ParamMap curry_param(const ParamMap& f, const LocalSystem& u, const LocalSystem& v);
ParamMap uncurry_param(const ParamMap& g, const LocalSystem& v, const LocalSystem& w);

// X ⊗̄ Y over product(A, B); the product groupoid is created internally and
// can be read off the result's base.
LocalSystem external_tensor(const LocalSystem& x, const LocalSystem& y);
ParamMap external_tensor_map(const ParamMap& phi, const ParamMap& psi);

// ----- duality plumbing -----

LocalSystem dual_system(const LocalSystem& x);
ParamMap eval_system(const LocalSystem& x);  // DX⊗X → S_B
bool is_invertible_system(const LocalSystem& x);

// ----- fibrewise functors, t_C -----

// F = (−)⊗W0 applied fibrewise.
LocalSystem induced_fibrewise(const GradedVectorSpace& w0, const LocalSystem& x);
ParamMap induced_fibrewise_map(const GradedVectorSpace& w0, const ParamMap& m);

LocalSystem push_unit(const GroupoidMap& alpha, Field f);  // α_! S

// ----- the six base-change relations -----

enum class WirthRelation { Unit, Product, StarAdjoint, Homs, Projection, ShriekAdjoint };

// Returns the comparison map for the relation; always an isomorphism
// (asserted by callers/tests). Argument conventions:
//   Unit:          {}              f*S_B → S_A
//   Product:       {Y, Z}          f*(Y⊗Z) → f*Y ⊗ f*Z
//   StarAdjoint:   {Y, X}          F_B(Y, f_*X) → f_*F_A(f*Y, X)
//   Homs:          {Y, Z}          f*F_B(Y,Z) → F_A(f*Y, f*Z)
//   Projection:    {Y, X}          f_!(f*Y⊗X) → Y⊗f_!X
//   ShriekAdjoint: {X, Y}          F_B(f_!X, Y) → f_*F_A(X, f*Y)
// (X lives over the domain of f, Y and Z over the codomain.)
ParamMap wirthmuller_comparison(WirthRelation rel, const GroupoidMap& f,
                                const std::vector<LocalSystem>& args);

// ----- Beck–Chevalley -----

enum class BCKind { Shriek, Star };

// For the square sq (p: P→A, q: P→B, f: A→C, g: B→C, filler f∘p ⇒ g∘q):
//   Shriek: p_! q* X → f* g_! X   for X over B;
//   Star:   g* f_* X → q_* p* X   for X over A.
// Invertibility is NOT asserted; it holds iff sq is homotopy cartesian.
ParamMap beck_chevalley(BCKind kind, const GroupoidSquare& sq, const LocalSystem& x);

}  // namespace umbra
