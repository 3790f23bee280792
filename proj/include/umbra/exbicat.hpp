#pragma once

#include <functional>
#include <optional>

#include "umbra/base_change.hpp"

namespace umbra {

// 1-cell E1 ⇸ E2 of the framed bicategory over B: a local system on the
// homotopy fibre product E1 ×^h_B E2, stored with the product and its
// projections.
struct OneCell {
  GroupoidMap p1, p2;  // E1 → B, E2 → B
  IsoComma prod;       // iso_comma(p1, p2); objects (e1, e2, γ: p1e1 → p2e2)
  LocalSystem carrier;
};

OneCell make_cell(const GroupoidMap& p1, const GroupoidMap& p2, const LocalSystem& carrier);

// The identification of ho(C_{/E}) with 1-cells E ⇸ B (p2 = id_B), and back.
OneCell cell_from_system(const LocalSystem& x, const GroupoidMap& p);
LocalSystem system_of_cell(const OneCell& m);
// 1-cell B ⇸ E with carrier concentrated on the graph of p (used for B_p).
OneCell cell_from_system_left(const LocalSystem& x, const GroupoidMap& p);

// 2-cell with frames over B; globular when both frames are identities, in
// which case the component is simply a map of carriers.
struct TwoCell {
  GroupoidMap frame1, frame2;
  OneCell src, dst;
  ParamMap component;  // carrier_src → (induced map on products)*(carrier_dst)
};

// Horizontal unit U^B_E = δ_!S_E.
OneCell unit_cell(const GroupoidMap& p);

// Horizontal composition via the push–tensor–pull formula, computed on the
// strict comma presentation; functorial on globular 2-cells.
OneCell odot(const OneCell& m, const OneCell& n);
ParamMap odot_map(const OneCell& m1, const OneCell& n1, const OneCell& m2, const OneCell& n2,
                  const ParamMap& alpha, const ParamMap& beta);

// Coherence cells, materialized as explicit invertible maps of carriers.
ParamMap left_unitor(const OneCell& m);   // U_{E1}⊙M → M
ParamMap right_unitor(const OneCell& m);  // M⊙U_{E2} → M
ParamMap associator(const OneCell& m, const OneCell& n, const OneCell& p);
// (M⊙N)⊙P → M⊙(N⊙P)

// Right and left homs: for N: X ⇸ Z and P: W ⇸ Z, N▷P: W ⇸ X; for
// M: W ⇸ X and P: W ⇸ Z, P◁M: X ⇸ Z.
OneCell rtriangle(const OneCell& n, const OneCell& p);
OneCell ltriangle(const OneCell& p, const OneCell& m);

// The natural bijection 2-cells(M⊙N → P) ≅ 2-cells(M → N▷P).
ParamMap hom_bij_forward(const OneCell& m, const OneCell& n, const OneCell& p,
                         const ParamMap& alpha);
ParamMap hom_bij_backward(const OneCell& m, const OneCell& n, const OneCell& p,
                          const ParamMap& g);

OneCell op_involution(const OneCell& m);

// Machine-checkable duality data for (M, N): η: U → M⊙N, ε: N⊙M → U with
// the two triangle composites recorded.
struct DualPairCertificate {
  OneCell m, n;
  ParamMap eta, eps;
  ParamMap triangle1, triangle2;  // both identities when valid
  bool verify() const;
};

struct DualPairOutcome {
  bool dualizable = false;
  DualPairCertificate cert;
  std::string reason;  // set when not dualizable
};

// Candidate right dual N = M▷U with the canonical evaluation; solves the
// triangle identities as exact linear systems. With an η hint, ε is solved
// from triangle 1 and triangle 2 is verified.
DualPairOutcome solve_dual_pair(const OneCell& m,
                                const std::optional<ParamMap>& eta_hint = std::nullopt);

// Right dualizability ⟺ invertibility of μ: M⊙(M▷U) → M▷M.
bool mu_criterion(const OneCell& m);

// Composite certificate for (M⊙M', N'⊙N).
DualPairOutcome compose_dual_pairs(const DualPairCertificate& c1, const DualPairCertificate& c2);

// Restriction of a 1-cell to the homotopy fibres over an object of B,
// followed by the μ-criterion in Ex over the point.
bool pointwise_dualizable(const OneCell& m, int b);

// Base-change 1-cells for f: D → E over B (p_D = p_E ∘ f), with the dual
// pair (_fE, E_f) certified. The defining (op)cartesian 2-cells are the
// shriek units of the graph maps recorded here.
struct BaseChangeCells {
  OneCell into;  // _fE : D ⇸ E = (id,f)_! S_D
  OneCell from;  // E_f : E ⇸ D = (f,id)_! S_D
  GroupoidMap graph_into, graph_from;
  DualPairCertificate cert;
};
BaseChangeCells base_change_cells(const GroupoidMap& f, const GroupoidMap& p_d,
                                  const GroupoidMap& p_e, Field k);

bool is_invertible(const LocalSystem& x);  // evaluation-map criterion

struct CwDualOutcome {
  bool dualizable = false;
  LocalSystem dual;  // over E when dualizable
  DualPairCertificate cert;
  std::string reason;
};
// Costenoble–Waner dual of a finite groupoid: solve_dual_pair(S_E^op) in
// Ex over the point.
CwDualOutcome cw_dual(const Gpd& e, Field k);

// Basis of the space of globular 2-cells a → b of the given degree
// (solutions of the naturality constraints).
std::vector<ParamMap> globular_basis(const OneCell& a, const OneCell& b, int degree);

// Solve Σ c_i T_k(basis_i) = target_k over the scalar field for one or
// several linear operators; nullopt if infeasible.
std::optional<ParamMap> solve_two_cell(
    const OneCell& a, const OneCell& b, int degree,
    const std::vector<std::function<ParamMap(const ParamMap&)>>& ops,
    const std::vector<ParamMap>& targets);

}  // namespace umbra
