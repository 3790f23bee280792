#include "umbra/hp.hpp"

#include <stdexcept>

namespace umbra {

// ----- HpMorphism -----

ValidationReport HpMorphism::validate() const {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
  if (!same_gpd(source.base, f.src)) return fail("hp source base mismatch");
  if (!same_gpd(target.base, f.dst)) return fail("hp target base mismatch");
  if (!(phi.src == source)) return fail("hp component source mismatch");
  if (!(phi.dst == pullback(f, target))) return fail("hp component target is not f*Y");
  return phi.validate();
}

HpMorphism HpMorphism::vertical(const ParamMap& phi) {
  HpMorphism m;
  m.f = identity_map(phi.src.base);
  m.source = phi.src;
  m.target = phi.dst;
  m.phi = phi.retarget(phi.src, pullback(m.f, phi.dst));
  return m;
}

HpMorphism HpMorphism::canonical_cartesian(const GroupoidMap& f, const LocalSystem& y) {
  HpMorphism m;
  m.f = f;
  m.source = pullback(f, y);
  m.target = y;
  m.phi = ParamMap::identity(m.source);
  return m;
}

HpMorphism HpMorphism::canonical_opcartesian(const GroupoidMap& f, const LocalSystem& x) {
  HpMorphism m;
  m.f = f;
  m.source = x;
  Shriek s = shriek(f, x);
  m.target = s.sys;
  m.phi = shriek_unit(s);
  return m;
}

HpMorphism hp_compose(const HpMorphism& g, const HpMorphism& f) {
  HpMorphism m;
  m.f = compose(g.f, f.f);
  m.source = f.source;
  m.target = g.target;
  ParamMap step = pullback_map(f.f, g.phi);  // f*X_mid → f*(g*Z)
  ParamMap comp = step.compose(f.phi.retarget(f.phi.src, step.src));
  m.phi = comp.retarget(comp.src, pullback(m.f, g.target));
  return m;
}

HpMorphism hp_identity(const LocalSystem& x) {
  return HpMorphism::vertical(ParamMap::identity(x));
}

bool is_cartesian_hp(const HpMorphism& m) { return m.phi.is_iso(); }

ParamMap hp_adjunct(const HpMorphism& m) { return adjunct_shriek(m.f, m.phi, m.target); }

bool is_opcartesian_hp(const HpMorphism& m) { return hp_adjunct(m).is_iso(); }

HpMorphism ext_tensor_hp(const HpMorphism& a, const HpMorphism& b) {
  HpMorphism m;
  m.f = product_map(a.f, b.f);
  m.source = external_tensor(a.source, b.source);
  m.target = external_tensor(a.target, b.target);
  ParamMap comp = external_tensor_map(a.phi, b.phi);
  m.phi = comp.retarget(comp.src, pullback(m.f, m.target));
  return m;
}

HpMorphism int_tensor_hp(const HpMorphism& a, const HpMorphism& b) {
  if (!same_gpd(a.f.src, b.f.src) || !same_gpd(a.f.dst, b.f.dst))
    throw std::invalid_argument("int_tensor_hp: morphisms must cover the same map");
  HpMorphism m;
  m.f = a.f;
  m.source = tensor_system(a.source, b.source);
  m.target = tensor_system(a.target, b.target);
  ParamMap comp = tensor_param(a.phi, b.phi);
  m.phi = comp.retarget(comp.src, pullback(m.f, m.target));
  return m;
}

// ----- UMorphism -----

ValidationReport UMorphism::validate() const {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
  if (!same_gpd(source.base, f.src)) return fail("u source base mismatch");
  if (!same_gpd(target.base, f.dst)) return fail("u target base mismatch");
  if (!(beta.src == target)) return fail("u vertical part source mismatch");
  if (!(beta.dst == shriek(f, source).sys)) return fail("u vertical part target is not f_!X");
  return beta.validate();
}

UMorphism UMorphism::identity(const LocalSystem& x) {
  return canonical_opcartesian(identity_map(x.base), x);
}

UMorphism UMorphism::from_vertical(const GroupoidMap& f, const LocalSystem& x,
                                   const ParamMap& beta) {
  UMorphism t;
  t.f = f;
  t.source = x;
  t.target = beta.src;
  t.beta = beta;
  return t;
}

UMorphism UMorphism::canonical_opcartesian(const GroupoidMap& f, const LocalSystem& x) {
  UMorphism t;
  t.f = f;
  t.source = x;
  t.target = shriek(f, x).sys;
  t.beta = ParamMap::identity(t.target);
  return t;
}

UMorphism u_compose(const UMorphism& outer, const UMorphism& inner) {
  // outer: Y ⊸ Z over g, inner: X ⊸ Y over f; vertical part of the
  // composite is λ ∘ g_!(β_inner) ∘ β_outer.
  const GroupoidMap& g = outer.f;
  const GroupoidMap& f = inner.f;
  ParamMap gb = shriek_map(g, inner.beta);  // g_!Y → g_!f_!X
  ParamMap lambda = compose_shriek_iso(g, f, inner.source);
  ParamMap total = lambda.compose(
      gb.retarget(gb.src, lambda.src).compose(outer.beta.retarget(outer.beta.src, gb.src)));
  UMorphism t;
  t.f = compose(g, f);
  t.source = inner.source;
  t.target = outer.target;
  t.beta = total.retarget(outer.target, shriek(t.f, t.source).sys);
  return t;
}

bool is_opcartesian_u(const UMorphism& t) { return t.beta.is_iso(); }

UMorphism ext_tensor_u(const UMorphism& a, const UMorphism& b) {
  // χ: (f×g)_!(X⊗̄X') → f_!X ⊗̄ g_!X' is the adjunct of unit⊗̄unit and is
  // invertible; β = χ⁻¹∘(β_a⊗̄β_b).
  Shriek sa = shriek(a.f, a.source);
  Shriek sb = shriek(b.f, b.source);
  GroupoidMap fg = product_map(a.f, b.f);
  LocalSystem ext_src = external_tensor(a.source, b.source);
  LocalSystem ext_shrieks = external_tensor(sa.sys, sb.sys);
  ParamMap units = external_tensor_map(shriek_unit(sa), shriek_unit(sb));
  ParamMap units2 = units.retarget(ext_src, pullback(fg, ext_shrieks));
  ParamMap chi = adjunct_shriek(fg, units2, ext_shrieks);
  if (!chi.is_iso()) throw std::logic_error("external shriek comparison not invertible");
  ParamMap bb = external_tensor_map(a.beta, b.beta);
  UMorphism t;
  t.f = fg;
  t.source = ext_src;
  t.target = external_tensor(a.target, b.target);
  t.beta = chi.inverse().compose(bb.retarget(t.target, chi.dst));
  return t;
}

UMorphism oslash(const HpMorphism& phi, const UMorphism& theta) {
  if (!same_gpd(phi.f.src, theta.f.src) || !same_gpd(phi.f.dst, theta.f.dst))
    throw std::invalid_argument("oslash: must cover the same map");
  if (!is_cartesian_hp(phi)) throw std::invalid_argument("oslash: hp-morphism not cartesian");
  const GroupoidMap& f = phi.f;
  // v: f_!(X₁⊗Y₁) → X₂⊗f_!Y₁ is the adjunct of φ̂⊗unit; invertible by the
  // projection formula since φ is cartesian.
  Shriek sy = shriek(f, theta.source);
  LocalSystem rhs = tensor_system(phi.target, sy.sys);
  ParamMap fu = tensor_param(phi.phi, shriek_unit(sy));
  ParamMap fu2 = fu.retarget(fu.src, pullback(f, rhs));
  ParamMap v = adjunct_shriek(f, fu2, rhs);
  if (!v.is_iso())
    throw std::logic_error("oslash: projection-formula comparison not invertible");
  ParamMap idb = tensor_param(ParamMap::identity(phi.target), theta.beta);
  UMorphism t;
  t.f = f;
  t.source = tensor_system(phi.source, theta.source);
  t.target = tensor_system(phi.target, theta.target);
  ParamMap total = v.inverse().compose(idb.retarget(t.target, v.dst));
  t.beta = total.retarget(t.target, shriek(f, t.source).sys);
  return t;
}

MixedSquare mixed_square_commutes(const HpMorphism& phi, const UMorphism& theta,
                                  const UMorphism& kappa, const HpMorphism& psi) {
  const GroupoidMap& h = theta.f;
  const GroupoidMap& k = kappa.f;
  const GroupoidMap& g = psi.f;
  GroupoidMap gh = compose(g, h), kf = compose(k, phi.f);
  if (gh.obj_map != kf.obj_map || gh.mor_map != kf.mor_map)
    throw std::invalid_argument("mixed square: covered square does not commute");
  Shriek sk = shriek(k, kappa.source);
  Shriek sh = shriek(h, theta.source);
  // unique witness φ': h_!X → k_!Y covering g with φ'∘opcart_h = opcart_k∘φ
  ParamMap step = pullback_map(phi.f, shriek_unit(sk));  // f̄*Y → f̄*k*(k_!Y)
  ParamMap comp = step.compose(phi.phi.retarget(phi.phi.src, step.src));
  LocalSystem gk = pullback(g, sk.sys);
  ParamMap comp2 = comp.retarget(comp.src, pullback(h, gk));
  ParamMap witness_phi = adjunct_shriek(h, comp2, gk);  // h_!X → g*(k_!Y)
  MixedSquare out;
  out.witness.f = g;
  out.witness.source = sh.sys;
  out.witness.target = sk.sys;
  out.witness.phi = witness_phi.retarget(sh.sys, pullback(g, sk.sys));
  // bottom square: φ'∘β_θ == g*(β_κ)∘ψ̂
  ParamMap lhs = witness_phi.compose(theta.beta.retarget(theta.beta.src, witness_phi.src));
  ParamMap rhs_step = pullback_map(g, kappa.beta);
  ParamMap rhs = rhs_step.compose(psi.phi.retarget(psi.phi.src, rhs_step.src));
  out.commutes = lhs == rhs.retarget(rhs.src, lhs.dst);
  return out;
}

UMorphism base_change_u(const UMorphism& kappa, const GroupoidSquare& sq,
                        const HpMorphism& phi, const HpMorphism& psi) {
  if (!is_homotopy_cartesian(sq))
    throw std::invalid_argument("base_change_u: square not homotopy cartesian");
  if (!is_cartesian_hp(phi) || !is_cartesian_hp(psi))
    throw std::invalid_argument("base_change_u: horizontal legs not cartesian");
  const GroupoidMap& q = sq.p;  // left leg, covered by the result
  Shriek sp = shriek(sq.g, kappa.source);
  Shriek sqx = shriek(q, phi.source);
  ParamMap step = pullback_map(sq.q, shriek_unit(sp));  // top*Y → top*(p*(p_!Y))
  ParamMap comp = step.compose(phi.phi.retarget(phi.phi.src, step.src));
  ParamMap corr = sigma_pull(sq.filler, sp.sys);  // (g∘top)*W → (f∘q)*W
  ParamMap comp2 = corr.compose(comp.retarget(comp.src, corr.src));
  LocalSystem fP = pullback(sq.f, sp.sys);
  ParamMap comp3 = comp2.retarget(comp2.src, pullback(q, fP));
  ParamMap witness = adjunct_shriek(q, comp3, fP);  // q_!X → f*(p_!Y)
  if (!witness.is_iso()) throw std::logic_error("base_change_u: witness not invertible");
  ParamMap fb = pullback_map(sq.f, kappa.beta);
  ParamMap chain = fb.compose(psi.phi.retarget(psi.phi.src, fb.src));
  ParamMap beta = witness.inverse().compose(chain.retarget(chain.src, witness.dst));
  UMorphism t;
  t.f = q;
  t.source = phi.source;
  t.target = psi.source;
  t.beta = beta.retarget(t.target, sqx.sys);
  return t;
}

HpMorphism push_unit_map(const GroupoidSquare& sq, Field k) {
  auto rep = sq.validate();
  if (!rep.ok) throw std::invalid_argument("push_unit_map: " + rep.reason);
  Shriek sg = shriek(sq.g, LocalSystem::unit(sq.g.src, k));
  LocalSystem w = sg.sys;  // g_!S over C
  // S_P = q*S_E → q*(g*W) = (g∘q)*W, then the filler moves to (f∘p)*W
  ParamMap up = pullback_map(sq.q, shriek_unit(sg));
  ParamMap corr = sigma_pull(sq.filler, w);
  ParamMap comp = corr.compose(up.retarget(up.src, corr.src));
  LocalSystem sp = LocalSystem::unit(sq.p.src, k);
  LocalSystem fw = pullback(sq.f, w);
  ParamMap comp2 = comp.retarget(sp, pullback(sq.p, fw));
  ParamMap witness = adjunct_shriek(sq.p, comp2, fw);
  HpMorphism m;
  m.f = sq.f;
  m.source = shriek(sq.p, sp).sys;
  m.target = w;
  m.phi = witness.retarget(m.source, pullback(sq.f, m.target));
  return m;
}

}  // namespace umbra
