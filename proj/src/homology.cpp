#include "umbra/homology.hpp"

#include <stdexcept>

namespace umbra {

HBulletResult h_bullet(const LocalSystem& x) {
  HBulletResult r;
  r.witness = HpMorphism::canonical_opcartesian(to_point(x.base), x);
  r.value = r.witness.target.fibre(0);
  return r;
}

GradedLinearMap h_bullet_map(const HpMorphism& m) {
  GroupoidMap ra = to_point(m.f.src);
  GroupoidMap rb = to_point(m.f.dst);
  Shriek sb = shriek(rb, m.target);
  // X → f*Y → f*(r_B)*(r_B!Y) = r_A*(r_B!Y), then adjunct over r_A
  ParamMap step = pullback_map(m.f, shriek_unit(sb));
  ParamMap comp = step.compose(m.phi.retarget(m.phi.src, step.src));
  ParamMap comp2 = comp.retarget(comp.src, pullback(ra, sb.sys));
  ParamMap adj = adjunct_shriek(ra, comp2, sb.sys);
  return adj.at(0);
}

GradedLinearMap umkehr_map(const UMorphism& t) {
  GroupoidMap rb = to_point(t.f.dst);
  ParamMap push = shriek_map(rb, t.beta);  // r_B!Y → r_B!f_!X
  ParamMap lambda = compose_shriek_iso(rb, t.f, t.source);
  ParamMap total = lambda.compose(push.retarget(push.src, lambda.src));
  return total.at(0);
}

namespace {

// Regrouping (⊕_a V_a)⊗(⊕_b W_b) → ⊕_{(a,b)} V_a⊗W_b with the pair index
// ordered a-major. A shuffle of summands, not of factors: no signs.
GradedLinearMap sum_tensor_shuffle(const std::vector<GradedVectorSpace>& as,
                                   const std::vector<GradedVectorSpace>& bs) {
  GradedVectorSpace sum_a = diagram_sum(as), sum_b = diagram_sum(bs);
  std::vector<GradedVectorSpace> pairs;
  for (const auto& a : as)
    for (const auto& b : bs) pairs.push_back(graded_tensor(a, b));
  GradedVectorSpace dst = diagram_sum(pairs);
  GradedVectorSpace src = graded_tensor(sum_a, sum_b);
  GradedLinearMap out = GradedLinearMap::zero(src, dst, 0);

  // offsets of summand blocks inside the big sums, per degree
  auto offset = [](const std::vector<GradedVectorSpace>& vs, size_t i, int deg) {
    int off = 0;
    for (size_t k = 0; k < i; ++k) off += vs[k].dim(deg);
    return off;
  };

  TensorIndex ti(sum_a, sum_b);
  for (auto& [n, entries] : ti.entries) {
    Matrix& blk = out.blocks[n];
    for (size_t col = 0; col < entries.size(); ++col) {
      int adeg = entries[col].vdeg;
      int ai = entries[col].vidx;  // index inside (sum_a)_adeg
      int bi = entries[col].widx;  // index inside (sum_b)_{n-adeg}
      int bdeg = n - adeg;
      // locate the summands
      size_t a_summand = 0;
      int arem = ai;
      while (arem >= as[a_summand].dim(adeg)) {
        arem -= as[a_summand].dim(adeg);
        ++a_summand;
      }
      size_t b_summand = 0;
      int brem = bi;
      while (brem >= bs[b_summand].dim(bdeg)) {
        brem -= bs[b_summand].dim(bdeg);
        ++b_summand;
      }
      size_t pair_idx = a_summand * bs.size() + b_summand;
      TensorIndex pt(as[a_summand], bs[b_summand]);
      int inner = pt.index_of(n, adeg, arem, brem);
      int row = offset(pairs, pair_idx, n) + inner;
      blk.at(row, int(col)) = 1;
    }
  }
  return out;
}

}  // namespace

GradedLinearMap cross_product(const LocalSystem& x, const LocalSystem& y) {
  LocalSystem xy = external_tensor(x, y);
  Shriek sa = shriek(to_point(x.base), x);
  Shriek sb = shriek(to_point(y.base), y);
  Shriek sab = shriek(to_point(xy.base), xy);

  std::vector<GradedVectorSpace> as, bs;
  for (const auto& o : sa.at[0].objs) as.push_back(x.fibre(o.a));
  for (const auto& o : sb.at[0].objs) bs.push_back(y.fibre(o.a));

  GradedLinearMap shuffle = sum_tensor_shuffle(as, bs);
  GradedLinearMap pab = sab.at[0].colim.proj;
  GradedLinearMap tensored = tensor_map(sa.at[0].colim.proj, sb.at[0].colim.proj);
  GradedLinearMap rhs = pab.compose(shuffle);
  GradedLinearMap chi = factor_through_surjection(tensored, rhs);
  if (!chi.is_iso()) throw std::logic_error("cross product comparison not invertible");
  return chi;
}

// ----- Thom layer -----

ThomLine make_thom_line(const LocalSystem& l) {
  int deg = 0;
  bool first = true;
  for (const auto& f : l.fibres) {
    if (f.total_dim() != 1) throw std::invalid_argument("thom line: fibre not a line");
    int d = f.degrees()[0];
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      throw std::invalid_argument("thom line: fibres not in a common degree");
    }
  }
  if (!is_invertible_system(l)) throw std::invalid_argument("thom line: not invertible");
  return ThomLine{l, deg};
}

GradedVectorSpace thom_object(const ThomLine& l) { return h_bullet(l.line).value; }

OrientationCheck orientation_check(const ThomLine& l, const GradedLinearMap& u) {
  GroupoidMap r = to_point(l.line.base);
  Shriek s = shriek(r, l.line);
  // u as a vertical map over the point
  LocalSystem unit_pt = LocalSystem::unit(point(), l.line.field());
  ParamMap upm;
  upm.src = s.sys;
  upm.dst = LocalSystem::unit(r.dst, l.line.field());
  upm.degree = u.degree;
  upm.component = {u};
  ParamMap tilde = coadjunct_shriek(s, upm);  // L → r*(S) = S_B
  OrientationCheck out;
  out.trivialization =
      tilde.retarget(l.line, LocalSystem::unit(l.line.base, l.line.field()));
  out.ok = out.trivialization.is_iso();
  return out;
}

GradedLinearMap thom_diagonal(const ThomLine& l) {
  const LocalSystem& L = l.line;
  Field k = L.field();
  LocalSystem sB = LocalSystem::unit(L.base, k);
  LocalSystem ext = external_tensor(sB, L);
  GroupoidMap delta = diagonal_map(L.base);
  // canonical map L → δ*(S_B ⊗̄ L): inverse unit constraint fibrewise
  ParamMap can;
  can.src = L;
  can.dst = pullback(delta, ext);
  can.degree = 0;
  for (const auto& f : L.fibres) can.component.push_back(tensor_unit_left(f).inverse());
  HpMorphism m;
  m.f = delta;
  m.source = L;
  m.target = ext;
  m.phi = can;
  GradedLinearMap pushed = h_bullet_map(m);
  GradedLinearMap chi = cross_product(sB, L);
  return chi.inverse().compose(pushed);
}

GradedLinearMap thom_iso(const ThomLine& l, const GradedLinearMap& u, ThomDirection dir) {
  OrientationCheck oc = orientation_check(l, u);
  if (!oc.ok) throw std::invalid_argument("thom_iso: u is not an orientation");
  HpMorphism vert = HpMorphism::vertical(oc.trivialization);
  GradedLinearMap homology = h_bullet_map(vert);  // H(B;L) → H(B;S_B), degree -d
  if (dir == ThomDirection::Homology) return homology;
  // Cohomology: on linear duals, x ↦ (−1)^{deg(x)·d} x∘(ũ_•)⁻¹, a map
  // from functionals on B^ξ to functionals on H_•(B;S_B).
  return hom_pre(homology.inverse(), GradedVectorSpace::unit(l.line.field()));
}

}  // namespace umbra
