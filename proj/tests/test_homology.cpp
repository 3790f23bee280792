#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_systems.hpp"
#include "umbra/homology.hpp"

using namespace umbra;
using testutil::Rng;

namespace {
Field Q = Field::rationals();

UMorphism dualizing_theta_bc3() {
  // BC3/Q: ω the trivial line, β: S_pt → p_!ω the identification with the
  // coinvariants line.
  Gpd b3 = cyclic_groupoid(3);
  GroupoidMap r = to_point(b3);
  LocalSystem w = LocalSystem::unit(b3, Q);
  Shriek s = shriek(r, w);
  LocalSystem spt = LocalSystem::unit(point(), Q);
  ParamMap beta = ParamMap::zero(spt, s.sys, 0);
  beta.component[0].blocks[0].at(0, 0) = 1;
  return UMorphism::from_vertical(r, w, beta);
}

UMorphism dualizing_theta_discrete2() {
  // discrete(2) → pt: ω = (Q, Q), β the diagonal unit.
  Gpd d2 = discrete(2);
  GroupoidMap r = to_point(d2);
  LocalSystem w = LocalSystem::unit(d2, Q);
  Shriek s = shriek(r, w);
  LocalSystem spt = LocalSystem::unit(point(), Q);
  ParamMap beta = ParamMap::zero(spt, s.sys, 0);
  for (int i = 0; i < s.sys.fibre(0).dim(0); ++i) beta.component[0].blocks[0].at(i, 0) = 1;
  return UMorphism::from_vertical(r, w, beta);
}
}  // namespace

TEST_CASE("h_bullet on basic systems") {
  GradedVectorSpace v(Q);
  v.dims = {{0, 1}, {2, 2}};
  LocalSystem cv = LocalSystem::constant(point(), v);
  CHECK(h_bullet(cv).value == v);

  Gpd b2 = cyclic_groupoid(2);
  CHECK(h_bullet(testutil::sign_system(b2, Q)).value.total_dim() == 0);

  Gpd d2 = discrete(2);
  LocalSystem x;
  x.base = d2;
  x.fibres = {GradedVectorSpace::line(Q, 0), GradedVectorSpace::line(Q, 1)};
  x.action = {GradedLinearMap::identity(x.fibres[0]),
              GradedLinearMap::identity(x.fibres[1])};
  GradedVectorSpace h = h_bullet(x).value;
  CHECK(h.dim(0) == 1);
  CHECK(h.dim(1) == 1);
}

TEST_CASE("h_bullet_map examples") {
  Gpd b2 = cyclic_groupoid(2);
  LocalSystem u = LocalSystem::unit(b2, Q);
  CHECK(h_bullet_map(hp_identity(u)) == GradedLinearMap::identity(h_bullet(u).value));

  HpMorphism m = HpMorphism::canonical_opcartesian(to_point(b2), u);
  CHECK(h_bullet_map(m).is_iso());

  Gpd d2 = discrete(2);
  LocalSystem y = LocalSystem::unit(d2, Q);
  HpMorphism incl;
  incl.f = object_inclusion(d2, 1);
  incl.source = LocalSystem::unit(point(), Q);
  incl.target = y;
  incl.phi = ParamMap::identity(incl.source).retarget(incl.source, pullback(incl.f, y));
  GradedLinearMap g = h_bullet_map(incl);
  CHECK(g.source.total_dim() == 1);
  CHECK(g.target.total_dim() == 2);
  CHECK(g.block(0).at(0, 0) == 0);
  CHECK(g.block(0).at(1, 0) == 1);
}

TEST_CASE("h_bullet_map is functorial on randomized composites") {
  Rng rng(61);
  Gpd b2 = cyclic_groupoid(2);
  GroupoidMap i = object_inclusion(b2, 0);
  GroupoidMap r = to_point(b2);
  for (int trial = 0; trial < 6; ++trial) {
    LocalSystem x = testutil::rand_system(rng, b2, GroupTable::cyclic(2), Q);
    HpMorphism a = HpMorphism::canonical_cartesian(i, x);
    HpMorphism b = HpMorphism::canonical_opcartesian(r, x);
    HpMorphism ba = hp_compose(b, hp_compose(HpMorphism::vertical(ParamMap::identity(x)), a));
    CHECK(h_bullet_map(ba) == h_bullet_map(b).compose(h_bullet_map(a)));
  }
}

TEST_CASE("umkehr of the identity and of dualizing morphisms") {
  LocalSystem v = LocalSystem::constant(point(), GradedVectorSpace::line(Q, 0));
  CHECK(umkehr_map(UMorphism::identity(v)).is_iso());

  UMorphism th2 = dualizing_theta_discrete2();
  GradedLinearMap d = umkehr_map(th2);
  CHECK(d.source.total_dim() == 1);
  CHECK(d.target.total_dim() == 2);
  CHECK(d.block(0).at(0, 0) == 1);
  CHECK(d.block(0).at(1, 0) == 1);

  UMorphism th3 = dualizing_theta_bc3();
  GradedLinearMap e = umkehr_map(th3);
  CHECK(e.source.total_dim() == 1);
  CHECK(e.target.total_dim() == 1);
  CHECK(e.is_iso());
}

TEST_CASE("umkehr is contravariantly functorial") {
  UMorphism th3 = dualizing_theta_bc3();
  UMorphism idu = UMorphism::identity(th3.source);
  UMorphism comp = u_compose(th3, idu);
  CHECK(umkehr_map(comp) == umkehr_map(idu).compose(umkehr_map(th3)));

  UMorphism opc = UMorphism::canonical_opcartesian(identity_map(point()), th3.target);
  UMorphism comp2 = u_compose(opc, th3);
  CHECK(umkehr_map(comp2) == umkehr_map(th3).compose(umkehr_map(opc)));
}

TEST_CASE("umkehr sends opcartesian u-morphisms to isomorphisms") {
  Gpd b3 = cyclic_groupoid(3);
  LocalSystem u = LocalSystem::unit(b3, Q);
  UMorphism opc = UMorphism::canonical_opcartesian(to_point(b3), u);
  CHECK(umkehr_map(opc).is_iso());
}

TEST_CASE("mixed-square naturality of umkehr maps") {
  Gpd b2 = cyclic_groupoid(2);
  GroupoidMap r = to_point(b2);
  LocalSystem regq = testutil::regular_system(b2, GroupTable::cyclic(2), Q);
  Shriek s = shriek(r, regq);
  LocalSystem sptq = LocalSystem::unit(point(), Q);
  ParamMap beta = ParamMap::zero(sptq, s.sys, 0);
  beta.component[0].blocks[0].at(0, 0) = 1;
  UMorphism theta = UMorphism::from_vertical(r, regq, beta);
  HpMorphism phi = HpMorphism::canonical_opcartesian(r, regq);
  UMorphism kappa = UMorphism::from_vertical(
      identity_map(point()), s.sys,
      beta.retarget(sptq, shriek(identity_map(point()), s.sys).sys));
  HpMorphism psi = hp_identity(sptq);
  REQUIRE(mixed_square_commutes(phi, theta, kappa, psi).commutes);
  GradedLinearMap lhs = h_bullet_map(phi).compose(umkehr_map(theta));
  GradedLinearMap rhs = umkehr_map(kappa).compose(h_bullet_map(psi));
  CHECK(lhs == rhs);
}

TEST_CASE("cross product is an isomorphism and distributes") {
  LocalSystem a = LocalSystem::constant(point(), GradedVectorSpace::line(Q, 1));
  LocalSystem b = LocalSystem::constant(point(), GradedVectorSpace::line(Q, 2));
  GradedLinearMap x = cross_product(a, b);
  CHECK(x.is_iso());
  CHECK(x.source.dim(3) == 1);

  Gpd d2 = discrete(2);
  LocalSystem y = LocalSystem::unit(d2, Q);
  GradedLinearMap x2 = cross_product(y, a);
  CHECK(x2.is_iso());
  CHECK(x2.source.dim(1) == 2);

  Gpd b2 = cyclic_groupoid(2);
  LocalSystem sgn = testutil::sign_system(b2, Q);
  GradedLinearMap x3 = cross_product(sgn, sgn);
  CHECK(x3.source.total_dim() == 0);
  CHECK(x3.target.total_dim() == 0);
  CHECK(x3.is_iso());
}

TEST_CASE("cross product unitality and associativity dims") {
  Rng rng(67);
  Gpd b2 = cyclic_groupoid(2);
  LocalSystem x = testutil::rand_system(rng, b2, GroupTable::cyclic(2), Q);
  LocalSystem y = LocalSystem::constant(point(), GradedVectorSpace::line(Q, 1));
  LocalSystem spt = LocalSystem::unit(point(), Q);
  GradedLinearMap u = cross_product(x, spt);
  CHECK(u.is_iso());
  LocalSystem xy = external_tensor(x, y);
  GradedLinearMap a1 = cross_product(xy, spt);
  GradedLinearMap a2 = cross_product(x, external_tensor(y, spt));
  CHECK(a1.target.total_dim() == a2.target.total_dim());
  CHECK(a1.is_iso());
  CHECK(a2.is_iso());
}

TEST_CASE("thom objects and orientation checks") {
  LocalSystem lpt = LocalSystem::unit(point(), Q);
  ThomLine tl = make_thom_line(lpt);
  CHECK(thom_object(tl) == GradedVectorSpace::unit(Q));
  GradedLinearMap u = GradedLinearMap::identity(GradedVectorSpace::unit(Q));
  auto oc = orientation_check(tl, u);
  CHECK(oc.ok);

  Gpd b2 = cyclic_groupoid(2);
  LocalSystem sgn = testutil::sign_system(b2, Q);
  ThomLine ts = make_thom_line(sgn);
  CHECK(thom_object(ts).total_dim() == 0);
  GradedLinearMap zero_u =
      GradedLinearMap::zero(thom_object(ts), GradedVectorSpace::unit(Q), 0);
  CHECK(!orientation_check(ts, zero_u).ok);

  Field f2 = Field::prime(2);
  LocalSystem sgn2 = testutil::sign_system(b2, f2);
  ThomLine ts2 = make_thom_line(sgn2);
  CHECK(thom_object(ts2).total_dim() == 1);
  GradedLinearMap u2 = GradedLinearMap::zero(thom_object(ts2), GradedVectorSpace::unit(f2), 0);
  u2.blocks[0].at(0, 0) = 1;
  auto oc2 = orientation_check(ts2, u2);
  CHECK(oc2.ok);
}

TEST_CASE("orientation check iff fibrewise nonvanishing") {
  Rng rng(71);
  Gpd d2 = discrete(2);
  for (int trial = 0; trial < 20; ++trial) {
    int deg = testutil::rand_int(rng, -1, 1);
    LocalSystem l = LocalSystem::constant(d2, GradedVectorSpace::line(Q, deg));
    ThomLine tl = make_thom_line(l);
    GradedVectorSpace bx = thom_object(tl);
    REQUIRE(bx.total_dim() == 2);
    GradedLinearMap u = GradedLinearMap::zero(bx, GradedVectorSpace::unit(Q), -deg);
    long c0 = testutil::rand_int(rng, -1, 1), c1 = testutil::rand_int(rng, -1, 1);
    u.blocks[deg].at(0, 0) = Q.from_long(c0);
    u.blocks[deg].at(0, 1) = Q.from_long(c1);
    bool expect = (c0 != 0) && (c1 != 0);
    CHECK(orientation_check(tl, u).ok == expect);
  }
}

TEST_CASE("thom diagonal examples and compatibility square") {
  LocalSystem lpt = LocalSystem::unit(point(), Q);
  GradedLinearMap d = thom_diagonal(make_thom_line(lpt));
  CHECK(d.is_iso());
  CHECK(d.block(0).at(0, 0) == 1);

  Gpd d2 = discrete(2);
  LocalSystem l2 = LocalSystem::unit(d2, Q);
  GradedLinearMap d2m = thom_diagonal(make_thom_line(l2));
  CHECK(d2m.source.total_dim() == 2);
  CHECK(d2m.target.total_dim() == 4);
  CHECK(d2m.block(0).rank() == 2);

  Field f2 = Field::prime(2);
  Gpd b2 = cyclic_groupoid(2);
  LocalSystem sgn2 = testutil::sign_system(b2, f2);
  ThomLine ts2 = make_thom_line(sgn2);
  GradedLinearMap u2 = GradedLinearMap::zero(thom_object(ts2), GradedVectorSpace::unit(f2), 0);
  u2.blocks[0].at(0, 0) = 1;
  GradedLinearMap ubullet = thom_iso(ts2, u2, ThomDirection::Homology);
  GradedLinearMap lhs =
      tensor_map(GradedLinearMap::identity(h_bullet(LocalSystem::unit(b2, f2)).value), ubullet)
          .compose(thom_diagonal(ts2));
  ThomLine unit_line = make_thom_line(LocalSystem::unit(b2, f2));
  GradedLinearMap rhs = thom_diagonal(unit_line).compose(ubullet);
  CHECK(lhs == rhs);
}

TEST_CASE("thom isomorphism and its signs") {
  LocalSystem lpt = LocalSystem::unit(point(), Q);
  ThomLine tl = make_thom_line(lpt);
  GradedLinearMap u = GradedLinearMap::identity(GradedVectorSpace::unit(Q));
  CHECK(thom_iso(tl, u, ThomDirection::Homology) == u);

  LocalSystem l1 = LocalSystem::constant(point(), GradedVectorSpace::line(Q, 1));
  ThomLine t1 = make_thom_line(l1);
  GradedVectorSpace bx = thom_object(t1);
  GradedLinearMap u1 = GradedLinearMap::zero(bx, GradedVectorSpace::unit(Q), -1);
  u1.blocks[1].at(0, 0) = 1;
  REQUIRE(orientation_check(t1, u1).ok);
  GradedLinearMap hom = thom_iso(t1, u1, ThomDirection::Homology);
  CHECK(hom.is_iso());
  GradedLinearMap coh = thom_iso(t1, u1, ThomDirection::Cohomology);
  // a degree-1 class on B^ξ is a hom-degree −1 functional; the sign
  // (−1)^{kd} = −1 shows up there
  CHECK(coh.blocks.at(-1).at(0, 0) == -1);

  CHECK(hom.inverse().compose(hom) == GradedLinearMap::identity(h_bullet(l1).value));

  Field f2 = Field::prime(2);
  Gpd b2 = cyclic_groupoid(2);
  LocalSystem sgn2 = testutil::sign_system(b2, f2);
  ThomLine ts2 = make_thom_line(sgn2);
  GradedLinearMap u2 = GradedLinearMap::zero(thom_object(ts2), GradedVectorSpace::unit(f2), 0);
  u2.blocks[0].at(0, 0) = 1;
  CHECK(thom_iso(ts2, u2, ThomDirection::Homology).is_iso());
}
