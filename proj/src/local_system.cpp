#include "umbra/local_system.hpp"

#include <stdexcept>

namespace umbra {

ValidationReport LocalSystem::validate() const {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
  const FiniteGroupoid& B = *base;
  if (int(fibres.size()) != B.n_objects || int(action.size()) != B.n_mor())
    return fail("local system table sizes mismatch");
  for (int m = 0; m < B.n_mor(); ++m) {
    const GradedLinearMap& g = action[m];
    if (g.degree != 0) return fail("action must have degree 0");
    if (!(g.source == fibres[B.mor_dst[m]]) || !(g.target == fibres[B.mor_src[m]]))
      return fail("action of morphism " + std::to_string(m) + " ill-typed");
    if (!g.is_iso()) return fail("action of morphism " + std::to_string(m) + " not invertible");
  }
  for (int o = 0; o < B.n_objects; ++o)
    if (!(action[B.identity_mor[o]] == GradedLinearMap::identity(fibres[o])))
      return fail("action of identity is not the identity");
  for (auto& [k, v] : B.comp_table) {
    int g = int(k >> 32), f = int(k & 0xffffffffu);
    // X(g∘f) = X(f)∘X(g)
    if (!(action[v] == action[f].compose(action[g])))
      return fail("action not contravariantly functorial");
  }
  return {};
}

bool LocalSystem::same_base(const LocalSystem& o) const {
  return base.get() == o.base.get() || base->signature() == o.base->signature();
}

LocalSystem LocalSystem::unit(const Gpd& base, Field f) {
  return constant(base, GradedVectorSpace::unit(f));
}

LocalSystem LocalSystem::constant(const Gpd& base, const GradedVectorSpace& v) {
  LocalSystem x;
  x.base = base;
  x.fibres.assign(base->n_objects, v);
  x.action.assign(base->n_mor(), GradedLinearMap::identity(v));
  return x;
}

LocalSystem LocalSystem::shifted(int u) const {
  LocalSystem x;
  x.base = base;
  for (const auto& f : fibres) x.fibres.push_back(f.shifted(u));
  for (const auto& a : action) x.action.push_back(a.shifted(u));
  return x;
}

bool LocalSystem::operator==(const LocalSystem& o) const {
  if (!same_base(o) || fibres.size() != o.fibres.size()) return false;
  for (size_t i = 0; i < fibres.size(); ++i)
    if (!(fibres[i] == o.fibres[i])) return false;
  for (size_t m = 0; m < action.size(); ++m)
    if (!(action[m] == o.action[m])) return false;
  return true;
}

ParamMap ParamMap::identity(const LocalSystem& x) {
  ParamMap p;
  p.src = p.dst = x;
  p.degree = 0;
  for (const auto& f : x.fibres) p.component.push_back(GradedLinearMap::identity(f));
  return p;
}

ParamMap ParamMap::zero(const LocalSystem& x, const LocalSystem& y, int degree) {
  ParamMap p;
  p.src = x;
  p.dst = y;
  p.degree = degree;
  for (size_t o = 0; o < x.fibres.size(); ++o)
    p.component.push_back(GradedLinearMap::zero(x.fibres[o], y.fibres[o], degree));
  return p;
}

ValidationReport ParamMap::validate() const {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
  if (!src.same_base(dst)) return fail("param map endpoints over different bases");
  const FiniteGroupoid& B = *src.base;
  if (int(component.size()) != B.n_objects) return fail("component count mismatch");
  for (int o = 0; o < B.n_objects; ++o) {
    const auto& c = component[o];
    if (c.degree != degree) return fail("component degree mismatch");
    if (!(c.source == src.fibres[o]) || !(c.target == dst.fibres[o]))
      return fail("component ill-typed at object " + std::to_string(o));
  }
  for (int m = 0; m < B.n_mor(); ++m) {
    int a = B.mor_src[m], b = B.mor_dst[m];
    // naturality: φ_a ∘ X(m) = Y(m) ∘ φ_b
    if (!(component[a].compose(src.action[m]) == dst.action[m].compose(component[b])))
      return fail("naturality fails at morphism " + std::to_string(m));
  }
  return {};
}

ParamMap ParamMap::compose(const ParamMap& inner) const {
  ParamMap p;
  p.src = inner.src;
  p.dst = dst;
  p.degree = degree + inner.degree;
  for (size_t o = 0; o < component.size(); ++o)
    p.component.push_back(component[o].compose(inner.component[o]));
  return p;
}

ParamMap ParamMap::operator+(const ParamMap& o) const {
  ParamMap p = *this;
  for (size_t i = 0; i < component.size(); ++i) p.component[i] = p.component[i] + o.component[i];
  return p;
}

ParamMap ParamMap::operator-(const ParamMap& o) const { return *this + o.scaled(Scalar(-1)); }

ParamMap ParamMap::scaled(const Scalar& c) const {
  ParamMap p = *this;
  for (auto& g : p.component) g = g.scaled(c);
  return p;
}

bool ParamMap::is_iso() const {
  for (const auto& c : component)
    if (!c.is_iso()) return false;
  return true;
}

bool ParamMap::is_zero() const {
  for (const auto& c : component)
    if (!c.is_zero()) return false;
  return true;
}

ParamMap ParamMap::inverse() const {
  ParamMap p;
  p.src = dst;
  p.dst = src;
  p.degree = -degree;
  for (const auto& c : component) p.component.push_back(c.inverse());
  return p;
}

bool ParamMap::operator==(const ParamMap& o) const {
  if (degree != o.degree || component.size() != o.component.size()) return false;
  for (size_t i = 0; i < component.size(); ++i)
    if (!(component[i] == o.component[i])) return false;
  return true;
}

ParamMap ParamMap::retarget(const LocalSystem& new_src, const LocalSystem& new_dst) const {
  if (!(src == new_src) || !(dst == new_dst))
    throw std::invalid_argument("retarget: systems differ structurally");
  ParamMap p = *this;
  p.src = new_src;
  p.dst = new_dst;
  return p;
}

}  // namespace umbra
