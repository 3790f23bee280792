#pragma once

#include "umbra/graded.hpp"
#include "umbra/groupoid.hpp"

namespace umbra {

// A parametrized object X: B^op → grVect. For m: a → b the action X(m) is a
// degree-0 isomorphism X(b) → X(a), contravariantly functorial.
struct LocalSystem {
  Gpd base;
  std::vector<GradedVectorSpace> fibres;
  std::vector<GradedLinearMap> action;

  Field field() const { return fibres.at(0).field; }
  const GradedVectorSpace& fibre(int o) const { return fibres.at(o); }
  const GradedLinearMap& act(int m) const { return action.at(m); }

  ValidationReport validate() const;
  bool same_base(const LocalSystem& o) const;

  static LocalSystem unit(const Gpd& base, Field f);  // S_B
  static LocalSystem constant(const Gpd& base, const GradedVectorSpace& v);

  LocalSystem shifted(int u) const;  // Σ^u fibrewise
  bool operator==(const LocalSystem& o) const;
};

// Degree-d morphism of local systems over a fixed base.
struct ParamMap {
  LocalSystem src, dst;
  int degree = 0;
  std::vector<GradedLinearMap> component;

  static ParamMap identity(const LocalSystem& x);
  static ParamMap zero(const LocalSystem& x, const LocalSystem& y, int degree = 0);

  const GradedLinearMap& at(int o) const { return component.at(o); }

  ValidationReport validate() const;
  ParamMap compose(const ParamMap& inner) const;
  ParamMap operator+(const ParamMap& o) const;
  ParamMap operator-(const ParamMap& o) const;
  ParamMap scaled(const Scalar& c) const;
  bool is_iso() const;
  bool is_zero() const;
  ParamMap inverse() const;
  bool operator==(const ParamMap& o) const;

  // Reinterpret against structurally equal endpoints (asserted).
  ParamMap retarget(const LocalSystem& new_src, const LocalSystem& new_dst) const;
};

}  // namespace umbra
