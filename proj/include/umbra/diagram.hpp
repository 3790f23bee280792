#pragma once

#include "umbra/graded.hpp"

namespace umbra {

// A finite diagram of graded vector spaces and degree-0 maps; the carrier
// for Kan-extension computations.
struct FiniteDiagram {
  struct Arrow {
    int src = 0;
    int dst = 0;
    GradedLinearMap map;
  };
  std::vector<GradedVectorSpace> nodes;
  std::vector<Arrow> arrows;

  void validate() const;  // endpoints valid, maps degree 0 with right ends
  Field field() const;
};

// Colimit presented as a cokernel of the relation map out of ⊕ nodes.
// `proj` is the presentation ⊕ nodes ↠ space; injections factor through it.
struct ColimitResult {
  GradedVectorSpace space;
  std::vector<GradedLinearMap> injections;
  GradedVectorSpace sum;
  GradedLinearMap proj;
};

// Limit presented as a kernel inside ⊕ nodes; `incl` is the inclusion.
struct LimitResult {
  GradedVectorSpace space;
  std::vector<GradedLinearMap> projections;
  GradedVectorSpace sum;
  GradedLinearMap incl;
};

ColimitResult diagram_colimit(const FiniteDiagram& d);
LimitResult diagram_limit(const FiniteDiagram& d);

// Direct sum bookkeeping shared by the (co)limit assembly: inclusion of and
// projection onto the i-th summand of ⊕ nodes.
GradedVectorSpace diagram_sum(const std::vector<GradedVectorSpace>& nodes);
GradedLinearMap sum_inclusion(const std::vector<GradedVectorSpace>& nodes, int i);
GradedLinearMap sum_projection(const std::vector<GradedVectorSpace>& nodes, int i);

}  // namespace umbra
