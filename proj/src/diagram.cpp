#include "umbra/diagram.hpp"

#include <set>
#include <stdexcept>

namespace umbra {

void FiniteDiagram::validate() const {
  for (const auto& a : arrows) {
    if (a.src < 0 || a.src >= int(nodes.size()) || a.dst < 0 || a.dst >= int(nodes.size()))
      throw std::invalid_argument("diagram arrow endpoint out of range");
    if (a.map.degree != 0) throw std::invalid_argument("diagram arrows must have degree 0");
    if (!(a.map.source == nodes[a.src]) || !(a.map.target == nodes[a.dst]))
      throw std::invalid_argument("diagram arrow endpoints mismatch");
  }
  Field f = field();
  for (const auto& n : nodes)
    if (!(n.field == f)) throw std::invalid_argument("diagram field mismatch");
}

Field FiniteDiagram::field() const {
  if (nodes.empty()) throw std::invalid_argument("empty diagram");
  return nodes[0].field;
}

GradedVectorSpace diagram_sum(const std::vector<GradedVectorSpace>& nodes) {
  GradedVectorSpace s(nodes.at(0).field);
  for (const auto& n : nodes) s = direct_sum(s, n);
  return s;
}

namespace {

int offset_of(const std::vector<GradedVectorSpace>& nodes, int i, int deg) {
  int off = 0;
  for (int k = 0; k < i; ++k) off += nodes[k].dim(deg);
  return off;
}

}  // namespace

GradedLinearMap sum_inclusion(const std::vector<GradedVectorSpace>& nodes, int i) {
  GradedVectorSpace sum = diagram_sum(nodes);
  GradedLinearMap m = GradedLinearMap::zero(nodes[i], sum, 0);
  for (auto& [d, n] : nodes[i].dims) {
    int off = offset_of(nodes, i, d);
    for (int a = 0; a < n; ++a) m.blocks[d].at(off + a, a) = 1;
  }
  return m;
}

GradedLinearMap sum_projection(const std::vector<GradedVectorSpace>& nodes, int i) {
  GradedVectorSpace sum = diagram_sum(nodes);
  GradedLinearMap m = GradedLinearMap::zero(sum, nodes[i], 0);
  for (auto& [d, n] : nodes[i].dims) {
    int off = offset_of(nodes, i, d);
    for (int a = 0; a < n; ++a) m.blocks[d].at(a, off + a) = 1;
  }
  return m;
}

ColimitResult diagram_colimit(const FiniteDiagram& d) {
  d.validate();
  Field f = d.field();
  GradedVectorSpace sum = diagram_sum(d.nodes);

  // Degrees where anything lives.
  std::set<int> degs;
  for (auto& [deg, n] : sum.dims) degs.insert(deg);

  ColimitResult res;
  res.sum = sum;
  res.space = GradedVectorSpace(f);
  res.proj = GradedLinearMap::zero(sum, GradedVectorSpace(f), 0);

  std::map<int, Matrix> projs;
  for (int deg : degs) {
    int rows = sum.dim(deg);
    int cols = 0;
    for (const auto& a : d.arrows) cols += d.nodes[a.src].dim(deg);
    Matrix rel(rows, cols, f);
    int c0 = 0;
    for (const auto& a : d.arrows) {
      int nc = d.nodes[a.src].dim(deg);
      if (nc == 0) continue;
      int off_src = offset_of(d.nodes, a.src, deg);
      int off_dst = offset_of(d.nodes, a.dst, deg);
      const Matrix& blk = a.map.block(deg);
      for (int j = 0; j < nc; ++j) {
        for (int i = 0; i < blk.rows(); ++i)
          if (!(blk.at(i, j) == 0)) rel.at(off_dst + i, c0 + j) = blk.at(i, j);
        rel.at(off_src + j, c0 + j) = f.sub(rel.at(off_src + j, c0 + j), f.one());
      }
      c0 += nc;
    }
    Matrix p = rel.cokernel();
    if (p.rows() > 0) {
      res.space.dims[deg] = p.rows();
      projs[deg] = p;
    }
  }

  res.proj = GradedLinearMap::zero(sum, res.space, 0);
  for (auto& [deg, p] : projs) res.proj.blocks[deg] = p;
  for (size_t i = 0; i < d.nodes.size(); ++i)
    res.injections.push_back(res.proj.compose(sum_inclusion(d.nodes, int(i))));
  return res;
}

LimitResult diagram_limit(const FiniteDiagram& d) {
  d.validate();
  Field f = d.field();
  GradedVectorSpace sum = diagram_sum(d.nodes);

  std::set<int> degs;
  for (auto& [deg, n] : sum.dims) degs.insert(deg);

  LimitResult res;
  res.sum = sum;
  res.space = GradedVectorSpace(f);

  std::map<int, Matrix> incls;
  for (int deg : degs) {
    int cols = sum.dim(deg);
    int rows = 0;
    for (const auto& a : d.arrows) rows += d.nodes[a.dst].dim(deg);
    Matrix rel(rows, cols, f);
    int r0 = 0;
    for (const auto& a : d.arrows) {
      int nr = d.nodes[a.dst].dim(deg);
      if (nr == 0) continue;
      int off_src = offset_of(d.nodes, a.src, deg);
      int off_dst = offset_of(d.nodes, a.dst, deg);
      if (d.nodes[a.src].dim(deg) > 0) {
        const Matrix& blk = a.map.block(deg);
        for (int i = 0; i < nr; ++i)
          for (int j = 0; j < blk.cols(); ++j)
            if (!(blk.at(i, j) == 0)) rel.at(r0 + i, off_src + j) = blk.at(i, j);
      }
      for (int i = 0; i < nr; ++i)
        rel.at(r0 + i, off_dst + i) = f.sub(rel.at(r0 + i, off_dst + i), f.one());
      r0 += nr;
    }
    Matrix k = rel.kernel();
    if (k.cols() > 0) {
      res.space.dims[deg] = k.cols();
      incls[deg] = k;
    }
  }

  res.incl = GradedLinearMap::zero(res.space, sum, 0);
  for (auto& [deg, k] : incls) res.incl.blocks[deg] = k;
  for (size_t i = 0; i < d.nodes.size(); ++i)
    res.projections.push_back(sum_projection(d.nodes, int(i)).compose(res.incl));
  return res;
}

}  // namespace umbra
