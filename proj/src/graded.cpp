#include "umbra/graded.hpp"

#include <sstream>
#include <stdexcept>

namespace umbra {

GradedVectorSpace GradedVectorSpace::line(Field f, int deg) {
  GradedVectorSpace v(f);
  v.dims[deg] = 1;
  return v;
}

GradedVectorSpace GradedVectorSpace::concentrated(Field f, int deg, int dim) {
  GradedVectorSpace v(f);
  if (dim > 0) v.dims[deg] = dim;
  return v;
}

int GradedVectorSpace::total_dim() const {
  int t = 0;
  for (auto& [d, n] : dims) t += n;
  return t;
}

std::vector<int> GradedVectorSpace::degrees() const {
  std::vector<int> ds;
  for (auto& [d, n] : dims) ds.push_back(d);
  return ds;
}

void GradedVectorSpace::set_dim(int n, int d) {
  if (d == 0)
    dims.erase(n);
  else
    dims[n] = d;
}

GradedVectorSpace GradedVectorSpace::shifted(int u) const {
  GradedVectorSpace v(field);
  for (auto& [d, n] : dims) v.dims[d + u] = n;
  return v;
}

GradedVectorSpace direct_sum(const GradedVectorSpace& a, const GradedVectorSpace& b) {
  GradedVectorSpace v(a.field);
  v.dims = a.dims;
  for (auto& [d, n] : b.dims) v.dims[d] += n;
  return v;
}

// ----- GradedLinearMap -----

GradedLinearMap GradedLinearMap::zero(const GradedVectorSpace& src,
                                      const GradedVectorSpace& dst, int degree) {
  GradedLinearMap m;
  m.source = src;
  m.target = dst;
  m.degree = degree;
  for (auto& [t, n] : src.dims)
    m.blocks.emplace(t, Matrix(dst.dim(t + degree), n, src.field));
  return m;
}

GradedLinearMap GradedLinearMap::identity(const GradedVectorSpace& v) {
  GradedLinearMap m = zero(v, v, 0);
  for (auto& [t, n] : v.dims) m.blocks[t] = Matrix::identity(n, v.field);
  return m;
}

const Matrix& GradedLinearMap::block(int t) const {
  auto it = blocks.find(t);
  if (it == blocks.end()) throw std::out_of_range("no block in that degree");
  return it->second;
}

Matrix& GradedLinearMap::block(int t) {
  auto it = blocks.find(t);
  if (it == blocks.end()) throw std::out_of_range("no block in that degree");
  return it->second;
}

GradedLinearMap GradedLinearMap::compose(const GradedLinearMap& inner) const {
  if (!(inner.target == source)) throw std::invalid_argument("compose: middle space mismatch");
  GradedLinearMap m = zero(inner.source, target, degree + inner.degree);
  for (auto& [t, blk] : inner.blocks) {
    int mid = t + inner.degree;
    if (source.dim(mid) == 0) continue;  // inner block is 0-row; composite stays 0
    m.blocks[t] = block(mid) * blk;
  }
  return m;
}

GradedLinearMap GradedLinearMap::operator+(const GradedLinearMap& o) const {
  if (!(source == o.source) || !(target == o.target) || degree != o.degree)
    throw std::invalid_argument("graded map sum mismatch");
  GradedLinearMap m = *this;
  for (auto& [t, blk] : o.blocks) m.blocks[t] = m.blocks[t] + blk;
  return m;
}

GradedLinearMap GradedLinearMap::operator-(const GradedLinearMap& o) const {
  return *this + o.scaled(Scalar(-1));
}

GradedLinearMap GradedLinearMap::scaled(const Scalar& c) const {
  GradedLinearMap m = *this;
  for (auto& [t, blk] : m.blocks) blk = blk.scaled(c);
  return m;
}

bool GradedLinearMap::is_zero() const {
  for (auto& [t, blk] : blocks)
    if (!blk.is_zero()) return false;
  return true;
}

bool GradedLinearMap::is_iso() const {
  // Iso of graded spaces: every block square and invertible, and the
  // target has no degrees missed by source+degree.
  for (auto& [t, n] : target.dims)
    if (source.dim(t - degree) != n) return false;
  for (auto& [t, blk] : blocks) {
    if (blk.rows() != blk.cols()) return false;
    if (blk.rows() > 0 && !blk.invertible()) return false;
  }
  return true;
}

GradedLinearMap GradedLinearMap::inverse() const {
  if (!is_iso()) throw std::domain_error("graded map not invertible");
  GradedLinearMap m = zero(target, source, -degree);
  for (auto& [t, blk] : blocks)
    if (blk.rows() > 0) m.blocks[t + degree] = blk.inverse();
  return m;
}

bool GradedLinearMap::operator==(const GradedLinearMap& o) const {
  if (!(source == o.source) || !(target == o.target) || degree != o.degree) return false;
  for (auto& [t, blk] : blocks) {
    auto it = o.blocks.find(t);
    if (it == o.blocks.end()) {
      if (!blk.is_zero()) return false;
    } else if (!(blk == it->second)) {
      return false;
    }
  }
  return true;
}

GradedLinearMap GradedLinearMap::shifted(int u) const {
  GradedLinearMap m;
  m.source = source.shifted(u);
  m.target = target.shifted(u);
  m.degree = degree;
  for (auto& [t, blk] : blocks) m.blocks.emplace(t + u, blk);
  return m;
}

std::string GradedLinearMap::to_string() const {
  std::ostringstream os;
  os << "deg " << degree << " {";
  for (auto& [t, blk] : blocks) os << " " << t << ":" << blk.to_string();
  os << " }";
  return os.str();
}

// ----- tensor -----

GradedVectorSpace graded_tensor(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  GradedVectorSpace t(v.field);
  for (auto& [i, n] : v.dims)
    for (auto& [j, m] : w.dims) t.dims[i + j] += n * m;
  return t;
}

TensorIndex::TensorIndex(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  for (auto& [i, n] : v.dims)
    for (auto& [j, m] : w.dims)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) entries[i + j].push_back({i, a, b});
}

int TensorIndex::index_of(int n, int vdeg, int vidx, int widx) const {
  auto it = entries.find(n);
  if (it == entries.end()) throw std::out_of_range("tensor degree empty");
  const auto& es = it->second;
  for (size_t k = 0; k < es.size(); ++k)
    if (es[k].vdeg == vdeg && es[k].vidx == vidx && es[k].widx == widx) return int(k);
  throw std::out_of_range("tensor index not found");
}

GradedLinearMap tensor_map(const GradedLinearMap& phi, const GradedLinearMap& psi) {
  const auto& f = phi.source.field;
  GradedVectorSpace src = graded_tensor(phi.source, psi.source);
  GradedVectorSpace dst = graded_tensor(phi.target, psi.target);
  int deg = phi.degree + psi.degree;
  TensorIndex si(phi.source, psi.source), di(phi.target, psi.target);
  GradedLinearMap m = GradedLinearMap::zero(src, dst, deg);
  for (auto& [n, es] : si.entries) {
    Matrix& blk = m.blocks[n];
    auto dit = di.entries.find(n + deg);
    if (dit == di.entries.end()) continue;
    const auto& des = dit->second;
    for (size_t col = 0; col < es.size(); ++col) {
      int i = es[col].vdeg, a = es[col].vidx, b = es[col].widx;
      int j = n - i;
      const Matrix& pb = phi.block(i);
      const Matrix& qb = psi.block(j);
      bool negate = (psi.degree % 2 != 0) && (i % 2 != 0);
      for (size_t row = 0; row < des.size(); ++row) {
        if (des[row].vdeg != i + phi.degree) continue;
        int c = des[row].vidx, d = des[row].widx;
        Scalar val = f.mul(pb.at(c, a), qb.at(d, b));
        if (negate) val = f.neg(val);
        if (!(val == 0)) blk.at(int(row), int(col)) = val;
      }
    }
  }
  return m;
}

GradedLinearMap symmetry(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  const auto& f = v.field;
  GradedVectorSpace src = graded_tensor(v, w);
  GradedVectorSpace dst = graded_tensor(w, v);
  TensorIndex si(v, w), di(w, v);
  GradedLinearMap m = GradedLinearMap::zero(src, dst, 0);
  for (auto& [n, es] : si.entries) {
    Matrix& blk = m.blocks[n];
    for (size_t col = 0; col < es.size(); ++col) {
      int i = es[col].vdeg, a = es[col].vidx, b = es[col].widx;
      int j = n - i;
      int row = di.index_of(n, j, b, a);
      blk.at(row, int(col)) = ((i % 2 != 0) && (j % 2 != 0)) ? f.from_long(-1) : f.one();
    }
  }
  return m;
}

GradedLinearMap tensor_assoc(const GradedVectorSpace& u, const GradedVectorSpace& v,
                             const GradedVectorSpace& w) {
  GradedVectorSpace uv = graded_tensor(u, v);
  GradedVectorSpace vw = graded_tensor(v, w);
  GradedVectorSpace src = graded_tensor(uv, w);
  GradedVectorSpace dst = graded_tensor(u, vw);
  TensorIndex uv_i(u, v), src_i(uv, w), vw_i(v, w), dst_i(u, vw);
  GradedLinearMap m = GradedLinearMap::zero(src, dst, 0);
  for (auto& [n, es] : src_i.entries) {
    Matrix& blk = m.blocks[n];
    for (size_t col = 0; col < es.size(); ++col) {
      int uvdeg = es[col].vdeg;          // degree within u⊗v
      int uvidx = es[col].vidx;          // index within (u⊗v)_{uvdeg}
      int widx = es[col].widx;           // index within w_{n-uvdeg}
      const auto& uves = uv_i.entries.at(uvdeg);
      int udeg = uves[uvidx].vdeg, uidx = uves[uvidx].vidx, vidx = uves[uvidx].widx;
      int vdeg = uvdeg - udeg;
      int wdeg = n - uvdeg;
      int vwpos = vw_i.index_of(vdeg + wdeg, vdeg, vidx, widx);
      int row = dst_i.index_of(n, udeg, uidx, vwpos);
      blk.at(row, int(col)) = 1;
    }
  }
  return m;
}

GradedLinearMap tensor_unit_left(const GradedVectorSpace& v) {
  GradedVectorSpace s = GradedVectorSpace::unit(v.field);
  GradedVectorSpace src = graded_tensor(s, v);
  GradedLinearMap m = GradedLinearMap::zero(src, v, 0);
  for (auto& [n, blkdim] : src.dims) m.blocks[n] = Matrix::identity(blkdim, v.field);
  return m;
}

GradedLinearMap tensor_unit_right(const GradedVectorSpace& v) {
  GradedVectorSpace s = GradedVectorSpace::unit(v.field);
  GradedVectorSpace src = graded_tensor(v, s);
  GradedLinearMap m = GradedLinearMap::zero(src, v, 0);
  for (auto& [n, blkdim] : src.dims) m.blocks[n] = Matrix::identity(blkdim, v.field);
  return m;
}

// ----- hom -----

GradedVectorSpace graded_hom(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  GradedVectorSpace h(v.field);
  for (auto& [t, n] : v.dims)
    for (auto& [s, m] : w.dims) h.dims[s - t] += n * m;
  return h;
}

HomIndex::HomIndex(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  for (auto& [t, n] : v.dims)
    for (auto& [s, m] : w.dims) {
      int d = s - t;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) entries[d].push_back({t, a, b});
    }
}

int HomIndex::index_of(int d, int t, int src, int dst) const {
  auto it = entries.find(d);
  if (it == entries.end()) throw std::out_of_range("hom degree empty");
  const auto& es = it->second;
  for (size_t k = 0; k < es.size(); ++k)
    if (es[k].t == t && es[k].src == src && es[k].dst == dst) return int(k);
  throw std::out_of_range("hom index not found");
}

GradedLinearMap hom_eval(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  GradedVectorSpace h = graded_hom(v, w);
  GradedVectorSpace src = graded_tensor(h, v);
  HomIndex hi(v, w);
  TensorIndex si(h, v);
  GradedLinearMap m = GradedLinearMap::zero(src, w, 0);
  for (auto& [n, es] : si.entries) {
    Matrix& blk = m.blocks[n];
    for (size_t col = 0; col < es.size(); ++col) {
      int d = es[col].vdeg;      // degree of the hom element
      int hidx = es[col].vidx;   // index in Hom_d
      int vidx = es[col].widx;   // index in V_{n-d}
      const auto& he = hi.entries.at(d)[hidx];
      if (he.t != n - d || he.src != vidx) continue;
      blk.at(he.dst, int(col)) = 1;  // lands in W_n = W_{he.t + d}
    }
  }
  return m;
}

GradedLinearMap curry(const GradedLinearMap& f, const GradedVectorSpace& u,
                      const GradedVectorSpace& v) {
  if (!(f.source == graded_tensor(u, v))) throw std::invalid_argument("curry: source mismatch");
  const GradedVectorSpace& w = f.target;
  GradedVectorSpace h = graded_hom(v, w);
  HomIndex hi(v, w);
  TensorIndex ti(u, v);
  GradedLinearMap g = GradedLinearMap::zero(u, h, f.degree);
  for (auto& [udeg, un] : u.dims) {
    Matrix& blk = g.blocks[udeg];
    int hdeg = udeg + f.degree;
    auto hit = hi.entries.find(hdeg);
    if (hit == hi.entries.end()) continue;
    const auto& hes = hit->second;
    for (int a = 0; a < un; ++a)
      for (size_t row = 0; row < hes.size(); ++row) {
        int t = hes[row].t, c = hes[row].src, b = hes[row].dst;
        // coefficient of w_b in f(u_a ⊗ v_c), v_c in degree t
        int n = udeg + t;
        auto fit = f.blocks.find(n);
        if (fit == f.blocks.end()) continue;
        if (f.target.dim(n + f.degree) == 0) continue;
        int colix = ti.index_of(n, udeg, a, c);
        blk.at(int(row), a) = fit->second.at(b, colix);
      }
  }
  return g;
}

GradedLinearMap uncurry_to(const GradedLinearMap& g, const GradedVectorSpace& v,
                           const GradedVectorSpace& w) {
  const GradedVectorSpace& u = g.source;
  if (!(g.target == graded_hom(v, w))) throw std::invalid_argument("uncurry: target mismatch");
  GradedVectorSpace src = graded_tensor(u, v);
  HomIndex hi(v, w);
  TensorIndex ti(u, v);
  GradedLinearMap f = GradedLinearMap::zero(src, w, g.degree);
  for (auto& [n, es] : ti.entries) {
    Matrix& blk = f.blocks[n];
    if (w.dim(n + g.degree) == 0) continue;
    for (size_t col = 0; col < es.size(); ++col) {
      int udeg = es[col].vdeg, a = es[col].vidx, c = es[col].widx;
      int t = n - udeg;
      auto git = g.blocks.find(udeg);
      if (git == g.blocks.end()) continue;
      int hdeg = udeg + g.degree;
      auto hit = hi.entries.find(hdeg);
      if (hit == hi.entries.end()) continue;
      const auto& hes = hit->second;
      for (size_t r = 0; r < hes.size(); ++r) {
        if (hes[r].t != t || hes[r].src != c) continue;
        const Scalar& val = git->second.at(int(r), a);
        if (!(val == 0)) blk.at(hes[r].dst, int(col)) = val;
      }
    }
  }
  return f;
}

GradedLinearMap hom_post(const GradedVectorSpace& v, const GradedLinearMap& q) {
  const GradedVectorSpace& w = q.source;
  const GradedVectorSpace& w2 = q.target;
  GradedVectorSpace h = graded_hom(v, w), h2 = graded_hom(v, w2);
  HomIndex hi(v, w), hi2(v, w2);
  GradedLinearMap m = GradedLinearMap::zero(h, h2, q.degree);
  for (auto& [d, es] : hi.entries) {
    Matrix& blk = m.blocks[d];
    auto dit = hi2.entries.find(d + q.degree);
    if (dit == hi2.entries.end()) continue;
    const auto& des = dit->second;
    for (size_t col = 0; col < es.size(); ++col) {
      int t = es[col].t, a = es[col].src, b = es[col].dst;
      auto qit = q.blocks.find(t + d);
      if (qit == q.blocks.end()) continue;
      for (size_t row = 0; row < des.size(); ++row) {
        if (des[row].t != t || des[row].src != a) continue;
        const Scalar& val = qit->second.at(des[row].dst, b);
        if (!(val == 0)) blk.at(int(row), int(col)) = val;
      }
    }
  }
  return m;
}

GradedLinearMap hom_pre(const GradedLinearMap& p, const GradedVectorSpace& w) {
  const GradedVectorSpace& v2 = p.source;  // p: V' → V
  const GradedVectorSpace& v = p.target;
  const Field& f = v.field;
  GradedVectorSpace h = graded_hom(v, w), h2 = graded_hom(v2, w);
  HomIndex hi(v, w), hi2(v2, w);
  GradedLinearMap m = GradedLinearMap::zero(h, h2, p.degree);
  for (auto& [d, es] : hi.entries) {
    Matrix& blk = m.blocks[d];
    auto dit = hi2.entries.find(d + p.degree);
    if (dit == hi2.entries.end()) continue;
    const auto& des = dit->second;
    bool negate = (p.degree % 2 != 0) && (d % 2 != 0);
    for (size_t col = 0; col < es.size(); ++col) {
      int t = es[col].t, a = es[col].src, b = es[col].dst;
      for (size_t row = 0; row < des.size(); ++row) {
        // φ∘p maps V'_{t-p.degree} → W_{t+d}
        if (des[row].t != t - p.degree || des[row].dst != b) continue;
        auto pit = p.blocks.find(t - p.degree);
        if (pit == p.blocks.end()) continue;
        Scalar val = pit->second.at(a, des[row].src);
        if (negate) val = f.neg(val);
        if (!(val == 0)) blk.at(int(row), int(col)) = val;
      }
    }
  }
  return m;
}

GradedVectorSpace graded_dual(const GradedVectorSpace& v) {
  return graded_hom(v, GradedVectorSpace::unit(v.field));
}

GradedLinearMap dual_eval(const GradedVectorSpace& v) {
  return hom_eval(v, GradedVectorSpace::unit(v.field));
}

GradedLinearMap dual_coeval(const GradedVectorSpace& v) {
  GradedVectorSpace s = GradedVectorSpace::unit(v.field);
  GradedVectorSpace dv = graded_dual(v);
  GradedVectorSpace dst = graded_tensor(v, dv);
  HomIndex hi(v, s);
  TensorIndex ti(v, dv);
  GradedLinearMap m = GradedLinearMap::zero(s, dst, 0);
  Matrix& blk = m.blocks[0];
  for (auto& [t, n] : v.dims)
    for (int a = 0; a < n; ++a) {
      int dualpos = hi.index_of(-t, t, a, 0);
      int row = ti.index_of(0, t, a, dualpos);
      blk.at(row, 0) = 1;
    }
  return m;
}

GradedLinearMap basis_vector(const GradedVectorSpace& v, int deg, int idx) {
  GradedVectorSpace s = GradedVectorSpace::unit(v.field);
  GradedLinearMap m = GradedLinearMap::zero(s, v, deg);
  m.blocks[0].at(idx, 0) = 1;
  return m;
}

GradedLinearMap factor_through_surjection(const GradedLinearMap& p, const GradedLinearMap& r) {
  if (!(p.source == r.source) || p.degree != 0)
    throw std::invalid_argument("factor_through_surjection: bad shapes");
  GradedLinearMap m = GradedLinearMap::zero(p.target, r.target, r.degree);
  for (auto& [t, n] : p.target.dims) {
    Matrix pt = p.source.dim(t) > 0 ? p.block(t) : Matrix(n, 0, p.source.field);
    Matrix rt = p.source.dim(t) > 0 ? r.block(t)
                                    : Matrix(r.target.dim(t + r.degree), 0, p.source.field);
    if (r.target.dim(t + r.degree) == 0) continue;
    auto x = pt.solve_left(rt);
    if (!x) throw std::domain_error("factor_through_surjection: map does not descend");
    m.blocks[t] = *x;
  }
  // Degrees of A outside supp(B): R must vanish there.
  for (auto& [t, blk] : r.blocks)
    if (p.target.dim(t) == 0 && !blk.is_zero())
      throw std::domain_error("factor_through_surjection: map does not descend");
  return m;
}

GradedLinearMap factor_through_injection(const GradedLinearMap& k, const GradedLinearMap& r) {
  if (!(k.target == r.target) || k.degree != 0)
    throw std::invalid_argument("factor_through_injection: bad shapes");
  GradedLinearMap m = GradedLinearMap::zero(r.source, k.source, r.degree);
  for (auto& [t, n] : r.source.dims) {
    int mid = t + r.degree;
    if (k.source.dim(mid) == 0) {
      if (!r.block(t).is_zero())
        throw std::domain_error("factor_through_injection: map does not lift");
      continue;
    }
    auto x = k.block(mid).solve_right(r.block(t));
    if (!x) throw std::domain_error("factor_through_injection: map does not lift");
    m.blocks[t] = *x;
  }
  return m;
}

}  // namespace umbra
