#include "gsp4h/hodge_kernel.hpp"

namespace gsp4h {

namespace {

template <class F>
Quad<F> to_field(const Quad<long>& t) {
  return {F(t[0]), F(t[1]), F(t[2]), F(t[3])};
}

template <class F>
Mat4<F> unit(size_t i, size_t j) {
  Mat4<F> m(4, 4);
  m(i, j) = F(1);
  return m;
}

}  // namespace

template <class F>
EigenlineGrid<F> eigenline_grid(const F& a, const F& b, bool include_full_s4) {
  for (const auto& [name, v] : nondegeneracy_factors(a, b))
    if (v.is_zero()) throw Error(ErrorKind::DegenerateIntersection, "nondegeneracy factor " + name + " vanishes");
  Flag<F> fh = hodge_flag(a, b);
  if (include_full_s4 && !general_position(fh))
    throw Error(ErrorKind::DegenerateIntersection, "Hodge flag is not in general position");
  // F_H^1, F_H^2, F_H^3, F_H^4 = E^4
  std::array<Subspace<F>, 4> fil{fh.members[0], fh.members[1], fh.members[2], Subspace<F>::whole(4)};
  EigenlineGrid<F> g{a, b, include_full_s4, {}};
  const std::vector<WeylElem> ws = include_full_s4 ? WeylElem::all_s4() : WeylElem::all();
  for (const auto& w : ws) {
    WeylElem wi = w.inverse();
    std::array<Vec<F>, 4> ls;
    std::vector<size_t> idx;
    for (int i = 1; i <= 4; ++i) {
      idx.push_back(static_cast<size_t>(wi(i) - 1));
      Subspace<F> l = Subspace<F>::coordinate(idx, 4).intersect(fil[4 - i]);
      if (l.dim() != 1)
        throw Error(ErrorKind::DegenerateIntersection,
                    "L_{" + w.one_line_string() + "," + std::to_string(i) + "} has dimension " + std::to_string(l.dim()));
      ls[i - 1] = l.basis().row(0);
    }
    g.lines.emplace(w, ls);
  }
  return g;
}

template <class F>
Mat4<F> nu_operator(const EigenlineGrid<F>& grid, const WeylElem& w, const Quad<F>& t) {
  auto it = grid.lines.find(w);
  if (it == grid.lines.end()) throw Error(ErrorKind::InvalidData, "no eigenlines for " + w.one_line_string());
  if (w.in_W() && !satisfies_torus_constraint(t))
    throw Error(ErrorKind::ConstraintViolated, "torus element violates t1+t4 = t2+t3");
  Mat4<F> p(4, 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t r = 0; r < 4; ++r) p(r, i) = it->second[i][r];
  return p * Mat4<F>::diagonal({t[0], t[1], t[2], t[3]}) * p.inverse();
}

template <class F>
Mat4<F> conjugation_nu(const EigenlineGrid<F>& grid, const WeylElem& w, const Quad<F>& t) {
  WeylElem wi = w.inverse();
  auto it = grid.lines.find(wi);
  if (it == grid.lines.end()) throw Error(ErrorKind::InvalidData, "no eigenlines for " + wi.one_line_string());
  Mat4<F> n(4, 4);
  for (int k = 1; k <= 4; ++k) {
    const Vec<F>& l = it->second[k - 1];
    const size_t c = static_cast<size_t>(w(k) - 1);
    F inv = F(1) / l[c];
    for (size_t r = 0; r < 4; ++r) n(r, c) = l[r] * inv;
  }
  // w t w^-1 = diag(t_{w^-1(1)}, ..., t_{w^-1(4)})
  Quad<F> wt = weyl_act(w, t);
  return n * Mat4<F>::diagonal({wt[0], wt[1], wt[2], wt[3]}) * n.inverse();
}

const std::array<const char*, kGspDim>& gsp4_basis_names() {
  static const std::array<const char*, kGspDim> names{"H1",   "H2",  "Z",    "X_a",  "X_b",   "X_ab",
                                                      "X_2ab", "Y_a", "Y_b", "Y_ab", "Y_2ab"};
  return names;
}

template <class F>
std::vector<Mat4<F>> gsp4_basis() {
  auto e = [](size_t i, size_t j) { return unit<F>(i - 1, j - 1); };
  return {Mat4<F>::diagonal({F(1), F(0), F(0), F(-1)}),
          Mat4<F>::diagonal({F(0), F(1), F(-1), F(0)}),
          Mat4<F>::identity(4),
          e(1, 2) - e(3, 4),
          e(2, 3),
          e(1, 3) + e(2, 4),
          e(1, 4),
          e(2, 1) - e(4, 3),
          e(3, 2),
          e(3, 1) + e(4, 2),
          e(4, 1)};
}

template <class F>
Vec<F> gsp4_coords(const Mat4<F>& a) {
  const F half = F(1) / F(2);
  F c = a(0, 0) + a(3, 3);
  Vec<F> x{a(0, 0) - c * half, a(1, 1) - c * half, c * half, a(0, 1), a(1, 2), a(0, 2),
           a(0, 3),            a(1, 0),            a(2, 1),  a(2, 0), a(3, 0)};
  if (!(from_gsp4_coords(x) == a)) throw Error(ErrorKind::InvalidData, "matrix is not in gsp4");
  return x;
}

template <class F>
Mat4<F> from_gsp4_coords(const Vec<F>& c) {
  static const std::vector<Mat4<F>> basis = gsp4_basis<F>();
  Mat4<F> m(4, 4);
  for (size_t k = 0; k < kGspDim; ++k)
    if (!c.at(k).is_zero()) m = m + c[k] * basis[k];
  return m;
}

template <class F>
Vec<F> torus_coords(const Quad<F>& t) {
  if (!satisfies_torus_constraint(t))
    throw Error(ErrorKind::ConstraintViolated, "torus element violates t1+t4 = t2+t3");
  F z = (t[0] + t[3]) / F(2);
  return {t[0] - z, t[1] - z, z};
}

template <class F>
Quad<F> from_torus_coords(const Vec<F>& c) {
  return {c[0] + c[2], c[1] + c[2], c[2] - c[1], c[2] - c[0]};
}

template <class F>
Vec<F> block_vector(const WeylElem& w, const Quad<F>& t) {
  Vec<F> v(kBlockDim);
  Vec<F> c = torus_coords(t);
  size_t k = w.index();
  for (size_t j = 0; j < kTorusDim; ++j) v[kTorusDim * k + j] = c[j];
  return v;
}

template <class F>
Matrix<F> jbar(const EigenlineGrid<F>& grid) {
  Matrix<F> m(kGspDim, kBlockDim);
  const auto& ws = WeylElem::all();
  for (size_t k = 0; k < ws.size(); ++k)
    for (size_t j = 0; j < kTorusDim; ++j) {
      Vec<F> e(kTorusDim);
      e[j] = F(1);
      Vec<F> col = gsp4_coords(nu_operator(grid, ws[k], from_torus_coords(e)));
      for (size_t r = 0; r < kGspDim; ++r) m(r, kTorusDim * k + j) = col[r];
    }
  return m;
}

template <class F>
Matrix<F> jbar(const F& a, const F& b) {
  return jbar(eigenline_grid(a, b));
}

template <class F>
KernelBasis<F> kernel_basis(const F& a, const F& b) {
  return {a, b, Subspace<F>::span(nullspace(jbar(a, b)), kBlockDim)};
}

template <class F>
Subspace<F> borel_of_hodge_flag(const F& a, const F& b) {
  Flag<F> fh = hodge_flag(a, b);
  const auto basis = gsp4_basis<F>();
  std::vector<Vec<F>> rows;
  for (const auto& m : fh.members) {
    auto ann = m.annihilator().vectors();
    for (const auto& v : m.vectors())
      for (const auto& n : ann) {
        Vec<F> row(kGspDim);
        for (size_t k = 0; k < kGspDim; ++k) {
          Vec<F> bv = basis[k].apply(v);
          for (size_t i = 0; i < 4; ++i) row[k] += n[i] * bv[i];
        }
        rows.push_back(std::move(row));
      }
  }
  return Subspace<F>::span(nullspace(Matrix<F>::from_rows(rows, kGspDim)), kGspDim);
}

namespace {

const std::array<Quad<long>, 2> kZP{{{1, 1, 0, 0}, {0, 0, 1, 1}}};
const std::array<Quad<long>, 2> kZQ{{{1, 0, 0, -1}, {0, 1, 1, 2}}};

}  // namespace

std::vector<GlueGenerator> glue_generator_list() {
  std::vector<GlueGenerator> out;
  for (const char* x : {"P", "Q"}) {
    const WeylElem sd = std::string(x) == "P" ? WeylElem::s1() : WeylElem::s2();
    for (const auto& w : WeylElem::all()) {
      WeylElem partner = sd * w;
      if (partner < w) continue;
      for (int z = 0; z < 2; ++z) out.push_back({x, w, partner, z});
    }
  }
  return out;
}

template <class F>
std::vector<Vec<F>> glue_generators() {
  std::vector<Vec<F>> out;
  for (const auto& g : glue_generator_list()) {
    const Quad<long>& z = (g.parabolic == "P" ? kZP : kZQ)[g.z];
    Vec<F> u = block_vector(g.w, to_field<F>(z));
    Vec<F> v = block_vector(g.partner, to_field<F>(z));
    for (size_t i = 0; i < kBlockDim; ++i) u[i] -= v[i];
    out.push_back(std::move(u));
  }
  return out;
}

template <class F>
Subspace<F> glue_subspace() {
  return Subspace<F>::span(glue_generators<F>(), kBlockDim);
}

const std::vector<LabeledGenerator>& fg_generators() {
  static const std::vector<LabeledGenerator> g = [] {
    const Quad<long> t1{-1, -1, 1, 1}, t2{-1, 0, 0, 1};
    const WeylElem e, s1 = WeylElem::s1(), s2 = WeylElem::s2(), s0 = WeylElem::s0();
    return std::vector<LabeledGenerator>{{"f1", e, t1},       {"f2", s2, t1}, {"f3", s0, t1},
                                         {"f4", s2 * s1, t1}, {"g1", e, t2},  {"g2", s1, t2},
                                         {"g3", s1 * s2, t2}, {"g4", s0, t2}};
  }();
  return g;
}

template <class F>
std::vector<Vec<F>> fg_vectors() {
  std::vector<Vec<F>> out;
  for (const auto& g : fg_generators()) out.push_back(block_vector(g.w, to_field<F>(g.t)));
  return out;
}

namespace {

// Coefficient vectors c with sum c_k s_k in the kernel.
template <class F>
std::vector<Vec<F>> kernel_combinations(const Subspace<F>& kernel, const std::vector<Vec<F>>& s) {
  auto ann = kernel.annihilator().vectors();
  if (ann.empty()) {
    std::vector<Vec<F>> all;
    for (size_t k = 0; k < s.size(); ++k) {
      Vec<F> e(s.size());
      e[k] = F(1);
      all.push_back(e);
    }
    return all;
  }
  Matrix<F> m(ann.size(), s.size());
  for (size_t r = 0; r < ann.size(); ++r)
    for (size_t k = 0; k < s.size(); ++k)
      for (size_t i = 0; i < kBlockDim; ++i)
        if (!ann[r][i].is_zero() && !s[k][i].is_zero()) m(r, k) += ann[r][i] * s[k][i];
  return nullspace(m);
}

// The line spanned by the projection onto coordinates (i, j).
template <class F>
std::pair<F, F> projected_line(const std::vector<Vec<F>>& cs, size_t i, size_t j, const char* what) {
  std::vector<Vec<F>> proj;
  for (const auto& c : cs) proj.push_back({c[i], c[j]});
  Subspace<F> line = Subspace<F>::span(proj, 2);
  if (line.dim() != 1)
    throw Error(ErrorKind::NotALine, std::string("projection onto ") + what + " has dimension " + std::to_string(line.dim()));
  Vec<F> v = line.basis().row(0);
  return {v[0], v[1]};
}

}  // namespace

template <class F>
std::pair<F, F> recover_parameters(const Subspace<F>& kernel) {
  if (kernel.ambient() != kBlockDim) throw Error(ErrorKind::InvalidData, "kernel must live in the 24-dimensional block space");
  const auto fg = fg_vectors<F>();
  // f1..f4, g1, g2, g3 and f1..f4, g1, g2, g4
  std::vector<Vec<F>> s3(fg.begin(), fg.begin() + 7);
  std::vector<Vec<F>> s4(fg.begin(), fg.begin() + 6);
  s4.push_back(fg[7]);
  // <(b+1) g2 - g3>
  auto [x, y] = projected_line(kernel_combinations(kernel, s3), 5, 6, "<g2,g3>");
  if (y.is_zero()) throw Error(ErrorKind::NotALine, "projection onto <g2,g3> is the g2 axis");
  F b = -x / y - F(1);
  // <b g2 + a g4>
  auto [u, v] = projected_line(kernel_combinations(kernel, s4), 5, 6, "<g2,g4>");
  if (u.is_zero()) throw Error(ErrorKind::NotALine, "projection onto <g2,g4> is the g4 axis");
  F a = b * v / u;
  return {a, b};
}

template <class F>
std::vector<std::pair<std::string, Mat4<F>>> generator_matrices(const F& a, const F& b) {
  EigenlineGrid<F> grid = eigenline_grid(a, b);
  auto v = standard_basis_vectors(a, b);
  Mat4<F> bm(4, 4);
  for (size_t c = 0; c < 4; ++c)
    for (size_t r = 0; r < 4; ++r) bm(r, c) = v[c][r];
  Mat4<F> binv = bm.inverse();
  std::vector<std::pair<std::string, Mat4<F>>> out;
  for (const auto& g : fg_generators()) out.emplace_back(g.label, binv * nu_operator(grid, g.w, to_field<F>(g.t)) * bm);
  return out;
}

template <class F>
LInvariantPlane<F> l_invariant_plane(const F& a, const F& b) {
  KernelBasis<F> k = kernel_basis(a, b);
  Subspace<F> glue = glue_subspace<F>();
  if (!k.space.contains(glue)) throw Error(ErrorKind::DegenerateIntersection, "gluing subspace is not inside the kernel");
  LInvariantPlane<F> r;
  r.plane = Subspace<F>::span(kernel_combinations(k.space, fg_vectors<F>()), 8);
  r.kernel_dim = k.space.dim();
  r.glue_dim = glue.dim();
  r.quotient_dim = r.kernel_dim - r.glue_dim;
  auto [ra, rb] = recover_parameters(k.space);
  r.a = ra;
  r.b = rb;
  return r;
}

#define GSP4H_INSTANTIATE(F)                                                                       \
  template EigenlineGrid<F> eigenline_grid<F>(const F&, const F&, bool);                          \
  template Mat4<F> nu_operator<F>(const EigenlineGrid<F>&, const WeylElem&, const Quad<F>&);      \
  template Mat4<F> conjugation_nu<F>(const EigenlineGrid<F>&, const WeylElem&, const Quad<F>&);   \
  template std::vector<Mat4<F>> gsp4_basis<F>();                                                  \
  template Vec<F> gsp4_coords<F>(const Mat4<F>&);                                                 \
  template Mat4<F> from_gsp4_coords<F>(const Vec<F>&);                                            \
  template Vec<F> torus_coords<F>(const Quad<F>&);                                                \
  template Quad<F> from_torus_coords<F>(const Vec<F>&);                                           \
  template Vec<F> block_vector<F>(const WeylElem&, const Quad<F>&);                               \
  template Matrix<F> jbar<F>(const EigenlineGrid<F>&);                                            \
  template Matrix<F> jbar<F>(const F&, const F&);                                                 \
  template KernelBasis<F> kernel_basis<F>(const F&, const F&);                                    \
  template Subspace<F> borel_of_hodge_flag<F>(const F&, const F&);                                \
  template std::vector<Vec<F>> glue_generators<F>();                                              \
  template Subspace<F> glue_subspace<F>();                                                        \
  template std::vector<Vec<F>> fg_vectors<F>();                                                   \
  template std::pair<F, F> recover_parameters<F>(const Subspace<F>&);                             \
  template std::vector<std::pair<std::string, Mat4<F>>> generator_matrices<F>(const F&, const F&); \
  template LInvariantPlane<F> l_invariant_plane<F>(const F&, const F&);

GSP4H_INSTANTIATE(Rational)
GSP4H_INSTANTIATE(RatFunc)

#undef GSP4H_INSTANTIATE

}  // namespace gsp4h
