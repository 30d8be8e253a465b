#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsp4h/phi_module.hpp"
#include "gsp4h/weyl.hpp"

namespace gsp4h {

// Lines L_{w,i} = F_w^i \cap F_H^{5-i} with F_w^i = <e_{w^-1(1)}, ..., e_{w^-1(i)}>.
template <class F>
struct EigenlineGrid {
  F a{}, b{};
  bool full_s4 = false;
  std::map<WeylElem, std::array<Vec<F>, 4>> lines;
};

template <class F>
EigenlineGrid<F> eigenline_grid(const F& a, const F& b, bool include_full_s4 = false);

// Operator acting as t_i on L_{w,i}.
template <class F>
Mat4<F> nu_operator(const EigenlineGrid<F>& grid, const WeylElem& w, const Quad<F>& t);

// n (w t w^-1) n^-1 with n the unipotent matrix whose column w(k) spans
// L_{w^-1,k}; agrees with nu_operator(grid, w^-1, t).
template <class F>
Mat4<F> conjugation_nu(const EigenlineGrid<F>& grid, const WeylElem& w, const Quad<F>& t);

// Fixed basis of gsp4: H1, H2, Z, then root vectors for a, b, ab, 2ab and their negatives.
constexpr size_t kGspDim = 11;
constexpr size_t kTorusDim = 3;
constexpr size_t kBlockDim = 24;
const std::array<const char*, kGspDim>& gsp4_basis_names();

template <class F>
std::vector<Mat4<F>> gsp4_basis();

// Coordinates in gsp4_basis(); throws InvalidData when A is not in gsp4.
template <class F>
Vec<F> gsp4_coords(const Mat4<F>& a);
template <class F>
Mat4<F> from_gsp4_coords(const Vec<F>& c);

// Torus basis H1 = diag(1,0,0,-1), H2 = diag(0,1,-1,0), Z = I.
template <class F>
Vec<F> torus_coords(const Quad<F>& t);
template <class F>
Quad<F> from_torus_coords(const Vec<F>& c);

// (t)_w in the 24-dimensional block space, blocks ordered as WeylElem::all().
template <class F>
Vec<F> block_vector(const WeylElem& w, const Quad<F>& t);

// Matrix of jbar: E^24 -> gsp4 coordinates.
template <class F>
Matrix<F> jbar(const EigenlineGrid<F>& grid);
template <class F>
Matrix<F> jbar(const F& a, const F& b);

template <class F>
struct KernelBasis {
  F a{}, b{};
  Subspace<F> space{kBlockDim};
};

template <class F>
KernelBasis<F> kernel_basis(const F& a, const F& b);

// Borel subalgebra of gsp4 stabilizing the Hodge flag, as a subspace of coordinates.
template <class F>
Subspace<F> borel_of_hodge_flag(const F& a, const F& b);

struct GlueGenerator {
  std::string parabolic;  // "P" or "Q"
  WeylElem w, partner;
  int z = 0;  // index into the Levi-centre basis
};

// (z)_w - (z)_{s_delta w} for X in {P, Q}, deduplicated over unordered pairs.
std::vector<GlueGenerator> glue_generator_list();
template <class F>
std::vector<Vec<F>> glue_generators();
template <class F>
Subspace<F> glue_subspace();

// f1..f4, g1..g4
struct LabeledGenerator {
  std::string label;
  WeylElem w;
  Quad<long> t;
};
const std::vector<LabeledGenerator>& fg_generators();
template <class F>
std::vector<Vec<F>> fg_vectors();

template <class F>
std::pair<F, F> recover_parameters(const Subspace<F>& kernel);

// [nu]_B for the eight generators in the basis (v1, v2, v3, v4).
template <class F>
std::vector<std::pair<std::string, Mat4<F>>> generator_matrices(const F& a, const F& b);

template <class F>
struct LInvariantPlane {
  // ker jbar \cap span(f1..g4), in f/g coordinates.
  Subspace<F> plane{8};
  size_t kernel_dim = 0;
  size_t glue_dim = 0;
  size_t quotient_dim = 0;
  F a{}, b{};
};

template <class F>
LInvariantPlane<F> l_invariant_plane(const F& a, const F& b);

}  // namespace gsp4h
