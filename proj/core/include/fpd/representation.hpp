#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpd/error.hpp"
#include "fpd/matrix.hpp"
#include "fpd/quiver.hpp"

namespace fpd {

/// A finite-dimensional module over kQ/(>=2), given as a quiver
/// representation: one vector space dimension per vertex and one matrix per
/// arrow of the ambient spec (shape dims[target] x dims[source]).
template <Field F>
struct BasicRepresentation {
  std::vector<std::size_t> dims;  // entry v-1 is the dimension at vertex v
  std::vector<Matrix<F>> maps;    // indexed like spec.arrow()
  std::string name;

  std::size_t dim(Vertex v) const { return dims.at(v - 1); }
  std::size_t total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
  }

  /// Structural equality; the display name is ignored.
  friend bool operator==(const BasicRepresentation& a, const BasicRepresentation& b) {
    return a.dims == b.dims && a.maps == b.maps;
  }
};

using Representation = BasicRepresentation<Rational>;

/// Basis of the morphisms M -> N: one matrix per vertex.
template <Field F>
using Morphism = std::vector<Matrix<F>>;

template <Field F>
struct Syzygy {
  /// Projective cover as (vertex, multiplicity) for every vertex with m > 0.
  std::vector<std::pair<Vertex, std::size_t>> cover;
  /// Kernel of P0 -> M, with an explicit (unreduced) basis inside P0.
  BasicRepresentation<F> omega;
};

// ---------------------------------------------------------------------------
// Shape checks and the standard modules
// ---------------------------------------------------------------------------

template <Field F>
void check_shape(const BoundAlgebraSpec& spec, const BasicRepresentation<F>& m) {
  if (m.dims.size() != spec.vertex_count() || m.maps.size() != spec.arrow_count())
    throw ValidationError("representation does not match the algebra");
  for (std::size_t k = 0; k < spec.arrow_count(); ++k) {
    const auto& a = spec.arrow(k);
    if (m.maps[k].rows() != m.dim(a.target) || m.maps[k].cols() != m.dim(a.source))
      throw ValidationError("map for arrow " + a.id + " has the wrong shape");
  }
}

inline void check_vertex(const BoundAlgebraSpec& spec, Vertex i) {
  if (i < 1 || i > spec.vertex_count())
    throw ValidationError("invalid vertex " + std::to_string(i));
}

template <Field F>
BasicRepresentation<F> zero_maps_rep(const BoundAlgebraSpec& spec,
                                     std::vector<std::size_t> dims,
                                     std::string name = {}) {
  BasicRepresentation<F> m{std::move(dims), {}, std::move(name)};
  m.maps.reserve(spec.arrow_count());
  for (const auto& a : spec.quiver().arrows())
    m.maps.emplace_back(m.dim(a.target), m.dim(a.source));
  return m;
}

template <Field F>
BasicRepresentation<F> simple_rep(const BoundAlgebraSpec& spec, Vertex i) {
  check_vertex(spec, i);
  std::vector<std::size_t> dims(spec.vertex_count(), 0);
  dims[i - 1] = 1;
  return zero_maps_rep<F>(spec, std::move(dims), "S" + std::to_string(i));
}

namespace detail {

// Basis of P_i = Ae_i: e_i (coordinate 0 at vertex i), then one coordinate per
// arrow leaving i, placed at the arrow's target. Loops at i take coordinates
// 1, 2, ... at i; the arrows i -> t take 0, 1, ... at t.
inline std::vector<std::size_t> projective_coordinates(const BoundAlgebraSpec& spec,
                                                       Vertex i,
                                                       std::vector<std::size_t>& dims) {
  dims.assign(spec.vertex_count(), 0);
  dims[i - 1] = 1;
  std::vector<std::size_t> coord(spec.arrow_count(), 0);
  for (std::size_t k = 0; k < spec.arrow_count(); ++k) {
    const auto& a = spec.arrow(k);
    if (a.source != i) continue;
    coord[k] = dims[a.target - 1]++;
  }
  return coord;
}

// Dual picture for I_i = D(e_i A): the socle coordinate 0 at i, then one
// coordinate per arrow entering i, placed at the arrow's source.
inline std::vector<std::size_t> injective_coordinates(const BoundAlgebraSpec& spec,
                                                      Vertex i,
                                                      std::vector<std::size_t>& dims) {
  dims.assign(spec.vertex_count(), 0);
  dims[i - 1] = 1;
  std::vector<std::size_t> coord(spec.arrow_count(), 0);
  for (std::size_t k = 0; k < spec.arrow_count(); ++k) {
    const auto& a = spec.arrow(k);
    if (a.target != i) continue;
    coord[k] = dims[a.source - 1]++;
  }
  return coord;
}

}  // namespace detail

template <Field F>
BasicRepresentation<F> projective_rep(const BoundAlgebraSpec& spec, Vertex i) {
  check_vertex(spec, i);
  std::vector<std::size_t> dims;
  const auto coord = detail::projective_coordinates(spec, i, dims);
  auto p = zero_maps_rep<F>(spec, std::move(dims), "P" + std::to_string(i));
  for (std::size_t k = 0; k < spec.arrow_count(); ++k)
    if (spec.arrow(k).source == i) p.maps[k](coord[k], 0) = F(1);
  return p;
}

template <Field F>
BasicRepresentation<F> injective_rep(const BoundAlgebraSpec& spec, Vertex i) {
  check_vertex(spec, i);
  std::vector<std::size_t> dims;
  const auto coord = detail::injective_coordinates(spec, i, dims);
  auto q = zero_maps_rep<F>(spec, std::move(dims), "I" + std::to_string(i));
  for (std::size_t k = 0; k < spec.arrow_count(); ++k)
    if (spec.arrow(k).target == i) q.maps[k](0, coord[k]) = F(1);
  return q;
}

/// Block-diagonal direct sum.
template <Field F>
BasicRepresentation<F> direct_sum(const BoundAlgebraSpec& spec,
                                  const std::vector<BasicRepresentation<F>>& parts) {
  std::vector<std::size_t> dims(spec.vertex_count(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dims[v];
  auto sum = zero_maps_rep<F>(spec, dims);
  std::vector<std::size_t> offset(spec.vertex_count(), 0);
  for (const auto& p : parts) {
    for (std::size_t k = 0; k < spec.arrow_count(); ++k) {
      const auto& a = spec.arrow(k);
      const std::size_t ro = offset[a.target - 1];
      const std::size_t co = offset[a.source - 1];
      for (std::size_t r = 0; r < p.maps[k].rows(); ++r)
        for (std::size_t c = 0; c < p.maps[k].cols(); ++c)
          sum.maps[k](ro + r, co + c) = p.maps[k](r, c);
    }
    for (std::size_t v = 0; v < dims.size(); ++v) offset[v] += p.dims[v];
  }
  return sum;
}

/// True iff every length-2 path beta.alpha acts as zero.
template <Field F>
bool annihilated_by_relations(const BoundAlgebraSpec& spec,
                              const BasicRepresentation<F>& m) {
  check_shape(spec, m);
  for (std::size_t a = 0; a < spec.arrow_count(); ++a)
    for (std::size_t b = 0; b < spec.arrow_count(); ++b) {
      if (spec.arrow(a).target != spec.arrow(b).source) continue;
      if (!(m.maps[b] * m.maps[a]).is_zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Hom
// ---------------------------------------------------------------------------

/// Linear system whose null space is Hom(M, N). Unknown phi_v (dims N_v x M_v,
/// row-major) sits at a per-vertex offset; each arrow a: s -> t contributes
/// the equations phi_t M_a - N_a phi_s = 0.
template <Field F>
Matrix<F> intertwiner_system(const BoundAlgebraSpec& spec,
                             const BasicRepresentation<F>& m,
                             const BasicRepresentation<F>& n) {
  check_shape(spec, m);
  check_shape(spec, n);
  const std::size_t vc = spec.vertex_count();
  std::vector<std::size_t> offset(vc + 1, 0);
  for (std::size_t v = 0; v < vc; ++v)
    offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];

  std::size_t equations = 0;
  for (const auto& a : spec.quiver().arrows())
    equations += n.dim(a.target) * m.dim(a.source);

  Matrix<F> sys(equations, offset[vc]);
  std::size_t row = 0;
  for (std::size_t k = 0; k < spec.arrow_count(); ++k) {
    const auto& a = spec.arrow(k);
    const std::size_t s = a.source - 1, t = a.target - 1;
    const auto& ma = m.maps[k];
    const auto& na = n.maps[k];
    for (std::size_t r = 0; r < n.dims[t]; ++r)
      for (std::size_t c = 0; c < m.dims[s]; ++c, ++row) {
        for (std::size_t j = 0; j < m.dims[t]; ++j)
          if (!(ma(j, c) == F(0)))
            sys(row, offset[t] + r * m.dims[t] + j) += ma(j, c);
        for (std::size_t j = 0; j < n.dims[s]; ++j)
          if (!(na(r, j) == F(0)))
            sys(row, offset[s] + j * m.dims[s] + c) -= na(r, j);
      }
  }
  return sys;
}

template <Field F>
std::size_t hom_dim(const BoundAlgebraSpec& spec, const BasicRepresentation<F>& m,
                    const BasicRepresentation<F>& n) {
  const auto sys = intertwiner_system(spec, m, n);
  return sys.cols() - rank(sys);
}

template <Field F>
std::vector<Morphism<F>> hom_basis(const BoundAlgebraSpec& spec,
                                   const BasicRepresentation<F>& m,
                                   const BasicRepresentation<F>& n) {
  const auto kernel = kernel_basis(intertwiner_system(spec, m, n));
  std::vector<Morphism<F>> basis;
  for (std::size_t b = 0; b < kernel.cols(); ++b) {
    Morphism<F> phi;
    std::size_t off = 0;
    for (std::size_t v = 0; v < spec.vertex_count(); ++v) {
      Matrix<F> block(n.dims[v], m.dims[v]);
      for (std::size_t r = 0; r < n.dims[v]; ++r)
        for (std::size_t c = 0; c < m.dims[v]; ++c) block(r, c) = kernel(off++, b);
      phi.push_back(std::move(block));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

template <Field F>
bool is_brick(const BoundAlgebraSpec& spec, const BasicRepresentation<F>& m) {
  return hom_dim(spec, m, m) == 1;
}

// ---------------------------------------------------------------------------
// Tops, covers, syzygies, Ext^1
// ---------------------------------------------------------------------------

/// Standard basis indices at v whose span complements rad(M)_v, the sum of
/// the images of all arrows into v (valid because rad^2 = 0).
template <Field F>
std::vector<std::size_t> top_coordinates(const BoundAlgebraSpec& spec,
                                         const BasicRepresentation<F>& m, Vertex v) {
  const std::size_t d = m.dim(v);
  Matrix<F> span(d, 0);
  for (std::size_t k = 0; k < spec.arrow_count(); ++k)
    if (spec.arrow(k).target == v) span = span.hconcat(m.maps[k]);
  std::size_t current = rank(span);
  std::vector<std::size_t> top;
  for (std::size_t i = 0; i < d && current < d; ++i) {
    Matrix<F> e(d, 1);
    e(i, 0) = F(1);
    auto extended = span.hconcat(e);
    const std::size_t r = rank(extended);
    if (r > current) {
      span = std::move(extended);
      current = r;
      top.push_back(i);
    }
  }
  return top;
}

template <Field F>
Syzygy<F> syzygy(const BoundAlgebraSpec& spec, const BasicRepresentation<F>& m) {
  if (!annihilated_by_relations(spec, m))
    throw ValidationError("syzygy: module is not annihilated by paths of length 2");
  const std::size_t vc = spec.vertex_count();

  struct Summand {
    Vertex v;
    std::size_t top_index;  // standard basis vector of M_v hit by e_v
    std::vector<std::size_t> coord;
    std::vector<std::size_t> dims;
  };
  std::vector<Summand> summands;
  Syzygy<F> result;
  for (Vertex v = 1; v <= vc; ++v) {
    const auto top = top_coordinates(spec, m, v);
    if (!top.empty()) result.cover.emplace_back(v, top.size());
    for (auto t : top) {
      Summand s{v, t, {}, {}};
      s.coord = detail::projective_coordinates(spec, v, s.dims);
      summands.push_back(std::move(s));
    }
  }

  std::vector<BasicRepresentation<F>> parts;
  for (const auto& s : summands) parts.push_back(projective_rep<F>(spec, s.v));
  const auto cover = direct_sum(spec, parts);

  // The surjection P0 -> M, one matrix per vertex.
  std::vector<Matrix<F>> pi;
  for (Vertex w = 1; w <= vc; ++w) pi.emplace_back(m.dim(w), cover.dim(w));
  std::vector<std::size_t> offset(vc, 0);
  for (const auto& s : summands) {
    pi[s.v - 1](s.top_index, offset[s.v - 1]) = F(1);
    for (std::size_t k = 0; k < spec.arrow_count(); ++k) {
      const auto& a = spec.arrow(k);
      if (a.source != s.v) continue;
      const std::size_t col = offset[a.target - 1] + s.coord[k];
      for (std::size_t r = 0; r < m.dim(a.target); ++r)
        pi[a.target - 1](r, col) = m.maps[k](r, s.top_index);
    }
    for (std::size_t w = 0; w < vc; ++w) offset[w] += s.dims[w];
  }

  std::vector<Matrix<F>> kernel;
  std::vector<std::size_t> omega_dims;
  for (std::size_t w = 0; w < vc; ++w) {
    if (rank(pi[w]) != m.dims[w])
      throw std::logic_error("syzygy: projective cover is not surjective");
    kernel.push_back(kernel_basis(pi[w]));
    omega_dims.push_back(kernel.back().cols());
  }

  result.omega = zero_maps_rep<F>(spec, omega_dims, "Omega(" + m.name + ")");
  for (std::size_t k = 0; k < spec.arrow_count(); ++k) {
    const auto& a = spec.arrow(k);
    const auto image = cover.maps[k] * kernel[a.source - 1];
    auto restricted = solve(kernel[a.target - 1], image);
    if (!restricted) throw std::logic_error("syzygy: kernel is not a subrepresentation");
    result.omega.maps[k] = std::move(*restricted);
  }
  return result;
}

/// dim Ext^1(M, N) from 0 -> Omega M -> P0 -> M -> 0:
///   ext = hom(Omega M, N) - hom(P0, N) + hom(M, N),  hom(P_v, N) = dim N_v.
/// Same count with the syzygy of M and hom(M, N) already known.
template <Field F>
std::size_t ext1_dim(const BoundAlgebraSpec& spec, const Syzygy<F>& syz_m,
                     std::size_t hom_m_n, const BasicRepresentation<F>& n) {
  long long cover_hom = 0;
  for (const auto& [v, mult] : syz_m.cover)
    cover_hom += static_cast<long long>(mult * n.dim(v));
  const long long ext = static_cast<long long>(hom_dim(spec, syz_m.omega, n)) -
                        cover_hom + static_cast<long long>(hom_m_n);
  if (ext < 0) throw std::logic_error("ext1_dim: negative dimension");
  return static_cast<std::size_t>(ext);
}

template <Field F>
std::size_t ext1_dim(const BoundAlgebraSpec& spec, const BasicRepresentation<F>& m,
                     const BasicRepresentation<F>& n) {
  check_shape(spec, n);
  if (!annihilated_by_relations(spec, n))
    throw ValidationError("ext1_dim: module is not annihilated by paths of length 2");
  return ext1_dim(spec, syzygy(spec, m), hom_dim(spec, m, n), n);
}

// ---------------------------------------------------------------------------
// Transport between algebras and fields
// ---------------------------------------------------------------------------

/// The k-dual with every map transposed; a module over opposite(spec).
template <Field F>
BasicRepresentation<F> dual_transpose(const BasicRepresentation<F>& m) {
  BasicRepresentation<F> d{m.dims, {}, "D(" + m.name + ")"};
  for (const auto& map : m.maps) d.maps.push_back(map.transpose());
  return d;
}

/// Extends a module over strip_loops(spec).base to spec with zero loop maps.
template <Field F>
BasicRepresentation<F> lift_from_base(const BoundAlgebraSpec& spec,
                                      const BasicRepresentation<F>& base_rep) {
  const auto non_loop = non_loop_arrows(spec);
  if (base_rep.maps.size() != non_loop.size() ||
      base_rep.dims.size() != spec.vertex_count())
    throw ValidationError("representation does not match the loop-free base");
  auto lifted = zero_maps_rep<F>(spec, base_rep.dims, base_rep.name);
  for (std::size_t k = 0; k < non_loop.size(); ++k)
    lifted.maps[non_loop[k]] = base_rep.maps[k];
  return lifted;
}

/// Drops the loop maps.
template <Field F>
BasicRepresentation<F> restrict_to_base(const BoundAlgebraSpec& spec,
                                        const BasicRepresentation<F>& m) {
  check_shape(spec, m);
  BasicRepresentation<F> r{m.dims, {}, m.name};
  for (auto k : non_loop_arrows(spec)) r.maps.push_back(m.maps[k]);
  return r;
}

template <Field G, Field F, class Fn>
BasicRepresentation<G> change_field(const BasicRepresentation<F>& m, Fn&& fn) {
  BasicRepresentation<G> out{m.dims, {}, m.name};
  for (const auto& map : m.maps) out.maps.push_back(map.template transform<G>(fn));
  return out;
}

/// True iff the loop maps of m are all zero.
template <Field F>
bool loops_act_trivially(const BoundAlgebraSpec& spec, const BasicRepresentation<F>& m) {
  for (std::size_t k = 0; k < spec.arrow_count(); ++k)
    if (spec.arrow(k).is_loop() && !m.maps[k].is_zero()) return false;
  return true;
}

}  // namespace fpd
