#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fpd/bricks.hpp"
#include "fpd/dynkin.hpp"
#include "fpd/error.hpp"
#include "fpd/parallel.hpp"
#include "fpd/prime_field.hpp"

namespace fpd {

namespace {

using DimVector = std::vector<std::size_t>;

bool connected_support(const BoundAlgebraSpec& base, const DimVector& d) {
  std::vector<Vertex> support;
  for (Vertex v = 1; v <= d.size(); ++v)
    if (d[v - 1] > 0) support.push_back(v);
  if (support.empty()) return false;
  std::vector<bool> seen(d.size() + 1, false);
  std::vector<Vertex> stack{support[0]};
  seen[support[0]] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (const auto& a : base.quiver().arrows()) {
      Vertex w = 0;
      if (a.source == v) w = a.target;
      else if (a.target == v) w = a.source;
      if (w && d[w - 1] > 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == support.size();
}

std::vector<DimVector> dimension_vectors(const BoundAlgebraSpec& base, std::size_t max_total) {
  std::vector<DimVector> out;
  DimVector d(base.vertex_count(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t total) {
    if (v == d.size()) {
      if (connected_support(base, d)) out.push_back(d);
      return;
    }
    for (std::size_t x = 0; x <= 2 && total + x <= max_total; ++x) {
      d[v] = x;
      rec(v + 1, total + x);
    }
    d[v] = 0;
  };
  rec(0, 0);
  return out;
}

template <Field F>
bool isomorphic(const BoundAlgebraSpec& base, const BasicRepresentation<F>& a,
                const BasicRepresentation<F>& b) {
  const auto basis = hom_basis(base, a, b);
  if (basis.empty()) return false;
  if (basis.size() > 12) throw std::runtime_error("oracle: hom space too large to search");
  constexpr std::uint32_t q = F::order;
  std::vector<std::uint32_t> coeff(basis.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == q) coeff[k++] = 0;
    if (k == coeff.size()) return false;
    bool invertible = true;
    for (std::size_t v = 0; v < base.vertex_count() && invertible; ++v) {
      Matrix<F> phi(b.dims[v], a.dims[v]);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (coeff[j])
          for (std::size_t r = 0; r < phi.rows(); ++r)
            for (std::size_t c = 0; c < phi.cols(); ++c)
              phi(r, c) += F(coeff[j]) * basis[j][v](r, c);
      invertible = is_invertible(phi);
    }
    if (invertible) return true;
  }
}

// Bricks of one dimension vector, one per isomorphism class, in order of
// first appearance when matrices are enumerated lexicographically.
template <Field F>
std::vector<BasicRepresentation<F>> bricks_of_dimension(const BoundAlgebraSpec& base,
                                                        const DimVector& d) {
  constexpr std::uint32_t q = F::order;
  auto rep = zero_maps_rep<F>(base, d);
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < base.arrow_count(); ++k)
    if (rep.maps[k].rows() && rep.maps[k].cols()) active.push_back(k);

  std::vector<BasicRepresentation<F>> found;
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == active.size()) {
      if (!is_brick(base, rep)) return;
      for (const auto& r : found)
        if (isomorphic(base, r, rep)) return;
      found.push_back(rep);
      return;
    }
    const std::size_t k = active[i];
    auto& m = rep.maps[k];
    const std::size_t entries = m.rows() * m.cols();
    std::vector<std::uint32_t> digits(entries, 0);
    while (true) {
      for (std::size_t e = 0; e < entries; ++e) m(e / m.cols(), e % m.cols()) = F(digits[e]);
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        const std::size_t other = active[j];
        if (base.arrow(k).target == base.arrow(other).source &&
            !(rep.maps[other] * m).is_zero())
          ok = false;
        if (base.arrow(other).target == base.arrow(k).source &&
            !(m * rep.maps[other]).is_zero())
          ok = false;
      }
      if (ok) assign(i + 1);
      std::size_t e = entries;
      while (e > 0 && ++digits[e - 1] == q) digits[--e] = 0;
      if (e == 0) break;
    }
    m = Matrix<F>(m.rows(), m.cols());
  };
  assign(0);
  return found;
}

template <Field F>
std::vector<Brick> oracle_search(const BoundAlgebraSpec& spec, std::size_t max_total_dim) {
  const auto base = strip_loops(spec).base;
  const auto dvs = dimension_vectors(base, max_total_dim);
  std::vector<std::vector<BasicRepresentation<F>>> per_dv(dvs.size());
  parallel_for(dvs.size(), [&](std::size_t i) { per_dv[i] = bricks_of_dimension<F>(base, dvs[i]); });

  std::vector<Brick> bricks;
  for (const auto& reps : per_dv)
    for (const auto& r : reps) {
      auto lifted = lift_from_base(
          spec, change_field<Rational>(r, [](F x) { return Rational(x.value()); }));
      if (!annihilated_by_relations(spec, lifted) || !is_brick(spec, lifted))
        throw std::runtime_error("oracle: representative does not lift to a brick over Q");
      lifted.name = brick_name(spec, lifted);
      Brick b{std::move(lifted), {}, {}};
      b.dim_vector = b.rep.dims;
      b.name = b.rep.name;
      bricks.push_back(std::move(b));
    }
  sort_bricks(bricks);
  return bricks;
}

bool box_covers_all_roots(const BoundAlgebraSpec& spec, std::size_t max_total_dim) {
  for (const auto& c : classify_components(spec)) {
    switch (c.kind) {
      case ComponentKind::Other:
        return false;
      case ComponentKind::TwoCycle:
        if (max_total_dim < 2) return false;
        break;
      case ComponentKind::Dynkin:
        for (const auto& root : positive_roots(c.diagram)) {
          int total = 0;
          for (int x : root) {
            if (x > 2) return false;
            total += x;
          }
          if (static_cast<std::size_t>(total) > max_total_dim) return false;
        }
        break;
    }
  }
  return true;
}

std::vector<DimVector> sorted_dims(const std::vector<Brick>& bricks) {
  std::vector<DimVector> out;
  for (const auto& b : bricks) out.push_back(b.dim_vector);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BrickList enumerate_bricks_oracle(const BoundAlgebraSpec& spec, std::size_t max_total_dim,
                                  unsigned field_order) {
  if (max_total_dim < 1) throw ValidationError("oracle dimension bound must be at least 1");
  BrickList list;
  switch (field_order) {
    case 2: list.bricks = oracle_search<F2>(spec, max_total_dim); break;
    case 3: list.bricks = oracle_search<F3>(spec, max_total_dim); break;
    default:
      throw ValidationError("unsupported field order " + std::to_string(field_order) +
                            " (expected 2 or 3)");
  }

  list.completeness = Completeness::LowerBound;
  if (box_covers_all_roots(spec, max_total_dim)) {
    list.completeness = Completeness::Complete;
  } else {
    try {
      const auto thin = enumerate_bricks_thin(spec);
      if (thin.completeness == Completeness::Complete &&
          sorted_dims(thin.bricks) == sorted_dims(list.bricks))
        list.completeness = Completeness::Complete;
    } catch (const ValidationError&) {
    }
  }
  return list;
}

}  // namespace fpd
