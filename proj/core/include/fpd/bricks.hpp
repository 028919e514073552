#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpd/quiver.hpp"
#include "fpd/representation.hpp"

namespace fpd {

struct Brick {
  Representation rep;
  std::vector<std::size_t> dim_vector;
  std::string name;
};

enum class Completeness { Complete, LowerBound };

std::string to_string(Completeness c);

struct BrickList {
  std::vector<Brick> bricks;
  Completeness completeness = Completeness::Complete;
};

/// Square table of dimensions, entry [i][j] for the pair (X_i, X_j).
using DimMatrix = std::vector<std::vector<std::size_t>>;

/// "(tops/socle)" with vertices space-separated, e.g. "(2)", "(1/2)",
/// "(4/2 5)"; a vertex is in the socle part when some arrow maps onto it.
/// Modules with an entry above 1 are named by their dimension vector.
template <Field F>
std::string brick_name(const BoundAlgebraSpec& spec, const BasicRepresentation<F>& m) {
  bool thin = true;
  for (auto d : m.dims) thin = thin && d <= 1;
  if (!thin) {
    std::string s = "[";
    for (std::size_t v = 0; v < m.dims.size(); ++v)
      s += (v ? "," : "") + std::to_string(m.dims[v]);
    return s + "]";
  }
  std::string top, socle;
  for (Vertex v = 1; v <= spec.vertex_count(); ++v) {
    if (m.dim(v) == 0) continue;
    bool hit = false;
    for (std::size_t k = 0; k < spec.arrow_count(); ++k)
      if (spec.arrow(k).target == v && !m.maps[k].is_zero()) hit = true;
    auto& part = hit ? socle : top;
    part += (part.empty() ? "" : " ") + std::to_string(v);
  }
  return "(" + top + (socle.empty() ? "" : "/" + socle) + ")";
}

/// Orders bricks by support size, then by the ascending list of supporting
/// vertices, then by dimension vector and name.
void sort_bricks(std::vector<Brick>& bricks);

/// Thin enumeration over the loop-stripped base, lifted with zero loops.
/// Dynkin components contribute their thin positive roots that satisfy the
/// relations and are bricks; a two-vertex cycle contributes its two simples
/// and the two modules (u/v), (v/u). Any other component is a
/// ValidationError. The list is Complete when every component is a cycle,
/// of type A, or in the reference orientation up to reversal.
BrickList enumerate_bricks_thin(const BoundAlgebraSpec& spec);

/// Exhaustive search over F_q (q in {2, 3}) on the loop-stripped base:
/// connected dimension vectors with entries <= 2 and total <= max_total_dim,
/// all matrices with the relations, End of dimension 1, one representative
/// per isomorphism class, lifted to Q with zero loops. The list is Complete
/// when the box holds every positive root of every component, or when thin
/// enumeration is complete and agrees with it.
BrickList enumerate_bricks_oracle(const BoundAlgebraSpec& spec, std::size_t max_total_dim,
                                  unsigned field_order);

/// hom_dim over all ordered pairs.
DimMatrix hom_matrix(const BoundAlgebraSpec& spec, const std::vector<Brick>& bricks);
/// ext1_dim over all ordered pairs.
DimMatrix ext_matrix(const BoundAlgebraSpec& spec, const std::vector<Brick>& bricks);

struct CompatibilityGraph {
  std::size_t size = 0;
  std::vector<std::vector<bool>> adjacent;  // symmetric, false on the diagonal
};

/// Edge i - j iff i != j and Hom vanishes in both directions.
CompatibilityGraph compatibility_graph(const DimMatrix& hom);
CompatibilityGraph compatibility_graph(const BoundAlgebraSpec& spec,
                                       const std::vector<Brick>& bricks);

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, the list
/// sorted lexicographically.
std::vector<std::vector<std::size_t>> maximal_brick_sets(const CompatibilityGraph& g);

}  // namespace fpd
