#include <set>

#include "fpd/bricks.hpp"
#include "fpd/dynkin.hpp"
#include "fpd/error.hpp"

namespace fpd {

namespace {

Representation thin_rep(const BoundAlgebraSpec& spec, const std::set<Vertex>& support) {
  std::vector<std::size_t> dims(spec.vertex_count(), 0);
  for (Vertex v : support) dims[v - 1] = 1;
  auto rep = zero_maps_rep<Rational>(spec, std::move(dims));
  for (std::size_t k = 0; k < spec.arrow_count(); ++k) {
    const auto& a = spec.arrow(k);
    if (!a.is_loop() && support.count(a.source) && support.count(a.target))
      rep.maps[k](0, 0) = 1;
  }
  return rep;
}

Representation cycle_rep(const BoundAlgebraSpec& spec, Vertex top, Vertex socle) {
  std::vector<std::size_t> dims(spec.vertex_count(), 0);
  dims[top - 1] = dims[socle - 1] = 1;
  auto rep = zero_maps_rep<Rational>(spec, std::move(dims));
  for (std::size_t k = 0; k < spec.arrow_count(); ++k)
    if (spec.arrow(k).source == top && spec.arrow(k).target == socle) rep.maps[k](0, 0) = 1;
  return rep;
}

void add_brick(const BoundAlgebraSpec& spec, Representation rep, std::vector<Brick>& out) {
  if (!annihilated_by_relations(spec, rep) || !is_brick(spec, rep)) return;
  rep.name = brick_name(spec, rep);
  Brick b{std::move(rep), {}, {}};
  b.dim_vector = b.rep.dims;
  b.name = b.rep.name;
  out.push_back(std::move(b));
}

}  // namespace

BrickList enumerate_bricks_thin(const BoundAlgebraSpec& spec) {
  BrickList list;
  for (const auto& c : classify_components(spec)) {
    switch (c.kind) {
      case ComponentKind::TwoCycle: {
        const Vertex u = c.vertices[0], v = c.vertices[1];
        add_brick(spec, thin_rep(spec, {u}), list.bricks);
        add_brick(spec, thin_rep(spec, {v}), list.bricks);
        add_brick(spec, cycle_rep(spec, u, v), list.bricks);
        add_brick(spec, cycle_rep(spec, v, u), list.bricks);
        break;
      }
      case ComponentKind::Dynkin: {
        const auto& labeling = c.labelings.front();
        for (const auto& root : positive_roots(c.diagram)) {
          std::set<Vertex> support;
          bool thin = true;
          for (std::size_t l = 0; l < root.size(); ++l) {
            if (root[l] > 1) thin = false;
            if (root[l] > 0) support.insert(labeling[l]);
          }
          if (thin) add_brick(spec, thin_rep(spec, support), list.bricks);
        }
        if (c.diagram.type != DynkinType::A && !has_reference_orientation(spec, c))
          list.completeness = Completeness::LowerBound;
        break;
      }
      case ComponentKind::Other: {
        std::string vs;
        for (Vertex v : c.vertices) vs += (vs.empty() ? "" : ",") + std::to_string(v);
        throw ValidationError("thin enumeration needs a Dynkin or two-cycle base; component {" +
                              vs + "} is neither (use --mode oracle)");
      }
    }
  }
  sort_bricks(list.bricks);
  return list;
}

}  // namespace fpd
