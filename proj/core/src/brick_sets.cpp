#include <algorithm>
#include <tuple>

#include "fpd/bricks.hpp"
#include "fpd/parallel.hpp"

namespace fpd {

std::string to_string(Completeness c) {
  return c == Completeness::Complete ? "complete" : "lower_bound";
}

void sort_bricks(std::vector<Brick>& bricks) {
  auto key = [](const Brick& b) {
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < b.dim_vector.size(); ++v)
      if (b.dim_vector[v] > 0) support.push_back(v + 1);
    return std::make_tuple(support.size(), support, b.dim_vector, b.name);
  };
  std::stable_sort(bricks.begin(), bricks.end(),
                   [&](const Brick& a, const Brick& b) { return key(a) < key(b); });
}

DimMatrix hom_matrix(const BoundAlgebraSpec& spec, const std::vector<Brick>& bricks) {
  const std::size_t n = bricks.size();
  DimMatrix h(n, std::vector<std::size_t>(n, 0));
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) h[i][j] = hom_dim(spec, bricks[i].rep, bricks[j].rep);
  });
  return h;
}

DimMatrix ext_matrix(const BoundAlgebraSpec& spec, const std::vector<Brick>& bricks) {
  const std::size_t n = bricks.size();
  DimMatrix e(n, std::vector<std::size_t>(n, 0));
  parallel_for(n, [&](std::size_t i) {
    const auto syz = syzygy(spec, bricks[i].rep);
    for (std::size_t j = 0; j < n; ++j)
      e[i][j] = ext1_dim(spec, syz, hom_dim(spec, bricks[i].rep, bricks[j].rep),
                         bricks[j].rep);
  });
  return e;
}

CompatibilityGraph compatibility_graph(const DimMatrix& hom) {
  CompatibilityGraph g;
  g.size = hom.size();
  g.adjacent.assign(g.size, std::vector<bool>(g.size, false));
  for (std::size_t i = 0; i < g.size; ++i)
    for (std::size_t j = 0; j < g.size; ++j)
      g.adjacent[i][j] = i != j && hom[i][j] == 0 && hom[j][i] == 0;
  return g;
}

CompatibilityGraph compatibility_graph(const BoundAlgebraSpec& spec,
                                       const std::vector<Brick>& bricks) {
  return compatibility_graph(hom_matrix(spec, bricks));
}

namespace {

using VertexSet = std::vector<std::size_t>;

void bron_kerbosch(const CompatibilityGraph& g, VertexSet& r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    VertexSet clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // Pivot: the vertex of P u X with the most neighbours in P.
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (std::size_t u : *set) {
      std::size_t count = 0;
      for (std::size_t v : p) count += g.adjacent[u][v];
      if (count > best) {
        best = count;
        pivot = u;
      }
    }

  VertexSet candidates;
  for (std::size_t v : p)
    if (!g.adjacent[pivot][v]) candidates.push_back(v);

  for (std::size_t v : candidates) {
    VertexSet np, nx;
    for (std::size_t u : p)
      if (g.adjacent[v][u]) np.push_back(u);
    for (std::size_t u : x)
      if (g.adjacent[v][u]) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_brick_sets(const CompatibilityGraph& g) {
  std::vector<VertexSet> out;
  if (g.size == 0) return out;
  VertexSet r, p(g.size), x;
  for (std::size_t i = 0; i < g.size; ++i) p[i] = i;
  bron_kerbosch(g, r, std::move(p), std::move(x), out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fpd
