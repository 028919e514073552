#include "fpd/dynkin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string_view>

#include "fpd/error.hpp"

namespace fpd {

namespace {

// Positive roots of E6, E7, E8 in standard labels, one digit per label.
constexpr const char* kE6Roots[] = {
    "100000", "010000", "001000", "000100", "000010", "000001", "101000", "010100",
    "001100", "000110", "000011", "101100", "011100", "010110", "001110", "000111",
    "111100", "101110", "011110", "010111", "001111", "111110", "101111", "011210",
    "011111", "111210", "111111", "011211", "112210", "111211", "011221", "112211",
    "111221", "112221", "112321", "122321"
};

constexpr const char* kE7Roots[] = {
    "1000000", "0100000", "0010000", "0001000", "0000100", "0000010", "0000001", "1010000",
    "0101000", "0011000", "0001100", "0000110", "0000011", "1011000", "0111000", "0101100",
    "0011100", "0001110", "0000111", "1111000", "1011100", "0111100", "0101110", "0011110",
    "0001111", "1111100", "1011110", "0112100", "0111110", "0101111", "0011111", "1112100",
    "1111110", "1011111", "0112110", "0111111", "1122100", "1112110", "1111111", "0112210",
    "0112111", "1122110", "1112210", "1112111", "0112211", "1122210", "1122111", "1112211",
    "0112221", "1123210", "1122211", "1112221", "1223210", "1123211", "1122221", "1223211",
    "1123221", "1223221", "1123321", "1223321", "1224321", "1234321", "2234321"
};

constexpr const char* kE8Roots[] = {
    "10000000", "01000000", "00100000", "00010000", "00001000", "00000100", "00000010", "00000001",
    "10100000", "01010000", "00110000", "00011000", "00001100", "00000110", "00000011", "10110000",
    "01110000", "01011000", "00111000", "00011100", "00001110", "00000111", "11110000", "10111000",
    "01111000", "01011100", "00111100", "00011110", "00001111", "11111000", "10111100", "01121000",
    "01111100", "01011110", "00111110", "00011111", "11121000", "11111100", "10111110", "01121100",
    "01111110", "01011111", "00111111", "11221000", "11121100", "11111110", "10111111", "01122100",
    "01121110", "01111111", "11221100", "11122100", "11121110", "11111111", "01122110", "01121111",
    "11222100", "11221110", "11122110", "11121111", "01122210", "01122111", "11232100", "11222110",
    "11221111", "11122210", "11122111", "01122211", "12232100", "11232110", "11222210", "11222111",
    "11122211", "01122221", "12232110", "11232210", "11232111", "11222211", "11122221", "12232210",
    "12232111", "11233210", "11232211", "11222221", "12233210", "12232211", "11233211", "11232221",
    "12243210", "12233211", "12232221", "11233221", "12343210", "12243211", "12233221", "11233321",
    "22343210", "12343211", "12243221", "12233321", "22343211", "12343221", "12243321", "22343221",
    "12343321", "12244321", "22343321", "12344321", "22344321", "12354321", "22354321", "13354321",
    "23354321", "22454321", "23454321", "23464321", "23465321", "23465421", "23465431", "23465432"
};
template <std::size_t N>
std::vector<RootVector> decode(const char* const (&table)[N]) {
  std::vector<RootVector> roots;
  roots.reserve(N);
  for (std::string_view digits : table) {
    RootVector r;
    for (char c : digits) r.push_back(c - '0');
    roots.push_back(std::move(r));
  }
  return roots;
}

int height(const RootVector& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

RootVector interval(std::size_t n, std::size_t first, std::size_t last) {
  RootVector r(n, 0);
  for (std::size_t l = first; l <= last; ++l) r[l - 1] = 1;
  return r;
}

}  // namespace

void Diagram::validate() const {
  switch (type) {
    case DynkinType::A:
      if (rank < 1) throw ValidationError("A_n requires n >= 1");
      break;
    case DynkinType::D:
      if (rank < 4) throw ValidationError("D_n requires n >= 4");
      break;
    case DynkinType::E:
      if (rank < 6 || rank > 8) throw ValidationError("E_n requires n in {6, 7, 8}");
      break;
  }
}

std::string to_string(const Diagram& d) {
  const char* letter = d.type == DynkinType::A ? "A" : d.type == DynkinType::D ? "D" : "E";
  return letter + std::to_string(d.rank);
}

std::vector<std::pair<std::size_t, std::size_t>> reference_orientation(const Diagram& d) {
  d.validate();
  const std::size_t n = d.rank;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  switch (d.type) {
    case DynkinType::A:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case DynkinType::D:
      for (std::size_t i = 1; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n - 1);
      edges.emplace_back(n - 2, n);
      break;
    case DynkinType::E:
      edges.emplace_back(1, 3);
      for (std::size_t i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(4, 2);
      break;
  }
  return edges;
}

std::vector<std::pair<std::size_t, std::size_t>> diagram_edges(const Diagram& d) {
  auto edges = reference_orientation(d);
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<RootVector> positive_roots(const Diagram& d) {
  d.validate();
  const std::size_t n = d.rank;
  std::vector<RootVector> roots;
  switch (d.type) {
    case DynkinType::A:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) roots.push_back(interval(n, i, j));
      break;
    case DynkinType::D:
      // Intervals inside the path 1 .. n-1.
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) roots.push_back(interval(n, i, j));
      // E_n and the intervals i .. n-2 followed by E_n.
      roots.push_back(interval(n, n, n));
      for (std::size_t i = 1; i + 1 < n; ++i) {
        auto r = interval(n, i, n - 2);
        r[n - 1] = 1;
        roots.push_back(std::move(r));
      }
      // i .. n-2 together with both leaves.
      for (std::size_t i = 1; i + 1 < n; ++i) roots.push_back(interval(n, i, n));
      // Doubled on j .. n-2.
      for (std::size_t i = 1; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
          auto r = interval(n, i, n);
          for (std::size_t l = j; l <= n - 2; ++l) r[l - 1] = 2;
          roots.push_back(std::move(r));
        }
      break;
    case DynkinType::E:
      roots = n == 6 ? decode(kE6Roots) : n == 7 ? decode(kE7Roots) : decode(kE8Roots);
      break;
  }
  std::sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return roots;
}

namespace {

struct Arm {
  std::vector<Vertex> path;  // from the neighbor of the center outward
};

Arm walk_arm(const std::map<Vertex, std::vector<Vertex>>& adj, Vertex center, Vertex first) {
  Arm arm;
  Vertex prev = center, cur = first;
  while (true) {
    arm.path.push_back(cur);
    const auto& nb = adj.at(cur);
    if (nb.size() != 2) break;
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return arm;
}

void classify_tree(Component& c, const std::map<Vertex, std::vector<Vertex>>& adj) {
  const std::size_t n = c.vertices.size();
  std::vector<Vertex> branch;
  for (Vertex v : c.vertices) {
    const std::size_t deg = adj.at(v).size();
    if (deg > 3) return;
    if (deg == 3) branch.push_back(v);
  }
  if (branch.size() > 1) return;

  std::set<std::vector<Vertex>> labelings;
  if (branch.empty()) {
    c.diagram = {DynkinType::A, n};
    if (n == 1) {
      labelings.insert({c.vertices[0]});
    } else {
      Vertex end = 0;
      for (Vertex v : c.vertices)
        if (adj.at(v).size() == 1) {
          end = v;
          break;
        }
      std::vector<Vertex> path{end};
      const auto rest = walk_arm(adj, end, adj.at(end)[0]).path;
      path.insert(path.end(), rest.begin(), rest.end());
      labelings.insert(path);
      std::reverse(path.begin(), path.end());
      labelings.insert(path);
    }
  } else {
    const Vertex center = branch[0];
    std::vector<Arm> arms;
    for (Vertex nb : adj.at(center)) arms.push_back(walk_arm(adj, center, nb));
    std::vector<std::size_t> lengths;
    for (const auto& a : arms) lengths.push_back(a.path.size());
    std::sort(lengths.begin(), lengths.end());

    bool is_d = lengths[0] == 1 && lengths[1] == 1;
    bool is_e = lengths[0] == 1 && lengths[1] == 2 && lengths[2] >= 2 && lengths[2] <= 4;
    if (!is_d && !is_e) return;
    c.diagram = {is_d ? DynkinType::D : DynkinType::E, n};

    std::vector<std::size_t> perm{0, 1, 2};
    do {
      const auto& a0 = arms[perm[0]].path;
      const auto& a1 = arms[perm[1]].path;
      const auto& a2 = arms[perm[2]].path;
      std::vector<Vertex> label(n, 0);
      if (is_d) {
        // a0 is the long arm, a1 and a2 the leaves n-1 and n.
        if (a0.size() != n - 3 || a1.size() != 1 || a2.size() != 1) continue;
        for (std::size_t k = 0; k < a0.size(); ++k) label[n - 4 - k] = a0[k];
        label[n - 3] = center;
        label[n - 2] = a1[0];
        label[n - 1] = a2[0];
      } else {
        // a0 carries label 2, a1 labels 3 then 1, a2 labels 5, 6, ...
        if (a0.size() != 1 || a1.size() != 2 || a2.size() != n - 4) continue;
        label[1] = a0[0];
        label[2] = a1[0];
        label[0] = a1[1];
        label[3] = center;
        for (std::size_t k = 0; k < a2.size(); ++k) label[4 + k] = a2[k];
      }
      labelings.insert(std::move(label));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  c.kind = ComponentKind::Dynkin;
  c.labelings.assign(labelings.begin(), labelings.end());
}

}  // namespace

std::vector<Component> classify_components(const BoundAlgebraSpec& spec) {
  const std::size_t vc = spec.vertex_count();
  std::map<Vertex, std::vector<Vertex>> adj;
  for (Vertex v = 1; v <= vc; ++v) adj[v];
  for (const auto& a : spec.quiver().arrows()) {
    if (a.is_loop()) continue;
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }

  std::vector<bool> seen(vc + 1, false);
  std::vector<Component> components;
  for (Vertex root = 1; root <= vc; ++root) {
    if (seen[root]) continue;
    Component c;
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (Vertex w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(c.vertices.begin(), c.vertices.end());

    std::size_t edges = 0;
    for (Vertex v : c.vertices) edges += adj[v].size();
    edges /= 2;

    if (c.vertices.size() == 2 && edges == 2) {
      const Vertex u = c.vertices[0], w = c.vertices[1];
      if (spec.quiver().arrow_count(u, w) == 1 && spec.quiver().arrow_count(w, u) == 1)
        c.kind = ComponentKind::TwoCycle;
    } else if (edges + 1 == c.vertices.size()) {
      classify_tree(c, adj);
    }
    components.push_back(std::move(c));
  }
  return components;
}

bool has_reference_orientation(const BoundAlgebraSpec& spec, const Component& c) {
  if (c.kind != ComponentKind::Dynkin) return false;
  const auto ref = reference_orientation(c.diagram);
  const std::set<std::pair<std::size_t, std::size_t>> forward(ref.begin(), ref.end());
  std::set<std::pair<std::size_t, std::size_t>> backward;
  for (const auto& [s, t] : ref) backward.emplace(t, s);

  for (const auto& labeling : c.labelings) {
    std::map<Vertex, std::size_t> label_of;
    for (std::size_t l = 0; l < labeling.size(); ++l) label_of[labeling[l]] = l + 1;
    std::set<std::pair<std::size_t, std::size_t>> actual;
    for (const auto& a : spec.quiver().arrows()) {
      if (a.is_loop() || !label_of.count(a.source)) continue;
      actual.emplace(label_of[a.source], label_of[a.target]);
    }
    if (actual == forward || actual == backward) return true;
  }
  return false;
}

}  // namespace fpd
