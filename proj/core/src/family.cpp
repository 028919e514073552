#include "fpd/family.hpp"

#include <algorithm>
#include <cctype>

#include "fpd/error.hpp"

namespace fpd {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::A: return "A";
    case FamilyKind::D: return "D";
    case FamilyKind::E: return "E";
    case FamilyKind::Qnm: return "Qnm";
    case FamilyKind::A3Reversed: return "A3rev";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "a") return FamilyKind::A;
  if (lower == "d") return FamilyKind::D;
  if (lower == "e") return FamilyKind::E;
  if (lower == "qnm") return FamilyKind::Qnm;
  if (lower == "a3rev" || lower == "a3reversed") return FamilyKind::A3Reversed;
  throw ValidationError("unknown family type '" + std::string(name) +
                        "' (expected A, D, E, Qnm or A3rev)");
}

std::size_t FamilySpec::vertex_count() const {
  switch (kind) {
    case FamilyKind::Qnm: return 2;
    case FamilyKind::A3Reversed: return 3;
    default: return n;
  }
}

void FamilySpec::validate() const {
  const std::string label = to_string(kind);
  switch (kind) {
    case FamilyKind::A:
      if (n < 1) throw ValidationError("A(n) requires n >= 1");
      break;
    case FamilyKind::D:
      if (n < 4) throw ValidationError("D(n) requires n >= 4");
      break;
    case FamilyKind::E:
      if (n < 6 || n > 8) throw ValidationError("E(n) requires n in {6, 7, 8}");
      break;
    case FamilyKind::Qnm:
    case FamilyKind::A3Reversed:
      break;
  }
  if (loops.size() != vertex_count())
    throw ValidationError(label + " expects " + std::to_string(vertex_count()) +
                          " loop counts, got " + std::to_string(loops.size()));
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

void add_loops(std::vector<Arrow>& arrows, Vertex v, std::size_t count,
               const std::string& letter, bool with_vertex) {
  for (std::size_t l = 1; l <= count; ++l) {
    std::string id = with_vertex ? letter + "_" + idx(v) + "^" + idx(l)
                                 : letter + "_" + idx(l);
    arrows.push_back({std::move(id), v, v});
  }
}

}  // namespace

BoundAlgebraSpec generate_family(const FamilySpec& f) {
  f.validate();
  std::vector<Arrow> arrows;
  const std::size_t n = f.vertex_count();

  switch (f.kind) {
    case FamilyKind::A:
      for (Vertex i = 2; i <= n; ++i) arrows.push_back({"x_" + idx(i), i - 1, i});
      for (Vertex v = 1; v <= n; ++v) add_loops(arrows, v, f.loops[v - 1], "a", true);
      break;
    case FamilyKind::D:
      for (Vertex i = 2; i <= n - 2; ++i) arrows.push_back({"x_" + idx(i), i - 1, i});
      arrows.push_back({"x_" + idx(n - 1), n - 2, n - 1});
      arrows.push_back({"x_" + idx(n), n - 2, n});
      for (Vertex v = 1; v <= n; ++v) add_loops(arrows, v, f.loops[v - 1], "b", true);
      break;
    case FamilyKind::E:
      arrows.push_back({"x_3", 1, 3});
      for (Vertex i = 4; i <= n; ++i) arrows.push_back({"x_" + idx(i), i - 1, i});
      arrows.push_back({"x_2", 4, 2});
      for (Vertex v = 1; v <= n; ++v) add_loops(arrows, v, f.loops[v - 1], "c", true);
      break;
    case FamilyKind::Qnm:
      arrows.push_back({"x", 1, 2});
      arrows.push_back({"y", 2, 1});
      add_loops(arrows, 1, f.loops[0], "a", false);
      add_loops(arrows, 2, f.loops[1], "b", false);
      break;
    case FamilyKind::A3Reversed:
      arrows.push_back({"x", 1, 2});
      arrows.push_back({"y", 3, 2});
      add_loops(arrows, 1, f.loops[0], "a", false);
      add_loops(arrows, 2, f.loops[1], "b", false);
      add_loops(arrows, 3, f.loops[2], "c", false);
      break;
  }
  return BoundAlgebraSpec(Quiver(n, std::move(arrows)));
}

}  // namespace fpd
