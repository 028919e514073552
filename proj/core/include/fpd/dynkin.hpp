#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpd/quiver.hpp"

namespace fpd {

enum class DynkinType { A, D, E };

/// A simply-laced Dynkin diagram. Standard labels: A_n is the path 1 - ... - n;
/// D_n is the path 1 - ... - (n-2) with n-1 and n attached to n-2; E_n is
/// 1 - 3 - 4 - 5 - ... - n with 2 attached to 4.
struct Diagram {
  DynkinType type = DynkinType::A;
  std::size_t rank = 1;

  /// Throws ValidationError unless A_n (n >= 1), D_n (n >= 4) or E_6..E_8.
  void validate() const;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

std::string to_string(const Diagram& d);

/// Dimension vector in standard-label coordinates (entry k-1 for label k).
using RootVector = std::vector<int>;

/// Undirected edges of the diagram as (smaller label, larger label).
std::vector<std::pair<std::size_t, std::size_t>> diagram_edges(const Diagram& d);

/// All positive roots in simple-root coordinates, ordered by height and then
/// lexicographically.
std::vector<RootVector> positive_roots(const Diagram& d);

enum class ComponentKind { Dynkin, TwoCycle, Other };

/// One connected component of the underlying graph of a loop-free quiver.
struct Component {
  ComponentKind kind = ComponentKind::Other;
  std::vector<Vertex> vertices;  // ascending
  Diagram diagram;               // meaningful when kind == Dynkin
  /// Every identification of standard labels with quiver vertices that is an
  /// isomorphism of diagrams up to swapping arms of equal length:
  /// labelings[k][l-1] is the vertex carrying label l.
  std::vector<std::vector<Vertex>> labelings;
};

/// Splits the non-loop part of spec into connected components and recognizes
/// each as a Dynkin tree, a two-vertex oriented cycle, or neither.
std::vector<Component> classify_components(const BoundAlgebraSpec& spec);

/// True iff some labeling of the component carries exactly the arrows of the
/// reference orientation (the family quivers' A/D/E orientation) or all of
/// them reversed.
bool has_reference_orientation(const BoundAlgebraSpec& spec, const Component& c);

/// Directed edges (source label, target label) of the reference orientation:
/// A and D point away from label 1 along the chain and into both leaves;
/// E has 1 -> 3 -> 4 -> ... -> n and 4 -> 2.
std::vector<std::pair<std::size_t, std::size_t>> reference_orientation(const Diagram& d);

}  // namespace fpd
