#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fpd {

/// Vertices are numbered 1..vertex_count.
using Vertex = std::size_t;

struct Arrow {
  std::string id;
  Vertex source = 0;
  Vertex target = 0;

  bool is_loop() const { return source == target; }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quiver. Arrow order is significant: it fixes the order of the
/// per-arrow matrices of every representation built over it.
class Quiver {
 public:
  /// Throws ValidationError on out-of-range endpoints or duplicate ids.
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t index) const { return arrows_.at(index); }
  std::size_t arrow_count() const { return arrows_.size(); }

  /// Number of arrows s -> t (loops when s == t).
  std::size_t arrow_count(Vertex s, Vertex t) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
};

enum class RelationKind { RadicalSquareZero };

/// kQ/(>=2): the path algebra modulo all paths of length at least two.
class BoundAlgebraSpec {
 public:
  explicit BoundAlgebraSpec(Quiver quiver,
                            RelationKind relations = RelationKind::RadicalSquareZero);

  const Quiver& quiver() const { return quiver_; }
  RelationKind relation_kind() const { return relations_; }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  std::size_t arrow_count() const { return quiver_.arrow_count(); }
  const Arrow& arrow(std::size_t index) const { return quiver_.arrow(index); }

  /// Loops per vertex; entry v-1 belongs to vertex v.
  const std::vector<std::size_t>& loop_counts() const { return loop_counts_; }
  std::size_t loop_count(Vertex v) const { return loop_counts_.at(v - 1); }

  friend bool operator==(const BoundAlgebraSpec&, const BoundAlgebraSpec&) = default;

 private:
  Quiver quiver_;
  RelationKind relations_;
  std::vector<std::size_t> loop_counts_;
};

/// Parses the line-oriented quiver format:
///
///     # comment
///     vertices: 3
///     arrow x_2: 1 -> 2
///     loops 2: 3          # loop_2_1, loop_2_2, loop_2_3
///     relations: rad2
///
/// Arrow order is file order. Throws ParseError (with line number) for
/// syntax problems and for semantic problems attributable to a line.
BoundAlgebraSpec parse_quiver(std::string_view text);

/// Inverse of parse_quiver; every arrow, loops included, is written
/// explicitly so ids survive the round trip.
std::string render_quiver(const BoundAlgebraSpec& spec);

struct StrippedAlgebra {
  BoundAlgebraSpec base;                 // same vertices, non-loop arrows only
  std::vector<std::size_t> loop_counts;  // loops removed at each vertex
};

/// Removes every loop. The base keeps the remaining arrows in their original
/// relative order.
StrippedAlgebra strip_loops(const BoundAlgebraSpec& spec);

/// Reverses every arrow, keeping ids and order.
BoundAlgebraSpec opposite(const BoundAlgebraSpec& spec);

/// Indices (into spec.arrow()) of the non-loop arrows, in order. Arrow k of
/// strip_loops(spec).base is spec arrow non_loop_arrows(spec)[k].
std::vector<std::size_t> non_loop_arrows(const BoundAlgebraSpec& spec);

}  // namespace fpd
