#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fpd/quiver.hpp"

namespace fpd {

/// The named algebras: modified A(n), D(n), E(n), the two-vertex cycle
/// Q(n,m), and A(3) with orientation 1 -> 2 <- 3.
enum class FamilyKind { A, D, E, Qnm, A3Reversed };

struct FamilySpec {
  FamilyKind kind = FamilyKind::A;
  std::size_t n = 0;                // ignored for Qnm and A3Reversed
  std::vector<std::size_t> loops;   // per vertex; (n, m) for Qnm; (N, M, L) for A3Reversed

  /// Throws ValidationError when n or the loop arity does not fit the kind.
  void validate() const;
  std::size_t vertex_count() const;
};

std::string to_string(FamilyKind kind);
/// Accepts A, D, E, Qnm, A3rev (case-insensitive). Throws ValidationError.
FamilyKind parse_family_kind(std::string_view name);

/// Builds the family quiver. Arrow order: chain arrows ascending, then branch
/// arrows, then loops grouped by vertex. Ids follow the usual labels:
/// x_i for the arrow into vertex i, a_i^l / b_i^l / c_i^l for loops on A / D / E,
/// and x, y, a_l, b_l, c_l for Q(n,m) and A3Reversed.
BoundAlgebraSpec generate_family(const FamilySpec& family);

}  // namespace fpd
