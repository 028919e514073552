#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "fpd/bricks.hpp"
#include "fpd/family.hpp"
#include "fpd/quiver.hpp"
#include "fpd/spectral.hpp"

namespace fpd {

enum class EnumerationMode { Thin, Oracle };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::Thin;
  std::size_t max_total_dim = 0;  // oracle only; 0 means vertex count + 2
  unsigned field_order = 2;       // oracle only
};

struct BrickSetReport {
  std::vector<std::size_t> indices;
  IntMatrix adjacency;
  SpectralRadius rho;
};

/// fpd^n when no brick set of size n exists.
struct NegativeInfinity {
  friend bool operator==(NegativeInfinity, NegativeInfinity) { return true; }
};

using FpdValue = std::variant<NegativeInfinity, SpectralRadius>;

struct FpdNEntry {
  std::size_t n = 0;
  FpdValue value;
};

struct ClosedFormComparison {
  QuadraticSurd expected;
  bool match = false;
  long double delta = 0;
};

struct FpdReport {
  BoundAlgebraSpec spec;
  std::vector<Brick> bricks;
  DimMatrix hom;
  DimMatrix ext;
  std::vector<BrickSetReport> maximal_sets;
  SpectralRadius fpd;
  /// n = 1 .. (largest brick set size + 1); the last entry is always -inf.
  std::vector<FpdNEntry> fpd_n;
  std::optional<ClosedFormComparison> closed_form;
  Completeness completeness = Completeness::Complete;
};

/// Ext^1 dimensions over a brick set, in the given order. Throws
/// ValidationError when two members have a nonzero Hom.
IntMatrix adjacency_matrix(const BoundAlgebraSpec& spec, const std::vector<Brick>& set);

/// Rows and columns `indices` of an Ext table.
IntMatrix adjacency_matrix(const DimMatrix& ext, const std::vector<std::size_t>& indices);

BrickList enumerate_bricks(const BoundAlgebraSpec& spec, const EnumerationOptions& options);

FpdReport compute_fpd(const BoundAlgebraSpec& spec, const EnumerationOptions& options = {},
                      long double tol = 1e-10L);

/// A/D/E and A3Reversed: the largest loop count. Qnm(n, m):
/// (m + n)/2 + sqrt((m - n)^2 + 4)/2.
QuadraticSurd closed_form_fpd(const FamilySpec& family);

/// Exact equality when both sides are exact, otherwise |delta| <= 1e-9.
ClosedFormComparison compare_closed_form(const SpectralRadius& computed,
                                         const QuadraticSurd& expected);

/// generate_family + compute_fpd + compare_closed_form.
FpdReport compute_family_fpd(const FamilySpec& family, const EnumerationOptions& options = {},
                             long double tol = 1e-10L);

}  // namespace fpd
