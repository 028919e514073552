#include "fpd/fpd.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "fpd/error.hpp"
#include "fpd/parallel.hpp"

namespace fpd {

IntMatrix adjacency_matrix(const BoundAlgebraSpec& spec, const std::vector<Brick>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j) {
      const std::size_t h = hom_dim(spec, set[i].rep, set[j].rep);
      if (h != (i == j ? 1u : 0u))
        throw ValidationError("not a brick set: dim Hom(" + set[i].name + ", " + set[j].name +
                              ") = " + std::to_string(h));
    }
  IntMatrix a(set.size(), set.size());
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j)
      a(i, j) = static_cast<long long>(ext1_dim(spec, set[i].rep, set[j].rep));
  return a;
}

IntMatrix adjacency_matrix(const DimMatrix& ext, const std::vector<std::size_t>& indices) {
  IntMatrix a(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      a(i, j) = static_cast<long long>(ext.at(indices[i]).at(indices[j]));
  return a;
}

BrickList enumerate_bricks(const BoundAlgebraSpec& spec, const EnumerationOptions& options) {
  if (options.mode == EnumerationMode::Thin) return enumerate_bricks_thin(spec);
  const std::size_t bound =
      options.max_total_dim ? options.max_total_dim : spec.vertex_count() + 2;
  return enumerate_bricks_oracle(spec, bound, options.field_order);
}

namespace {

// Larger value wins; near-ties prefer an exact value.
bool better(const SpectralRadius& candidate, const SpectralRadius& current, long double tol) {
  if (candidate.value > current.value + 2 * tol) return true;
  if (candidate.value < current.value - 2 * tol) return false;
  if (candidate.exact && !current.exact) return true;
  if (!candidate.exact && current.exact) return false;
  return candidate.value > current.value;
}

void for_each_subset(const std::vector<std::size_t>& set, std::size_t k, std::size_t start,
                     std::vector<std::size_t>& chosen,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (chosen.size() == k) {
    fn(chosen);
    return;
  }
  for (std::size_t i = start; i + (k - chosen.size()) <= set.size(); ++i) {
    chosen.push_back(set[i]);
    for_each_subset(set, k, i + 1, chosen, fn);
    chosen.pop_back();
  }
}

}  // namespace

FpdReport compute_fpd(const BoundAlgebraSpec& spec, const EnumerationOptions& options,
                      long double tol) {
  if (!(tol > 0)) throw ValidationError("tolerance must be positive");
  auto list = enumerate_bricks(spec, options);
  FpdReport report{spec, std::move(list.bricks), {}, {}, {}, {}, {}, std::nullopt,
                   list.completeness};
  report.hom = hom_matrix(spec, report.bricks);
  report.ext = ext_matrix(spec, report.bricks);

  const auto sets = maximal_brick_sets(compatibility_graph(report.hom));
  report.maximal_sets.resize(sets.size());
  parallel_for(sets.size(), [&](std::size_t s) {
    auto& r = report.maximal_sets[s];
    r.indices = sets[s];
    r.adjacency = adjacency_matrix(report.ext, sets[s]);
    r.rho = spectral_radius(r.adjacency, tol);
  });

  report.fpd = {0, 0, QuadraticSurd()};
  bool first = true;
  for (const auto& r : report.maximal_sets)
    if (first || better(r.rho, report.fpd, tol)) {
      report.fpd = r.rho;
      first = false;
    }

  // fpd^n: every k-subset of every maximal set, each subset evaluated once.
  std::size_t largest = 0;
  for (const auto& s : sets) largest = std::max(largest, s.size());
  std::map<std::vector<std::size_t>, SpectralRadius> memo;
  for (std::size_t k = 1; k <= largest; ++k) {
    std::optional<SpectralRadius> best;
    for (const auto& s : sets) {
      if (s.size() < k) continue;
      std::vector<std::size_t> chosen;
      for_each_subset(s, k, 0, chosen, [&](const std::vector<std::size_t>& sub) {
        auto it = memo.find(sub);
        if (it == memo.end())
          it = memo.emplace(sub, spectral_radius(adjacency_matrix(report.ext, sub), tol)).first;
        if (!best || better(it->second, *best, tol)) best = it->second;
      });
    }
    report.fpd_n.push_back({k, *best});
  }
  report.fpd_n.push_back({largest + 1, NegativeInfinity{}});
  return report;
}

QuadraticSurd closed_form_fpd(const FamilySpec& family) {
  family.validate();
  if (family.kind == FamilyKind::Qnm) {
    const long n = static_cast<long>(family.loops[0]);
    const long m = static_cast<long>(family.loops[1]);
    return QuadraticSurd(Rational(Integer(m + n), Integer(2)), Rational(1, 2),
                         Integer(m - n) * Integer(m - n) + 4);
  }
  const auto top = *std::max_element(family.loops.begin(), family.loops.end());
  return QuadraticSurd(Rational(static_cast<unsigned long>(top)));
}

ClosedFormComparison compare_closed_form(const SpectralRadius& computed,
                                         const QuadraticSurd& expected) {
  ClosedFormComparison c{expected, false, std::fabs(computed.value - expected.to_long_double())};
  c.match = computed.exact ? *computed.exact == expected : c.delta <= 1e-9L;
  return c;
}

FpdReport compute_family_fpd(const FamilySpec& family, const EnumerationOptions& options,
                             long double tol) {
  auto report = compute_fpd(generate_family(family), options, tol);
  report.closed_form = compare_closed_form(report.fpd, closed_form_fpd(family));
  return report;
}

}  // namespace fpd
