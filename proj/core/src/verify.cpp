#include "fpd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fpd/bricks.hpp"
#include "fpd/family.hpp"
#include "fpd/fpd.hpp"
#include "fpd/representation.hpp"

namespace fpd {

namespace {

constexpr long double kTol = 1e-10L;

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

std::string describe(const FamilySpec& f) {
  std::string s = to_string(f.kind);
  if (f.kind != FamilyKind::Qnm && f.kind != FamilyKind::A3Reversed)
    s += "(" + std::to_string(f.n) + ")";
  s += " loops (";
  for (std::size_t i = 0; i < f.loops.size(); ++i)
    s += (i ? "," : "") + std::to_string(f.loops[i]);
  return s + ")";
}

std::size_t max_loops(const FamilySpec& f) {
  return *std::max_element(f.loops.begin(), f.loops.end());
}

bool exactly(const SpectralRadius& rho, const QuadraticSurd& value) {
  return rho.exact && *rho.exact == value;
}

QuadraticSurd integer(std::size_t n) { return QuadraticSurd(Rational(static_cast<unsigned long>(n))); }

std::vector<std::size_t> random_loops(std::mt19937& rng, std::size_t n, std::size_t max) {
  std::uniform_int_distribution<std::size_t> dist(0, max);
  std::vector<std::size_t> loops(n);
  for (auto& l : loops) l = dist(rng);
  return loops;
}

// State shared between criteria: adjacency matrices and instances collected
// by criteria 1-5 feed the property checks of criterion 8.
class Battery {
 public:
  explicit Battery(VerifyMode mode) : mode_(mode), rng_(20240611) {}

  bool quick() const { return mode_ == VerifyMode::Quick; }
  bool full() const { return mode_ == VerifyMode::Full; }

  FpdReport run_family(const FamilySpec& f) {
    auto report = compute_family_fpd(f, {}, kTol);
    for (const auto& s : report.maximal_sets) adjacency_.push_back(s.adjacency);
    instances_.push_back(f);
    return report;
  }

  std::string criterion1() {
    std::vector<FamilySpec> cases;
    const std::size_t top_n = quick() ? 3 : 5;
    for (std::size_t n = 1; n <= top_n; ++n) {
      if (n <= 2) {
        // Full grid {0..3}^n.
        const std::size_t total = n == 1 ? 4 : 16;
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<std::size_t> loops(n);
          for (std::size_t i = 0, c = code; i < n; ++i, c /= 4) loops[i] = c % 4;
          cases.push_back({FamilyKind::A, n, loops});
        }
      } else {
        const std::size_t samples = quick() ? 4 : 12;
        for (std::size_t s = 0; s < samples; ++s)
          cases.push_back({FamilyKind::A, n, random_loops(rng_, n, 3)});
      }
    }
    for (const auto& f : cases) {
      const auto r = run_family(f);
      require(exactly(r.fpd, integer(max_loops(f))),
              describe(f) + ": fpd " + r.fpd.exact.value_or(QuadraticSurd()).to_string() +
                  " != max loops");
      require(r.bricks.size() == 2 * f.n - 1, describe(f) + ": expected 2n-1 bricks");
      require(r.completeness == Completeness::Complete, describe(f) + ": incomplete brick list");
    }
    return std::to_string(cases.size()) + " instances of A(1..." + std::to_string(top_n) +
           "), fpd = max N_i exactly";
  }

  std::string criterion2() {
    std::vector<FamilySpec> cases;
    const std::vector<std::size_t> ns = quick() ? std::vector<std::size_t>{4}
                                                : std::vector<std::size_t>{4, 5};
    for (std::size_t n : ns) {
      cases.push_back({FamilyKind::D, n, std::vector<std::size_t>(n, 0)});
      const std::size_t samples = quick() ? 3 : 11;
      for (std::size_t s = 0; s < samples; ++s)
        cases.push_back({FamilyKind::D, n, random_loops(rng_, n, 3)});
    }
    cases.push_back({FamilyKind::D, 5, {2, 0, 1, 0, 3}});
    for (const auto& f : cases) {
      const auto r = run_family(f);
      require(exactly(r.fpd, integer(max_loops(f))), describe(f) + ": fpd != max loops");
      require(r.bricks.size() == 2 * f.n, describe(f) + ": expected 2n bricks, got " +
                                              std::to_string(r.bricks.size()));
      require(r.completeness == Completeness::Complete, describe(f) + ": incomplete brick list");
    }
    return std::to_string(cases.size()) + " instances of D(4), D(5); 2n bricks each";
  }

  std::string criterion3() {
    std::vector<FamilySpec> cases;
    const std::vector<std::size_t> ns = quick() ? std::vector<std::size_t>{6}
                                                : std::vector<std::size_t>{6, 7};
    for (std::size_t n : ns) {
      cases.push_back({FamilyKind::E, n, std::vector<std::size_t>(n, 0)});
      const std::size_t samples = quick() ? 1 : 5;
      for (std::size_t s = 0; s < samples; ++s)
        cases.push_back({FamilyKind::E, n, random_loops(rng_, n, 3)});
    }
    for (const auto& f : cases) {
      const auto r = run_family(f);
      require(exactly(r.fpd, integer(max_loops(f))), describe(f) + ": fpd != max loops");
      const std::size_t expected = 2 * f.n;  // n simples and n two-vertex bricks
      require(r.bricks.size() == expected, describe(f) + ": expected " +
                                               std::to_string(expected) + " bricks, got " +
                                               std::to_string(r.bricks.size()));
    }
    return std::to_string(cases.size()) + " instances of E(6)" + (quick() ? "" : ", E(7)") +
           "; 12 / 14 bricks";
  }

  std::string criterion4() {
    std::size_t count = 0;
    for (std::size_t n = 0; n <= 3; ++n)
      for (std::size_t m = 0; m <= 3; ++m) {
        const FamilySpec f{FamilyKind::Qnm, 0, {n, m}};
        const auto r = run_family(f);
        ++count;
        require(r.closed_form && r.closed_form->match, describe(f) + ": closed form mismatch");
        const long diff = static_cast<long>(m) - static_cast<long>(n);
        const long double expected =
            0.5L * (m + n + std::sqrt(static_cast<long double>(diff * diff + 4)));
        require(std::fabs(r.fpd.value - expected) <= 1e-9L, describe(f) + ": value off");
        if (m == n) require(exactly(r.fpd, integer(n + 1)), describe(f) + ": m = n not exact n+1");
        require(r.bricks.size() == 4 && r.maximal_sets.size() == 3,
                describe(f) + ": expected 4 bricks and 3 maximal sets");
      }
    const long double golden = (1 + std::sqrt(5.0L)) / 2;
    for (std::size_t big = 0; big <= (quick() ? 3u : 8u); ++big) {
      const FamilySpec f{FamilyKind::Qnm, 0, {big, big + 1}};
      const auto r = run_family(f);
      ++count;
      require(std::fabs(r.fpd.value - (big + golden)) <= 1e-9L,
              describe(f) + ": fpd != N + (1+sqrt 5)/2");
    }
    return std::to_string(count) + " instances; grid {0..3}^2 and (N, N+1) for N <= " +
           (quick() ? "3" : "8");
  }

  std::string criterion5() {
    std::size_t count = 0;
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (std::size_t c = 0; c <= 2; ++c) {
          const FamilySpec f{FamilyKind::A3Reversed, 0, {a, b, c}};
          const auto r = run_family(f);
          ++count;
          const std::size_t top = std::max({a, b, c});
          require(exactly(r.fpd, integer(top)), describe(f) + ": fpd != max loops");
          const std::map<std::set<std::string>, std::size_t> expected{
              {{"(1 3/2)"}, 0},         {{"(1)", "(2)", "(3)"}, top}, {{"(3/2)", "(1)"}, a},
              {{"(1/2)", "(3/2)"}, 0}, {{"(1/2)", "(3)"}, c}};
          require(r.maximal_sets.size() == expected.size(),
                  describe(f) + ": expected 5 maximal brick sets");
          for (const auto& s : r.maximal_sets) {
            std::set<std::string> names;
            for (auto i : s.indices) names.insert(r.bricks[i].name);
            const auto it = expected.find(names);
            require(it != expected.end(), describe(f) + ": unexpected maximal set");
            require(exactly(s.rho, integer(it->second)), describe(f) + ": wrong rho for a set");
          }
        }
    return std::to_string(count) + " instances; 5 maximal sets with rho 0, max, N, 0, L";
  }

  std::string criterion6() {
    const std::vector<FamilySpec> bases{{FamilyKind::A, 2, {0, 0}},
                                        {FamilyKind::A, 3, {0, 0, 0}},
                                        {FamilyKind::D, 4, {0, 0, 0, 0}}};
    std::size_t checks = 0;
    for (const auto& f : bases) {
      const auto spec = generate_family(f);
      const auto thin = enumerate_bricks_thin(spec);
      const auto thin_hom = hom_matrix(spec, thin.bricks);
      const auto thin_ext = ext_matrix(spec, thin.bricks);
      for (unsigned q : {2u, 3u}) {
        const auto oracle = enumerate_bricks_oracle(spec, spec.vertex_count() + 2, q);
        const std::string where = describe(f) + " over F" + std::to_string(q);
        require(oracle.bricks.size() == thin.bricks.size(), where + ": brick counts differ");
        for (std::size_t i = 0; i < thin.bricks.size(); ++i)
          require(oracle.bricks[i].dim_vector == thin.bricks[i].dim_vector,
                  where + ": dimension vectors differ");
        require(hom_matrix(spec, oracle.bricks) == thin_hom, where + ": Hom matrices differ");
        require(ext_matrix(spec, oracle.bricks) == thin_ext, where + ": Ext matrices differ");
        ++checks;
      }
    }
    return std::to_string(checks) + " base/field pairs agree (A(2), A(3), D(4); F2, F3)";
  }

  std::string criterion7() {
    const FamilySpec f{FamilyKind::A, 3, {1, 1, 1}};
    const auto r = compute_family_fpd(f, {}, kTol);
    std::vector<std::string> names;
    for (const auto& b : r.bricks) names.push_back(b.name);
    require(names == std::vector<std::string>{"(1)", "(2)", "(3)", "(1/2)", "(2/3)"},
            "A(3): unexpected brick list");
    const DimMatrix h{{1, 0, 0, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1},
                      {1, 0, 0, 1, 0}, {0, 1, 0, 1, 1}};
    require(r.hom == h, "A(3): Hom matrix differs from the expected one");
    const std::set<std::pair<std::size_t, std::size_t>> star{{1, 3}, {2, 4}, {3, 0}, {4, 1}};
    std::string stars;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        // Between two non-simple bricks only Hom-orthogonal pairs are fixed.
        const bool linked = i >= 3 && j >= 3 && i != j && r.hom[i][j] + r.hom[j][i] > 0;
        if (star.count({i, j}) || linked) {
          stars += " " + names[i] + "," + names[j] + "=" + std::to_string(r.ext[i][j]);
          continue;
        }
        std::size_t expected = 0;
        if (i == j && i < 3) expected = f.loops[i];
        if (i < 3 && j == i + 1 && j < 3) expected = 1;
        require(r.ext[i][j] == expected, "A(3): Ext entry (" + names[i] + ", " + names[j] +
                                             ") = " + std::to_string(r.ext[i][j]));
      }

    for (const auto& loops : std::vector<std::vector<std::size_t>>{{0, 0}, {1, 1}, {2, 3}}) {
      const FamilySpec q{FamilyKind::Qnm, 0, loops};
      const auto spec = generate_family(q);
      const auto bricks = enumerate_bricks_thin(spec).bricks;
      const auto hom = hom_matrix(spec, bricks);
      // Order: (1), (2), (1/2), (2/1).
      require(bricks.size() == 4 && bricks[2].name == "(1/2)" && bricks[3].name == "(2/1)",
              describe(q) + ": unexpected bricks");
      require(hom[2][3] != 0 && hom[3][2] != 0, describe(q) + ": Hom(M_i, M_j) vanishes");
      require(hom[0][1] == 0 && hom[1][0] == 0, describe(q) + ": Hom between simples");
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t m = 2; m < 4; ++m)
          require(hom[s][m] + hom[m][s] > 0, describe(q) + ": S_i and M_j Hom-orthogonal");
    }
    return "A(3) H matrix and fixed E entries match; reported entries:" + stars +
           "; Q(n,m) Hom facts hold";
  }

  std::string criterion8() {
    std::vector<FamilySpec> specs{
        {FamilyKind::A, 1, {2}},          {FamilyKind::A, 3, {1, 0, 2}},
        {FamilyKind::A, 4, {0, 1, 0, 3}}, {FamilyKind::D, 4, {1, 0, 2, 1}},
        {FamilyKind::D, 5, {0, 1, 0, 0, 2}}, {FamilyKind::E, 6, {1, 0, 0, 2, 0, 1}},
        {FamilyKind::Qnm, 0, {2, 1}},     {FamilyKind::Qnm, 0, {0, 0}},
        {FamilyKind::A3Reversed, 0, {1, 2, 0}}};
    if (!quick()) specs.push_back({FamilyKind::E, 7, {0, 1, 0, 0, 1, 0, 2}});
    std::size_t pairs = 0;
    for (const auto& f : specs) pairs += module_properties(f);

    std::size_t submatrices = 0;
    for (const auto& a : adjacency_) submatrices += monotonicity(a);

    std::size_t opposite_checks = 0;
    for (const auto& f : instances_) {
      if (!full() && opposite_checks >= 12) break;
      const auto spec = generate_family(f);
      const auto forward = compute_fpd(spec, {}, kTol);
      const auto backward = compute_fpd(opposite(spec), {}, kTol);
      require(std::fabs(forward.fpd.value - backward.fpd.value) <= 2 * kTol,
              describe(f) + ": fpd changes under opposite");
      ++opposite_checks;
    }
    require(opposite_checks >= (quick() ? 1u : 10u), "too few opposite-invariance instances");
    return std::to_string(pairs) + " module pairs, " + std::to_string(submatrices) +
           " principal submatrices over " + std::to_string(adjacency_.size()) +
           " adjacency matrices, " + std::to_string(opposite_checks) + " opposite checks";
  }

 private:
  // Hom/Ext identities for simples, projectives, injectives and bricks.
  std::size_t module_properties(const FamilySpec& f) {
    const auto spec = generate_family(f);
    const auto opp = opposite(spec);
    const auto base = strip_loops(spec).base;
    const std::size_t vc = spec.vertex_count();
    std::vector<Representation> modules;
    for (Vertex i = 1; i <= vc; ++i) {
      modules.push_back(simple_rep<Rational>(spec, i));
      modules.push_back(projective_rep<Rational>(spec, i));
      modules.push_back(injective_rep<Rational>(spec, i));
    }
    const auto bricks = enumerate_bricks_thin(spec).bricks;
    for (const auto& b : bricks) modules.push_back(b.rep);

    const std::string where = describe(f);
    for (Vertex i = 1; i <= vc; ++i)
      for (Vertex j = 1; j <= vc; ++j) {
        const auto si = simple_rep<Rational>(spec, i), sj = simple_rep<Rational>(spec, j);
        require(hom_dim(spec, si, sj) == (i == j ? 1u : 0u), where + ": Hom(S_i, S_j)");
        require(ext1_dim(spec, si, sj) == spec.quiver().arrow_count(i, j),
                where + ": Ext(S_i, S_j) != arrow count");
      }

    std::size_t pairs = 0;
    for (Vertex i = 1; i <= vc; ++i) {
      const auto p = projective_rep<Rational>(spec, i);
      const auto syz = syzygy(spec, p);
      for (const auto& m : modules)
        require(ext1_dim(spec, syz, hom_dim(spec, p, m), m) == 0, where + ": Ext(P_i, -) != 0");

      bool sink = true;
      for (const auto& a : base.quiver().arrows()) sink = sink && a.source != i;
      const auto s = simple_rep<Rational>(spec, i);
      const auto lifted = lift_from_base(spec, projective_rep<Rational>(base, i));
      for (const auto& b : bricks) {
        if (hom_dim(spec, p, b.rep) != 0) continue;
        if (sink) require(ext1_dim(spec, s, b.rep) == 0, where + ": sink vanishing fails");
        require(ext1_dim(spec, lifted, b.rep) == 0, where + ": loop-ideal vanishing fails");
      }
    }

    std::vector<Syzygy<Rational>> syz;
    for (const auto& m : modules) syz.push_back(syzygy(spec, m));
    std::vector<Representation> duals;
    std::vector<Syzygy<Rational>> dual_syz;
    for (const auto& m : modules) {
      duals.push_back(dual_transpose(m));
      dual_syz.push_back(syzygy(opp, duals.back()));
    }
    for (std::size_t a = 0; a < modules.size(); ++a)
      for (std::size_t b = 0; b < modules.size(); ++b, ++pairs) {
        const auto lhs =
            ext1_dim(spec, syz[a], hom_dim(spec, modules[a], modules[b]), modules[b]);
        const auto rhs =
            ext1_dim(opp, dual_syz[b], hom_dim(opp, duals[b], duals[a]), duals[a]);
        require(lhs == rhs, where + ": duality fails");
      }
    return pairs;
  }

  std::size_t monotonicity(const IntMatrix& a) {
    const std::size_t n = a.rows();
    const auto full_rho = spectral_radius(a, kTol);
    std::vector<std::vector<std::size_t>> subsets;
    if (n <= 12) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) idx.push_back(i);
        subsets.push_back(std::move(idx));
      }
    } else {
      std::bernoulli_distribution coin(0.5);
      for (int s = 0; s < 256; ++s) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
          if (coin(rng_)) idx.push_back(i);
        if (!idx.empty()) subsets.push_back(std::move(idx));
      }
    }
    for (const auto& idx : subsets) {
      const auto sub = spectral_radius(a.principal(idx), kTol);
      require(sub.value <= full_rho.value + 2 * kTol, "rho monotonicity fails");
    }
    return subsets.size();
  }

  VerifyMode mode_;
  std::mt19937 rng_;
  std::vector<IntMatrix> adjacency_;
  std::vector<FamilySpec> instances_;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 for none
  std::string (Battery::*run)();
};

}  // namespace

std::vector<CriterionResult> run_verification(
    VerifyMode mode, const std::function<void(const CriterionResult&)>& on_result) {
  const std::vector<Criterion> criteria{
      {1, "modified A: fpd = max loops", 10, &Battery::criterion1},
      {2, "modified D: fpd = max loops, 2n bricks", 10, &Battery::criterion2},
      {3, "modified E: fpd = max loops, brick counts", 30, &Battery::criterion3},
      {4, "Q(n,m) closed form", 5, &Battery::criterion4},
      {5, "reversed A(3): fpd and maximal sets", 5, &Battery::criterion5},
      {6, "oracle agrees with thin enumeration", 60, &Battery::criterion6},
      {7, "Hom/Ext matrix check", 0, &Battery::criterion7},
      {8, "property suite", 0, &Battery::criterion8},
  };
  Battery battery(mode);
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    if (c.id == 6 && (mode == VerifyMode::Quick || mode == VerifyMode::Standard)) continue;
    CriterionResult r{c.id, c.title, false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = (battery.*c.run)();
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.message;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && mode != VerifyMode::Quick && c.limit_seconds > 0 &&
        r.seconds > c.limit_seconds) {
      r.passed = false;
      r.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) +
                  " s budget)";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    arr.push_back({{"criterion", r.id},
                   {"title", r.title},
                   {"passed", r.passed},
                   {"detail", r.detail},
                   {"seconds", secs}});
  }
  return arr;
}

std::string render_results(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << " (" << secs
        << " s): " << r.detail << '\n';
  }
  return out.str();
}

}  // namespace fpd
