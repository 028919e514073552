#pragma once

#include <optional>
#include <string>

#include "fpd/matrix.hpp"
#include "fpd/rational.hpp"

namespace fpd {

/// a + b*sqrt(d) with d squarefree; d == 1 and b == 0 for rational values.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational a, Rational b = 0, Integer d = 1);  // NOLINT

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  long double to_long_double() const;
  /// "3", "1/2", "2 + sqrt(5)", "3/2 + 1/2*sqrt(5)".
  std::string to_string() const;

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  Integer d_ = 1;
};

struct SpectralRadius {
  long double value = 0;
  long double bound = 0;  // |rho - value| <= bound
  std::optional<QuadraticSurd> exact;
};

/// Perron root of a square nonnegative integer matrix. The matrix is split
/// into strongly connected blocks; blocks of size 1 and 2 are solved exactly,
/// larger ones by power iteration on (block + I) with Collatz-Wielandt bounds
/// until upper - lower <= tol. Throws ValidationError on a negative entry, a
/// non-square matrix, or tol <= 0.
SpectralRadius spectral_radius(const IntMatrix& m, long double tol = 1e-10L);

}  // namespace fpd
