#include "fpd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fpd/error.hpp"

namespace fpd {

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Integer d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) throw std::invalid_argument("QuadraticSurd: negative radicand");
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 0) b_ = 0;
  if (b_ == 0) {
    d_ = 1;
    return;
  }
  for (Integer p = 2; p * p <= d_; ++p) {
    const Integer sq = p * p;
    while (d_ % sq == 0) {
      d_ /= sq;
      b_ *= p;
    }
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

long double QuadraticSurd::to_long_double() const {
  const long double a = static_cast<long double>(a_.get_d());
  if (b_ == 0) return a;
  return a + static_cast<long double>(b_.get_d()) * std::sqrt(static_cast<long double>(d_.get_d()));
}

std::string QuadraticSurd::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string surd = "sqrt(" + d_.get_str() + ")";
  Rational coeff = abs(b_);
  if (coeff != 1) surd = coeff.get_str() + "*" + surd;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + surd;
  return a_.get_str() + (b_ < 0 ? " - " : " + ") + surd;
}

namespace {

std::vector<std::vector<std::size_t>> strongly_connected(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v || m(v, w) == 0) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return out;
}

// Perron root of [[p, q], [r, s]]: (p + s)/2 + sqrt((p - s)^2 + 4qr)/2.
QuadraticSurd two_by_two(long p, long q, long r, long s) {
  const Integer disc = Integer(p - s) * Integer(p - s) + 4 * Integer(q) * Integer(r);
  return QuadraticSurd(Rational(Integer(p + s), Integer(2)), Rational(1, 2), disc);
}

SpectralRadius power_iteration(const IntMatrix& m, long double tol) {
  const std::size_t n = m.rows();
  std::vector<long double> x(n, 1.0L), y(n);
  constexpr int kMaxIterations = 1'000'000;
  long double lower = 0, upper = 0;
  for (int it = 0; it < kMaxIterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      long double s = x[i];
      for (std::size_t j = 0; j < n; ++j) s += static_cast<long double>(m(i, j)) * x[j];
      y[i] = s;
    }
    lower = upper = y[0] / x[0];
    long double top = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const long double ratio = y[i] / x[i];
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
      top = std::max(top, y[i]);
    }
    if (upper - lower <= tol) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
  }
  if (upper - lower > tol) throw std::runtime_error("spectral radius iteration did not converge");
  return {(lower + upper) / 2 - 1, (upper - lower) / 2, std::nullopt};
}

}  // namespace

SpectralRadius spectral_radius(const IntMatrix& m, long double tol) {
  if (!m.is_square()) throw ValidationError("spectral radius needs a square matrix");
  if (!(tol > 0)) throw ValidationError("tolerance must be positive");
  for (auto x : m.data())
    if (x < 0) throw ValidationError("spectral radius needs a nonnegative matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {0, 0, QuadraticSurd()};

  SpectralRadius best{-1, 0, std::nullopt};
  long double inexact_upper = -1;
  for (const auto& comp : strongly_connected(m)) {
    SpectralRadius r;
    if (comp.size() == 1) {
      const long d = static_cast<long>(m(comp[0], comp[0]));
      r = {static_cast<long double>(d), 0, QuadraticSurd(Rational(d))};
    } else if (comp.size() == 2) {
      const auto a = comp[0], b = comp[1];
      const auto s = two_by_two(static_cast<long>(m(a, a)), static_cast<long>(m(a, b)),
                                static_cast<long>(m(b, a)), static_cast<long>(m(b, b)));
      r = {s.to_long_double(), 0, s};
    } else {
      r = power_iteration(m.principal(comp), tol);
      inexact_upper = std::max(inexact_upper, r.value + r.bound);
    }
    if (r.value > best.value) best = r;
  }
  if (best.exact && inexact_upper >= best.value) {
    // An iterated block could still reach the exact one.
    best.bound = std::max(best.bound, inexact_upper - best.value);
    best.exact.reset();
  }

  long long max_diag = 0, max_row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long long row = 0;
    for (std::size_t j = 0; j < n; ++j) row += m(i, j);
    max_diag = std::max(max_diag, m(i, i));
    max_row = std::max(max_row, row);
  }
  const long double slack = best.bound + tol;
  if (best.value + slack < max_diag || best.value - slack > max_row)
    throw std::logic_error("spectral radius outside Perron-Frobenius bounds");
  return best;
}

}  // namespace fpd
