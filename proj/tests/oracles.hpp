#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_100;

// E1(x) = -gamma - ln x - sum (-x)^n / (n n!), summed in 100-digit arithmetic
// so the alternating series stays accurate up to x ~ 60.
inline Big e1_series_big(const Big& x) {
  const Big euler("0.57721566490153286060651209008240243104215933593992359880576723488486772677766467");
  Big term = 1;
  Big sum = 0;
  const Big eps("1e-90");
  for (int n = 1; n < 5000; ++n) {
    term *= -x / n;
    const Big add = term / n;
    sum += add;
    if (abs(add) < eps) break;
  }
  return -euler - log(x) - sum;
}

inline double e1(double x) { return static_cast<double>(e1_series_big(Big(x))); }

inline Big pi_big() { return boost::math::constants::pi<Big>(); }

// Large-gap display at b, two-piece chords.
inline double theta_display(double bd) {
  const Big b(bd);
  const Big s2 = sqrt(Big(2));
  const Big chords = s2 - (2 * s2 - 2) * exp(-b / 4) - (2 - s2) * exp(-b / 2);
  const Big val = 2 * sqrt(b) * sqrt(1 - 1 / b) *
                  (2 / (pi_big() * b) * chords - e1_series_big(b - 1) / pi_big());
  return static_cast<double>(val);
}

// Small-gap display at b as parenthesized to reproduce the printed constant.
inline double vartheta_display(double bd) {
  const Big b(bd);
  const Big val = 2 * sqrt(b) * sqrt(Big(0.5) - 1 / b) *
                  (2 / (pi_big() * b) * (1 - exp(-b)) - e1_series_big(b - 2) / pi_big());
  return static_cast<double>(val);
}

// Equal k-piece chord bound, written out piece by piece: on piece j the slope
// is the j-th increment of sin(pi x) over the grid j/(2k), scaled by 2k.
inline double k_piece_bracket(int k, double b) {
  const double pi = std::acos(-1.0);
  double total = 0.0;
  for (int j = 1; j <= k; ++j) {
    const double slope = 2.0 * k * (std::sin(pi * j / (2.0 * k)) - std::sin(pi * (j - 1) / (2.0 * k)));
    // piece j contributes slope * (P_{j-1} - P_j) with P_j = e^{-b j / (2k)}
    total += slope * (std::exp(-b * (j - 1) / (2.0 * k)) - std::exp(-b * j / (2.0 * k)));
  }
  return 0.5 * total;
}

inline double theta_k_piece(double b, int k) {
  const double pi = std::acos(-1.0);
  return 2.0 * std::sqrt(b - 1.0) * (2.0 / (pi * b) * k_piece_bracket(k, b) - e1(b - 1.0) / pi);
}

inline double vartheta_k_piece(double b, int k) {
  const double pi = std::acos(-1.0);
  return 2.0 * std::sqrt(b) * std::sqrt(0.5 - 1.0 / b) *
         (2.0 / (pi * b) * k_piece_bracket(k, b) - e1(b - 2.0) / pi);
}

struct GridMax {
  double arg;
  double val;
};

inline GridMax dense_grid_max(const std::function<double(double)>& f, double lo, double hi,
                              int points) {
  GridMax best{lo, f(lo)};
  for (int i = 1; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    const double y = f(x);
    if (y > best.val) best = {x, y};
  }
  return best;
}

// Composite Simpson on n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

inline std::uint64_t prime_count(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::uint64_t count = 0;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    ++count;
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return count;
}

inline std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t d = 0;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i == 0) d += (i * i == n) ? 1 : 2;
  }
  return d;
}

// Prime factorization by trial division.
inline std::map<std::uint64_t, int> factor(std::uint64_t n) {
  std::map<std::uint64_t, int> f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

inline double binom(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline double d_ell(std::uint64_t n, int ell) {
  double r = 1;
  for (auto [p, m] : factor(n)) r *= binom(m + ell - 1, m);
  return r;
}

inline int liouville(std::uint64_t n) {
  int omega = 0;
  for (auto [p, m] : factor(n)) omega += m;
  return omega % 2 ? -1 : 1;
}

inline double von_mangoldt(std::uint64_t k) {
  const auto f = factor(k);
  return f.size() == 1 ? std::log(static_cast<double>(f.begin()->first)) : 0.0;
}

// Plain double loop over all (k, n) with kn <= X; no sieve.
inline double h_discrete(std::uint64_t X, double logT, int ell, bool minus, double c) {
  const double pi = std::acos(-1.0);
  auto a = [&](std::uint64_t n) { return d_ell(n, ell) * (minus ? liouville(n) : 1); };
  long double num = 0;
  long double den = 0;
  for (std::uint64_t n = 1; n <= X; ++n) den += a(n) * a(n) / n;
  for (std::uint64_t k = 2; k <= X; ++k) {
    const double lam = von_mangoldt(k);
    if (lam == 0.0) continue;
    const double g = 2 * std::sin(pi * c * std::log(double(k)) / logT) / (pi * std::log(double(k)));
    for (std::uint64_t n = 1; k * n <= X; ++n) num += a(n) * a(k * n) * g * lam / double(k * n);
  }
  return c - static_cast<double>(num / den);
}

}  // namespace oracle
