#include "zetagap/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "zetagap/error.hpp"

namespace zetagap {

void validate(const QuadSpec& spec) {
  if (!(spec.abs_tol > 0.0)) throw DomainError("quadrature abs_tol must be positive");
  if (spec.max_subdivisions < 1) throw DomainError("quadrature max_subdivisions must be >= 1");
}

// ---------------------------------------------------------------------------
// E1
// ---------------------------------------------------------------------------

namespace detail {

double e1_series(double x) {
  // E1(x) = -gamma - ln x - sum_{n>=1} (-x)^n / (n n!)
  double term = 1.0;  // (-x)^n / n!
  double sum = 0.0;
  for (int n = 1; n < 500; ++n) {
    term *= -x / n;
    const double add = term / n;
    sum += add;
    if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return -std::numbers::egamma - std::log(x) - sum;
}

double e1_continued_fraction(double x) {
  // Modified Lentz evaluation of e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

}  // namespace detail

double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw DomainError("E1(x) requires x > 0, got " + std::to_string(x));
  if (std::isinf(x)) return 0.0;
  return x <= 1.0 ? detail::e1_series(x) : detail::e1_continued_fraction(x);
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;
  }
};

double checked(const RealFn& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw DomainError("integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

Panel gauss_kronrod(const RealFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

std::vector<double> periodic_breakpoints(double lo, double hi, double spacing) {
  std::vector<double> out;
  if (!(spacing > 0.0) || !(hi > lo)) return out;
  const double first = std::floor(lo / spacing) + 1.0;
  for (double j = first;; j += 1.0) {
    const double x = j * spacing;
    if (x >= hi) break;
    if (x > lo) out.push_back(x);
  }
  return out;
}

double integrate(const RealFn& f, double a, double b, const QuadSpec& spec,
                 std::span<const double> breakpoints) {
  validate(spec);
  if (!(a < b)) throw DomainError("integrate requires a < b");

  std::vector<double> edges{a};
  for (double x : breakpoints) {
    if (x > a && x < b) edges.push_back(x);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = gauss_kronrod(f, edges[i], edges[i + 1]);
    total_error += p.error;
    heap.push(p);
  }

  auto sum_values = [&heap]() {
    // Collect and sum in ascending position for a schedule-independent result.
    auto copy = heap;
    std::vector<Panel> panels;
    panels.reserve(copy.size());
    while (!copy.empty()) {
      panels.push_back(copy.top());
      copy.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    double sum = 0.0;
    double comp = 0.0;
    double err = 0.0;
    for (const Panel& p : panels) {
      const double t = sum + p.value;
      comp += std::abs(sum) >= std::abs(p.value) ? (sum - t) + p.value : (p.value - t) + sum;
      sum = t;
      err += p.error;
    }
    return std::pair{sum + comp, err};
  };

  int splits = 0;
  while (total_error > spec.abs_tol) {
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (splits >= spec.max_subdivisions || !(mid > worst.a && mid < worst.b)) {
      const auto [value, err] = sum_values();
      throw ToleranceNotMet(value, err);
    }
    heap.pop();
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
    if (total_error <= spec.abs_tol) {
      // Running sums drift; confirm against a fresh total before stopping.
      total_error = sum_values().second;
    }
  }
  return sum_values().first;
}

double integrate_semi_infinite(const RealFn& f, double a, const QuadSpec& spec, double decay_rate,
                               double oscillation_spacing) {
  validate(spec);
  if (!(decay_rate > 0.0)) throw DomainError("decay_rate must be positive");

  double envelope = 0.0;
  for (int i = 0; i <= 16; ++i) {
    const double w = a + 0.25 * i / decay_rate;
    envelope = std::max(envelope, std::abs(checked(f, w)) * std::exp(decay_rate * (w - a)));
  }
  double cutoff = a + 4.0 / decay_rate;
  if (envelope > 0.0) {
    const double span = std::log(2.0 * envelope / (spec.abs_tol * decay_rate)) / decay_rate;
    cutoff = a + std::max(span, 1.0 / decay_rate);
  }

  QuadSpec inner = spec;
  inner.abs_tol = 0.5 * spec.abs_tol;
  const auto breaks = periodic_breakpoints(a, cutoff, oscillation_spacing);
  return integrate(f, a, cutoff, inner, breaks);
}

// ---------------------------------------------------------------------------
// Golden section
// ---------------------------------------------------------------------------

OptResult golden_max(const RealFn& f, double lo, double hi, double x_tol) {
  if (!(lo < hi)) throw DomainError("golden_max requires lo < hi");
  if (!(x_tol > 0.0)) throw DomainError("golden_max requires x_tol > 0");

  constexpr int kScan = 65;
  const double step = (hi - lo) / (kScan - 1);
  int best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScan; ++i) {
    const double x = i == kScan - 1 ? hi : lo + i * step;
    const double y = f(x);
    if (y > best_val) {
      best_val = y;
      best = i;
    }
  }

  OptResult result;
  result.boundary_warning = best == 0 || best == kScan - 1;
  double a = best == 0 ? lo : lo + (best - 1) * step;
  double b = best == kScan - 1 ? hi : lo + (best + 1) * step;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 500 && (b - a) > x_tol; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }

  double arg = f1 >= f2 ? x1 : x2;
  arg = std::clamp(arg, a, b);
  result.arg_star = arg;
  result.val_star = f(arg);
  result.bracket = {a, b};
  return result;
}

}  // namespace zetagap
