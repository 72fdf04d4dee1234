#include "zetagap/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zetagap/error.hpp"
#include "zetagap/numerics.hpp"

namespace zetagap {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

void validate(const BoundScheme& scheme) {
  if (scheme.k < 1) throw InvalidScheme("piece count k must be >= 1");
}

// s_1 - sum_{j<k} (s_j - s_{j+1}) e^{-rate j / k} - s_k e^{-rate}, halved.
// `rate` is the exponent reached at the end of [0, 1/(2c)]: b/2 after
// substituting ell^2 + 1 = b c.
double chord_bracket(int k, double rate) {
  const auto s = chord_slopes(k);
  double acc = s.front();
  for (int j = 1; j < k; ++j) {
    acc -= (s[j - 1] - s[j]) * std::exp(-rate * j / k);
  }
  acc -= s.back() * std::exp(-rate);
  return 0.5 * acc;
}

}  // namespace

std::vector<double> chord_slopes(int k) {
  if (k < 1) throw InvalidScheme("piece count k must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    out[j - 1] = 2.0 * k * (std::sin(pi * j / (2.0 * k)) - std::sin(pi * (j - 1) / (2.0 * k)));
  }
  return out;
}

double theta_objective(double b, const BoundScheme& scheme) {
  validate(scheme);
  if (!(b > 1.0)) throw DomainError("theta objective requires b > 1");
  const double tail = exp_integral_e1(b - 1.0) / pi;
  if (scheme.mode == BoundMode::kAsPrinted) {
    if (scheme.k != 2) throw InvalidScheme("as-printed large-gap bound is the two-piece scheme");
    const double chords =
        sqrt2 - (2.0 * sqrt2 - 2.0) * std::exp(-b / 4.0) - (2.0 - sqrt2) * std::exp(-b / 2.0);
    return 2.0 * std::sqrt(b) * std::sqrt(1.0 - 1.0 / b) * (2.0 / (pi * b) * chords - tail);
  }
  return 2.0 * std::sqrt(b - 1.0) * (2.0 / (pi * b) * chord_bracket(scheme.k, b / 2.0) - tail);
}

double vartheta_objective(double b, const BoundScheme& scheme) {
  validate(scheme);
  if (!(b > 2.0)) throw DomainError("vartheta objective requires b > 2");
  const double prefactor = 2.0 * std::sqrt(b) * std::sqrt(0.5 - 1.0 / b);
  const double tail = exp_integral_e1(b - 2.0) / pi;
  if (scheme.mode == BoundMode::kAsPrinted) {
    if (scheme.k != 1) throw InvalidScheme("as-printed small-gap bound is the one-piece scheme");
    // Exponent e^{-b} kept as displayed; the rigorous one-piece scheme gives e^{-b/2}.
    return prefactor * (2.0 / (pi * b) * (1.0 - std::exp(-b)) - tail);
  }
  return prefactor * (2.0 / (pi * b) * chord_bracket(scheme.k, b / 2.0) - tail);
}

namespace {

ThetaResult optimize(double (*objective)(double, const BoundScheme&), const BoundScheme& scheme,
                     std::pair<double, double> bracket, double domain_floor) {
  validate(scheme);
  if (!(bracket.first > domain_floor)) {
    throw DomainError("bracket must lie above b = " + std::to_string(domain_floor));
  }
  if (!(bracket.first < bracket.second)) throw DomainError("bracket must satisfy lo < hi");
  const auto opt = golden_max([&](double b) { return objective(b, scheme); }, bracket.first,
                              bracket.second, kOptimizeTolerance);
  ThetaResult out;
  out.b_star = opt.arg_star;
  out.theta = opt.val_star;
  out.scheme = scheme;
  out.bracket = opt.bracket;
  out.boundary_warning = opt.boundary_warning;
  return out;
}

}  // namespace

ThetaResult optimize_theta(const BoundScheme& scheme, std::pair<double, double> bracket) {
  return optimize(&theta_objective, scheme, bracket, 1.0);
}

ThetaResult optimize_vartheta(const BoundScheme& scheme, std::pair<double, double> bracket) {
  auto out = optimize(&vartheta_objective, scheme, bracket, 2.0);
  out.valid = out.theta <= kVarthetaCeiling;
  return out;
}

double certified_h_plus_upper(double c, double ell, double delta, const BoundScheme& scheme) {
  validate(scheme);
  if (!(c > 0.0)) throw DomainError("certified bound requires c > 0");
  if (!(ell >= 1.0)) throw DomainError("certified bound requires ell >= 1");
  if (!(delta >= 0.0 && delta < 1.0)) throw DomainError("delta must lie in [0, 1)");
  if (scheme.mode == BoundMode::kAsPrinted && scheme.k != 2) {
    throw InvalidScheme("as-printed large-gap bound is the two-piece scheme");
  }
  const double power = ell * ell + 1.0;
  // I1 >= c(1 - delta)/(pi (ell^2 + 1)) * 2 * chord_bracket(k, (ell^2 + 1)/(2c))
  const double chords = 2.0 * c * (1.0 - delta) / (pi * power) *
                        chord_bracket(scheme.k, power / (2.0 * c));
  const double tail = exp_integral_e1(ell * ell / c) / pi;
  return c - 2.0 * ell * (chords - tail);
}

}  // namespace zetagap
