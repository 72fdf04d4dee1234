#include "zetagap/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zetagap/error.hpp"

namespace zetagap {

using std::numbers::pi;

namespace {

void check_B(double B) {
  if (!(B > 0.0) || !std::isfinite(B)) throw DomainError("B must be positive");
}

void check_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("delta must lie in [0, 1]");
}

void check(const AsympParams& p) {
  check_B(p.B);
  check_delta(p.delta);
  if (!(p.r >= 1.0)) throw DomainError("r must be >= 1");
}

// Integral over [0, upper] via the closed form minus the tail, as the
// estimate chain itself is written.
double head_integral(double upper, double B, double delta, const QuadSpec& quad) {
  return asymptotic_integral_closed(B, delta) - tail_E(upper, B, delta, quad);
}

}  // namespace

double asymptotic_objective(double B) {
  check_B(B);
  return 2.0 * B / pi * std::atan(pi / (B * B));
}

double asymptotic_integral_closed(double B, double delta) {
  check_B(B);
  check_delta(delta);
  return std::atan(pi * (1.0 - delta) / (B * B)) / pi;
}

double asymptotic_integral(double B, double delta, const QuadSpec& quad) {
  check_B(B);
  check_delta(delta);
  const double freq = 1.0 - delta;
  if (freq == 0.0) return 0.0;
  const double decay = B * B;
  auto integrand = [freq, decay](double w) {
    if (w == 0.0) return freq;
    return std::sin(pi * freq * w) / (pi * w) * std::exp(-decay * w);
  };
  return integrate_semi_infinite(integrand, 0.0, quad, decay, 1.0 / freq);
}

double tail_E(double r, double B, double delta, const QuadSpec& quad) {
  check_B(B);
  check_delta(delta);
  if (!(r > 0.0)) throw DomainError("tail start must be positive");
  const double freq = 1.0 - delta;
  if (freq == 0.0) return 0.0;
  const double decay = B * B;
  // e^{-B^2 r} * int_0^inf sin(pi freq (r + u)) / (pi (r + u)) e^{-B^2 u} du
  auto scaled = [=](double u) {
    const double w = r + u;
    return std::sin(pi * freq * w) / (pi * w) * std::exp(-decay * u);
  };
  // Zeros of the sine sit at u = j/freq - r; split at the first one so the
  // remaining breakpoint grid lines up with them.
  const double spacing = 1.0 / freq;
  const double phase = std::fmod(r, spacing);
  double inner = 0.0;
  if (phase == 0.0) {
    inner = integrate_semi_infinite(scaled, 0.0, quad, decay, spacing);
  } else {
    const double offset = spacing - phase;
    QuadSpec half = quad;
    half.abs_tol = 0.5 * quad.abs_tol;
    inner = integrate(scaled, 0.0, offset, half) +
            integrate_semi_infinite([&](double t) { return scaled(offset + t); }, 0.0, half, decay,
                                    spacing);
  }
  return std::exp(-decay * r) * inner;
}

OptResult optimize_B(std::pair<double, double> bracket) {
  if (!(bracket.first > 0.0)) throw DomainError("B bracket must lie in (0, inf)");
  if (!(bracket.first < bracket.second)) throw DomainError("bracket must satisfy lo < hi");
  return golden_max(asymptotic_objective, bracket.first, bracket.second, 1e-9);
}

double h_plus_large_r(const AsympParams& p, double theta, const QuadSpec& quad) {
  check(p);
  const double root = std::sqrt(p.r);
  const double c = p.r + theta * root;
  return c - 2.0 * p.B * root * head_integral(p.r, p.B, p.delta, quad);
}

double h_minus_large_r(const AsympParams& p, double vartheta, const QuadSpec& quad) {
  check(p);
  if (!(vartheta < 1.0)) throw DomainError("small-gap large-r bound requires vartheta < 1");
  const double root = std::sqrt(p.r);
  const double m = p.r - root;
  const double c = p.r - vartheta * root;
  if (m <= 0.0) return c;
  return c + 2.0 * p.B * std::sqrt(m) * head_integral(m, p.B, p.delta, quad);
}

double finite_r_correction(const AsympParams& p, const QuadSpec& quad) {
  check(p);
  const double freq = 1.0 - p.delta;
  if (freq == 0.0) return 0.0;
  const double power = p.B * p.B * p.r;
  const double decay = p.B * p.B;
  const double r = p.r;
  auto integrand = [=](double w) {
    const double gap = std::exp(-decay * w) - std::pow(1.0 - w / r, power);
    if (w == 0.0) return 0.0;
    return std::sin(pi * freq * w) / (pi * w) * gap;
  };
  // Both terms sit under e^{-B^2 w}; past `upper` the rest is below abs_tol e^{-5}.
  const double upper = std::min(r, 1.0 + (std::log(1.0 / quad.abs_tol) + 5.0) / decay);
  return integrate(integrand, 0.0, upper, quad, periodic_breakpoints(0.0, upper, 1.0 / freq));
}

double negligible_correction_r(double B, double delta, double tol, const QuadSpec& quad) {
  check_B(B);
  check_delta(delta);
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  for (int j = 0; j <= 60; ++j) {
    const double r = std::ldexp(1.0, j);
    const double scale = 2.0 * B * std::sqrt(r);
    const AsympParams p{B, r, delta};
    if (scale * std::abs(tail_E(r, B, delta, quad)) < tol &&
        scale * std::abs(finite_r_correction(p, quad)) < tol) {
      return r;
    }
  }
  throw RangeError("corrections stay above tolerance up to r = 2^60");
}

}  // namespace zetagap
