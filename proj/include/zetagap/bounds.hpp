#pragma once

#include <utility>
#include <vector>

namespace zetagap {

enum class BoundMode {
  kAsPrinted,       // displayed formulas verbatim (two-piece large gap, one-piece small gap)
  kRigorousKPiece,  // equal k-piece chord scheme
};

struct BoundScheme {
  int k = 2;
  BoundMode mode = BoundMode::kAsPrinted;
};

struct ThetaResult {
  double b_star = 0.0;
  double theta = 0.0;
  BoundScheme scheme{};
  std::pair<double, double> bracket{0.0, 0.0};
  bool boundary_warning = false;
  // False when a small-gap constant breaks the vartheta <= 0.5 requirement.
  bool valid = true;
};

/// Chord slopes for k equal pieces of [0, 1/2]:
/// s_j = 2k (sin(pi j / 2k) - sin(pi (j - 1) / 2k)), j = 1..k.
/// On piece j, s_j x <= sin(pi x) because sin(pi x)/x is decreasing and
/// s_j does not exceed the mean increment over the first j pieces.
std::vector<double> chord_slopes(int k);

/// Large-gap objective in b > 1 (tail integral from b - 1).
double theta_objective(double b, const BoundScheme& scheme);
/// Small-gap objective in b > 2 (tail integral from b - 2).
double vartheta_objective(double b, const BoundScheme& scheme);

inline constexpr double kOptimizeTolerance = 1e-9;
inline constexpr double kVarthetaCeiling = 0.5;

ThetaResult optimize_theta(const BoundScheme& scheme, std::pair<double, double> bracket);
ThetaResult optimize_vartheta(const BoundScheme& scheme, std::pair<double, double> bracket);

/// Closed-form upper bound for h+(c) from the chord minorant on [0, 1/(2c)]
/// and the E1 tail over [1/c, 1], before substituting ell^2 = b c - 1.
double certified_h_plus_upper(double c, double ell, double delta, const BoundScheme& scheme);

}  // namespace zetagap
