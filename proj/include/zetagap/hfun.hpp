#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetagap/numerics.hpp"

namespace zetagap {

/// Parameters of the limiting Montgomery-Odlyzko functional.
/// c is the gap length in units of the mean spacing, ell the divisor-function
/// exponent (real here), delta the shortfall in X = T^{1-delta}.
struct HParams {
  double c = 0.0;
  double ell = 1.0;
  double delta = 0.0;
  QuadSpec quad{};
};

enum class GapKind { kLarge, kSmall };  // h+ / h-

struct TableRow {
  int r = 0;
  double ell = 0.0;
  double c = 0.0;
  double h_value = 0.0;
  std::optional<std::string> error;  // set when the row has no certificate
};

/// int_0^1 sin(pi c v (1 - delta)) / (pi v) (1 - v)^{ell^2} dv, to abs_tol.
double sinc_weight_integral(double c, double ell, double delta, const QuadSpec& quad);

/// h+(c) = c - 2 ell * integral, with the O(1/log T) term dropped.
double h_plus(const HParams& p);
/// h-(c) = c + 2 ell * integral.
double h_minus(const HParams& p);

/// Largest c (to 1e-4) above r with h+(c) < r: ascending 1e-2 grid from
/// c = r until h+ reaches r, then bisection on that cell.
double find_large_gap_c(int r, double ell, double delta, const QuadSpec& quad);
/// Smallest c (to 1e-4) below r with h-(c) > r, descending from c = r.
double find_small_gap_c(int r, double ell, double delta, const QuadSpec& quad);

struct TableRequest {
  int r;
  double ell;
};

/// Runs the matching search per row and re-evaluates h at the result. Rows
/// are evaluated concurrently; output order follows the input. Missing
/// certificates are reported on the row.
std::vector<TableRow> build_table(GapKind kind, const std::vector<TableRequest>& rows, double delta,
                                  const QuadSpec& quad);

inline constexpr double kSearchGridStep = 1e-2;
inline constexpr double kSearchResolution = 1e-4;

}  // namespace zetagap
