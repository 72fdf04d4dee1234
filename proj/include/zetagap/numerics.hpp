#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace zetagap {

struct QuadSpec {
  double abs_tol = 1e-9;
  // Bisections allowed beyond the initial panels.
  int max_subdivisions = 10000;
};

void validate(const QuadSpec& spec);

struct OptResult {
  double arg_star = 0.0;
  double val_star = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  // Set when the coarse pre-scan put the maximum on an end of the search range.
  bool boundary_warning = false;
};

using RealFn = std::function<double(double)>;

/// Exponential integral E1(x) = int_x^inf e^{-u}/u du for x > 0.
/// Power series on (0, 1], continued fraction above.
double exp_integral_e1(double x);

namespace detail {
double e1_series(double x);
double e1_continued_fraction(double x);
}  // namespace detail

/// Adaptive Gauss-Kronrod (7/15) quadrature on [a, b]. The global error
/// estimate sum |K15 - G7| over all panels is driven below spec.abs_tol.
/// Interior breakpoints seed the initial panels; use them for the zeros of
/// oscillatory factors so each panel stays single-signed.
/// Throws ToleranceNotMet carrying the best estimate when the subdivision
/// budget runs out.
double integrate(const RealFn& f, double a, double b, const QuadSpec& spec,
                 std::span<const double> breakpoints = {});

/// Points lo < j*spacing < hi for integer j, in ascending order.
std::vector<double> periodic_breakpoints(double lo, double hi, double spacing);

/// int_a^inf f for |f(w)| <= C exp(-decay_rate (w - a)). C is estimated from
/// samples of |f| near a; the truncation point is placed so the dropped tail
/// is below abs_tol / 2, the other half of the budget goes to quadrature.
/// A positive oscillation_spacing adds breakpoints at its multiples.
double integrate_semi_infinite(const RealFn& f, double a, const QuadSpec& spec, double decay_rate,
                               double oscillation_spacing = 0.0);

/// Golden-section maximization on [lo, hi]. A 65-point pre-scan picks the
/// best cell and flags maxima sitting on an end of the range; the golden
/// search then runs inside the neighbouring cells until the bracket is
/// narrower than x_tol.
OptResult golden_max(const RealFn& f, double lo, double hi, double x_tol);

}  // namespace zetagap
