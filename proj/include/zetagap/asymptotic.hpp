#pragma once

#include <utility>

#include "zetagap/numerics.hpp"

namespace zetagap {

/// Large-r regime with ell = B sqrt(r) and the substitution w = r v.
struct AsympParams {
  double B = 1.0;
  double r = 1.0;
  double delta = 0.0;
};

/// (2B/pi) arctan(pi / B^2), evaluated in closed form.
double asymptotic_objective(double B);

/// int_0^inf sin(pi w (1 - delta)) / (pi w) e^{-B^2 w} dw = arctan(pi (1 - delta) / B^2) / pi.
double asymptotic_integral_closed(double B, double delta);

/// The same integral by quadrature; cross-check for the closed form.
double asymptotic_integral(double B, double delta, const QuadSpec& quad);

/// E(r) = int_r^inf sin(pi w (1 - delta)) / (pi w) e^{-B^2 w} dw. The factor
/// e^{-B^2 r} is pulled out before quadrature, so abs_tol applies to E(r) e^{B^2 r}.
double tail_E(double r, double B, double delta, const QuadSpec& quad);

OptResult optimize_B(std::pair<double, double> bracket);

/// Upper bound c_r - 2 B sqrt(r) int_0^r sin(pi w (1-delta))/(pi w) e^{-B^2 w} dw
/// at c_r = r + theta sqrt(r).
double h_plus_large_r(const AsympParams& p, double theta, const QuadSpec& quad);

/// Small-gap mirror: ell = B sqrt(m) with m = r - sqrt(r), c_r = r - vartheta sqrt(r),
/// value c_r + 2 B sqrt(m) int_0^m (...) e^{-B^2 w} dw. Requires vartheta < 1.
double h_minus_large_r(const AsympParams& p, double vartheta, const QuadSpec& quad);

/// Diagnostic: int_0^r sin(pi w (1-delta))/(pi w) [e^{-B^2 w} - (1 - w/r)^{B^2 r}] dw,
/// the amount by which the exponential replacement overstates the finite-r integral.
double finite_r_correction(const AsympParams& p, const QuadSpec& quad);

/// Smallest r = 2^j (j = 0..60) at which both 2B sqrt(r)|E(r)| and
/// 2B sqrt(r)|finite_r_correction| drop below tol.
double negligible_correction_r(double B, double delta, double tol, const QuadSpec& quad);

}  // namespace zetagap
