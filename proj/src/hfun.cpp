#include "zetagap/hfun.hpp"

#include <cmath>
#include <future>
#include <numbers>

#include "zetagap/error.hpp"

namespace zetagap {

namespace {

void validate(double c, double ell, double delta) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("c must be a finite value >= 0");
  if (!(ell >= 1.0) || !std::isfinite(ell)) throw DomainError("ell must be >= 1");
  if (!(delta >= 0.0 && delta < 1.0)) throw DomainError("delta must lie in [0, 1)");
}

}  // namespace

double sinc_weight_integral(double c, double ell, double delta, const QuadSpec& quad) {
  validate(c, ell, delta);
  const double freq = c * (1.0 - delta);
  if (freq == 0.0) return 0.0;
  const double power = ell * ell;
  auto integrand = [freq, power](double v) {
    const double weight = std::pow(1.0 - v, power);
    if (v == 0.0) return freq * weight;
    return std::sin(std::numbers::pi * freq * v) / (std::numbers::pi * v) * weight;
  };
  const auto breaks = periodic_breakpoints(0.0, 1.0, 1.0 / freq);
  return integrate(integrand, 0.0, 1.0, quad, breaks);
}

namespace {

double weighted_integral(const HParams& p) {
  validate(p.c, p.ell, p.delta);
  QuadSpec inner = p.quad;
  inner.abs_tol = p.quad.abs_tol / (2.0 * p.ell);
  return 2.0 * p.ell * sinc_weight_integral(p.c, p.ell, p.delta, inner);
}

}  // namespace

double h_plus(const HParams& p) { return p.c - weighted_integral(p); }

double h_minus(const HParams& p) { return p.c + weighted_integral(p); }

double find_large_gap_c(int r, double ell, double delta, const QuadSpec& quad) {
  if (r < 1) throw DomainError("r must be a positive integer");
  auto h = [&](double c) { return h_plus(HParams{c, ell, delta, quad}); };
  const double target = r;
  const double limit = r + 4.0 * std::sqrt(target);

  if (h(target) >= target) {
    throw NoCertificate("h+(c) >= r already at c = r for r = " + std::to_string(r));
  }
  double below = target;
  double above = 0.0;
  bool crossed = false;
  for (int j = 1;; ++j) {
    const double c = target + j * kSearchGridStep;
    if (c > limit) break;
    if (h(c) >= target) {
      above = c;
      crossed = true;
      break;
    }
    below = c;
  }
  if (!crossed) {
    throw NoCertificate("h+(c) stays below r up to c = r + 4 sqrt(r); no crossing to certify");
  }
  while (above - below > 0.5 * kSearchResolution) {
    const double mid = 0.5 * (below + above);
    (h(mid) < target ? below : above) = mid;
  }
  return below;
}

double find_small_gap_c(int r, double ell, double delta, const QuadSpec& quad) {
  if (r < 1) throw DomainError("r must be a positive integer");
  auto h = [&](double c) { return h_minus(HParams{c, ell, delta, quad}); };
  const double target = r;
  const double limit = std::max(0.0, r - 4.0 * std::sqrt(target));

  if (h(target) <= target) {
    throw NoCertificate("h-(c) <= r already at c = r for r = " + std::to_string(r));
  }
  double above = target;
  double below = 0.0;
  bool crossed = false;
  for (int j = 1;; ++j) {
    const double c = std::max(limit, target - j * kSearchGridStep);
    if (h(c) <= target) {
      below = c;
      crossed = true;
      break;
    }
    above = c;
    if (c == limit) break;
  }
  if (!crossed) {
    throw NoCertificate("h-(c) stays above r down to c = r - 4 sqrt(r); no crossing to certify");
  }
  while (above - below > 0.5 * kSearchResolution) {
    const double mid = 0.5 * (below + above);
    (h(mid) > target ? above : below) = mid;
  }
  return above;
}

std::vector<TableRow> build_table(GapKind kind, const std::vector<TableRequest>& rows, double delta,
                                  const QuadSpec& quad) {
  if (rows.empty()) throw DomainError("build_table needs at least one row");

  auto run_row = [kind, delta, quad](TableRequest req) {
    TableRow row{req.r, req.ell, 0.0, 0.0, std::nullopt};
    try {
      if (kind == GapKind::kLarge) {
        row.c = find_large_gap_c(req.r, req.ell, delta, quad);
        row.h_value = h_plus(HParams{row.c, req.ell, delta, quad});
      } else {
        row.c = find_small_gap_c(req.r, req.ell, delta, quad);
        row.h_value = h_minus(HParams{row.c, req.ell, delta, quad});
      }
    } catch (const NoCertificate& e) {
      row.error = e.what();
    }
    return row;
  };

  std::vector<std::future<TableRow>> pending;
  pending.reserve(rows.size());
  for (const auto& req : rows) pending.push_back(std::async(std::launch::async, run_row, req));
  std::vector<TableRow> out;
  out.reserve(rows.size());
  for (auto& fut : pending) out.push_back(fut.get());
  return out;
}

}  // namespace zetagap
