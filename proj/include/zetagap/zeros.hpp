#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace zetagap {

/// Ascending ordinates gamma_1 <= gamma_2 <= ... Indices in this module are 1-based.
struct ZeroTable {
  std::vector<double> ordinates;
  std::vector<std::size_t> lines;  // source line of each ordinate
  std::string source;

  std::size_t size() const noexcept { return ordinates.size(); }
  double gamma(std::size_t n) const { return ordinates.at(n - 1); }
};

inline constexpr double kDefaultTheta = 0.574271;
inline constexpr double kDefaultVartheta = 0.299856;

struct GapReport {
  int r = 1;
  double max_norm = 0.0;
  std::size_t argmax = 0;
  double min_norm = 0.0;
  std::size_t argmin = 0;
  std::size_t count_above = 0;  // normalized gap > 1 + theta / sqrt(r)
  std::size_t count_below = 0;  // normalized gap < 1 - vartheta / sqrt(r)
  double theta_used = kDefaultTheta;
  double vartheta_used = kDefaultVartheta;
  std::size_t n_gaps = 0;

  bool operator==(const GapReport&) const = default;
};

struct CountingCheck {
  double T = 0.0;
  std::size_t empirical = 0;
  double main_term = 0.0;     // (T / 2pi) log T
  double refined_term = 0.0;  // (T / 2pi) log(T / 2pi) - T / 2pi
};

/// Text format: one decimal ordinate per line; lines starting with '#' and
/// blank lines are skipped. Values must be positive and nondecreasing.
ZeroTable load_zeros(std::istream& in, std::string source = "stream");
ZeroTable load_zeros_file(const std::string& path);

/// (gamma_{n+r} - gamma_n) log(gamma_n) / (2 pi r).
double normalized_gap(const ZeroTable& t, std::size_t n, int r);

GapReport gap_report(const ZeroTable& t, int r, double theta = kDefaultTheta,
                     double vartheta = kDefaultVartheta);

CountingCheck counting_check(const ZeroTable& t, double T);

}  // namespace zetagap
