#include "zetagap/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string_view>

#include "zetagap/error.hpp"

namespace zetagap {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

ZeroTable load_zeros(std::istream& in, std::string source) {
  ZeroTable table;
  table.source = std::move(source);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    double value = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    if (*begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
      throw InputError(ErrorCode::kParse, line, "not a decimal number: '" + std::string(text) + "'");
    }
    if (!(value > 0.0)) {
      throw InputError(ErrorCode::kDomain, line, "ordinates must be positive");
    }
    if (!table.ordinates.empty() && value < table.ordinates.back()) {
      throw InputError(ErrorCode::kMonotonicity, line,
                       "ordinate decreases (previous value on line " +
                           std::to_string(table.lines.back()) + ")");
    }
    table.ordinates.push_back(value);
    table.lines.push_back(line);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failure on " + table.source);
  if (table.ordinates.empty()) throw Error(ErrorCode::kEmptyTable, "no ordinates in " + table.source);
  return table;
}

ZeroTable load_zeros_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return load_zeros(in, path);
}

double normalized_gap(const ZeroTable& t, std::size_t n, int r) {
  if (r < 1) throw DomainError("r must be a positive integer");
  if (n < 1 || n + static_cast<std::size_t>(r) > t.size()) {
    throw RangeError("gap index " + std::to_string(n) + " with r = " + std::to_string(r) +
                     " is outside a table of " + std::to_string(t.size()));
  }
  const double lo = t.gamma(n);
  if (!(lo > 1.0)) throw DomainError("normalization needs gamma_n > 1");
  return (t.gamma(n + r) - lo) * std::log(lo) / (2.0 * std::numbers::pi * r);
}

GapReport gap_report(const ZeroTable& t, int r, double theta, double vartheta) {
  if (r < 1) throw DomainError("r must be a positive integer");
  if (t.size() < static_cast<std::size_t>(r) + 1) {
    throw RangeError("table of " + std::to_string(t.size()) + " ordinates has no " +
                     std::to_string(r) + "-gaps");
  }
  GapReport rep;
  rep.r = r;
  rep.theta_used = theta;
  rep.vartheta_used = vartheta;
  rep.n_gaps = t.size() - static_cast<std::size_t>(r);

  const double root = std::sqrt(static_cast<double>(r));
  const double upper = 1.0 + theta / root;
  const double lower = 1.0 - vartheta / root;
  for (std::size_t n = 1; n <= rep.n_gaps; ++n) {
    const double g = normalized_gap(t, n, r);
    if (n == 1 || g > rep.max_norm) {
      rep.max_norm = g;
      rep.argmax = n;
    }
    if (n == 1 || g < rep.min_norm) {
      rep.min_norm = g;
      rep.argmin = n;
    }
    if (g > upper) ++rep.count_above;
    if (g < lower) ++rep.count_below;
  }
  return rep;
}

CountingCheck counting_check(const ZeroTable& t, double T) {
  if (!(T > 0.0)) throw DomainError("T must be positive");
  if (t.size() == 0 || T > t.ordinates.back()) {
    throw RangeError("T lies beyond the last ordinate of the table");
  }
  CountingCheck out;
  out.T = T;
  out.empirical = static_cast<std::size_t>(
      std::upper_bound(t.ordinates.begin(), t.ordinates.end(), T) - t.ordinates.begin());
  const double scaled = T / (2.0 * std::numbers::pi);
  out.main_term = scaled * std::log(T);
  out.refined_term = scaled * std::log(scaled) - scaled;
  return out;
}

}  // namespace zetagap
