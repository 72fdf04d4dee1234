#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

#include "zetagap/error.hpp"
#include "zetagap/zeros.hpp"

using namespace zetagap;
using std::numbers::pi;

namespace {

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("ZETAGAP_FIXTURES");
  return std::string(dir ? dir : "tests/fixtures") + "/" + name;
}

ZeroTable from_text(const std::string& text) {
  std::istringstream in(text);
  return load_zeros(in);
}

void check_consistency(const GapReport& rep) {
  const double root = std::sqrt(double(rep.r));
  CHECK(rep.count_above + rep.count_below <= rep.n_gaps);
  CHECK(rep.max_norm >= rep.min_norm);
  CHECK((rep.max_norm > 1 + rep.theta_used / root) == (rep.count_above >= 1));
  CHECK((rep.min_norm < 1 - rep.vartheta_used / root) == (rep.count_below >= 1));
}

}  // namespace

TEST_CASE("load the first ordinates") {
  const auto t = from_text("14.134725\n21.022040\n25.010858\n");
  REQUIRE(t.size() == 3);
  CHECK(t.gamma(1) == 14.134725);
  CHECK(t.gamma(3) == 25.010858);

  const auto f = load_zeros_file(fixture("three.txt"));
  CHECK(f.ordinates == t.ordinates);
  CHECK(f.lines == std::vector<std::size_t>{2, 4, 5});
}

TEST_CASE("load errors carry the line") {
  auto expect = [](const std::string& name, ErrorCode code, std::size_t line) {
    try {
      load_zeros_file(fixture(name));
      FAIL("expected an error for " << name);
    } catch (const InputError& e) {
      CHECK(e.code() == code);
      CHECK(e.line() == line);
    }
  };
  expect("malformed.txt", ErrorCode::kParse, 2);
  expect("decreasing.txt", ErrorCode::kMonotonicity, 3);
  expect("nonpositive.txt", ErrorCode::kDomain, 2);

  try {
    load_zeros_file(fixture("comments_only.txt"));
    FAIL("expected an empty-table error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyTable);
  }
  try {
    from_text("");
    FAIL("expected an empty-table error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyTable);
  }
  try {
    load_zeros_file(fixture("no_such_file.txt"));
    FAIL("expected an I/O error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
}

TEST_CASE("equal neighbours are allowed") {
  CHECK(from_text("3\n3\n4\n").size() == 3);
  CHECK(from_text("  7.5  \n8e1\n").gamma(2) == 80.0);
}

TEST_CASE("normalized gap values") {
  const auto t = from_text("14.134725\n21.022040\n25.010858\n");
  CHECK(std::abs(normalized_gap(t, 1, 1) - 6.887315 * std::log(14.134725) / (2 * pi)) <= 1e-12);
  CHECK(std::abs(normalized_gap(t, 1, 1) - 2.9030) <= 5e-4);

  const auto ints = load_zeros_file(fixture("integers.txt"));
  CHECK(std::abs(normalized_gap(ints, 100, 1) - std::log(100.0) / (2 * pi)) <= 1e-15);
  CHECK_THROWS_AS(normalized_gap(ints, 1, 1), DomainError);
  CHECK_THROWS_AS(normalized_gap(ints, 200, 1), RangeError);
  CHECK_THROWS_AS(normalized_gap(ints, 0, 1), RangeError);
  CHECK_THROWS_AS(normalized_gap(ints, 5, 0), DomainError);
}

TEST_CASE("gap additivity") {
  const auto t = load_zeros_file(fixture("mixed_spacing.txt"));
  for (std::size_t n = 1; n + 5 <= t.size(); n += 17) {
    for (int r = 1; r <= 5; ++r) {
      const double unit = 2 * pi / std::log(t.gamma(n));
      double parts = 0;
      for (int j = 0; j < r; ++j) parts += t.gamma(n + j + 1) - t.gamma(n + j);
      CHECK(parts == doctest::Approx(t.gamma(n + r) - t.gamma(n)).epsilon(1e-14));
      CHECK(normalized_gap(t, n, r) * r * unit == doctest::Approx(parts).epsilon(1e-13));
    }
  }
}

TEST_CASE("unit spacing gives no exceedances") {
  const auto t = load_zeros_file(fixture("unit_spacing.txt"));
  for (int r : {1, 2, 5}) {
    const auto rep = gap_report(t, r);
    CHECK(rep.count_above == 0);
    CHECK(rep.count_below == 0);
    CHECK(rep.n_gaps == t.size() - r);
    check_consistency(rep);
  }
  CHECK(std::abs(gap_report(t, 1).max_norm - 1.0) <= 1e-12);
}

TEST_CASE("mixed spacing report") {
  const auto t = load_zeros_file(fixture("mixed_spacing.txt"));
  const auto rep = gap_report(t, 1);
  CHECK(rep.count_above >= 1);
  CHECK(rep.count_below >= 1);
  CHECK(rep.theta_used == kDefaultTheta);
  CHECK(rep.vartheta_used == kDefaultVartheta);
  CHECK(rep.max_norm == normalized_gap(t, rep.argmax, 1));
  CHECK(rep.min_norm == normalized_gap(t, rep.argmin, 1));
  check_consistency(rep);

  std::size_t above = 0, below = 0;
  for (std::size_t n = 1; n < t.size(); ++n) {
    const double g = normalized_gap(t, n, 1);
    above += g > 1 + kDefaultTheta;
    below += g < 1 - kDefaultVartheta;
  }
  CHECK(rep.count_above == above);
  CHECK(rep.count_below == below);

  for (int r = 1; r <= 6; ++r) check_consistency(gap_report(t, r, 0.2, 0.1));
  CHECK(gap_report(t, 3) == gap_report(load_zeros_file(fixture("mixed_spacing.txt")), 3));
}

TEST_CASE("report on the first ordinates") {
  const auto t = from_text("14.134725\n21.022040\n25.010858\n");
  const auto rep = gap_report(t, 1);
  CHECK(rep.argmax == 1);
  CHECK(rep.count_above >= 1);
  check_consistency(rep);
  CHECK_THROWS_AS(gap_report(t, 3), RangeError);
  CHECK_THROWS_AS(gap_report(t, 0), DomainError);
}

TEST_CASE("counting") {
  const auto t = from_text("1\n2\n3\n4\n5\n6\n7\n8\n9\n10\n");
  const auto c = counting_check(t, 5.0);
  CHECK(c.empirical == 5);
  CHECK(c.main_term == doctest::Approx(5.0 / (2 * pi) * std::log(5.0)));
  CHECK(c.refined_term ==
        doctest::Approx(5.0 / (2 * pi) * std::log(5.0 / (2 * pi)) - 5.0 / (2 * pi)));
  CHECK(counting_check(t, 10.0).empirical == 10);
  CHECK(counting_check(t, 0.5).empirical == 0);
  CHECK(std::abs(counting_check(load_zeros_file(fixture("integers.txt")), 100.0).main_term -
                 73.29356) <= 1e-5);
  CHECK_THROWS_AS(counting_check(t, 10.5), RangeError);
  CHECK_THROWS_AS(counting_check(t, 0.0), DomainError);
}

TEST_CASE("genuine ordinates when available") {
  const char* path = std::getenv("ZETAGAP_ZEROS_FILE");
  if (!path) {
    MESSAGE("ZETAGAP_ZEROS_FILE not set; genuine-data checks skipped");
    return;
  }
  const auto t = load_zeros_file(path);
  REQUIRE(t.size() >= 4000);
  const auto rep = gap_report(t, 1);
  CHECK(rep.count_above >= 1);
  CHECK(rep.count_below >= 1);
  check_consistency(rep);

  for (std::size_t N : {std::size_t{1000}, t.size() / 2}) {
    // mean spacing is 2pi/log(gamma/2pi), so gaps scaled by log(gamma)/2pi
    // average log(gamma)/log(gamma/2pi), not 1
    double sum = 0, predicted = 0;
    for (std::size_t n = N; n <= 2 * N && n < t.size(); ++n) {
      sum += normalized_gap(t, n, 1);
      predicted += std::log(t.gamma(n)) / std::log(t.gamma(n) / (2 * pi));
    }
    CAPTURE(N);
    CAPTURE(sum);
    CAPTURE(predicted);
    CHECK(std::abs(sum / predicted - 1.0) <= 0.01);
  }
  const double T = t.ordinates.back();
  const auto c = counting_check(t, T);
  CHECK(c.empirical == t.size());
  CHECK(std::abs(double(c.empirical) - (c.refined_term + 7.0 / 8.0)) <= 10.0);
}
