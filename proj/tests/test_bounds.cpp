#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zetagap/bounds.hpp"
#include "zetagap/error.hpp"
#include "zetagap/hfun.hpp"

using namespace zetagap;
using std::numbers::pi;

namespace {
const BoundScheme kPrintedTheta{2, BoundMode::kAsPrinted};
const BoundScheme kPrintedVartheta{1, BoundMode::kAsPrinted};
BoundScheme rigorous(int k) { return {k, BoundMode::kRigorousKPiece}; }
constexpr int kPieces[] = {1, 2, 4, 8, 16};
}  // namespace

TEST_CASE("two-piece chord slopes") {
  const auto s = chord_slopes(2);
  REQUIRE(s.size() == 2);
  CHECK(std::abs(s[0] - 2 * std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(s[1] - (4 - 2 * std::sqrt(2.0))) <= 1e-15);
  CHECK(chord_slopes(1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(chord_slopes(0), InvalidScheme);
}

TEST_CASE("chord slopes stay under sin(pi x) on their pieces") {
  for (int k : kPieces) {
    const auto s = chord_slopes(k);
    for (int j = 1; j <= k; ++j) {
      const double lo = (j - 1) / (2.0 * k), hi = j / (2.0 * k);
      for (int i = 0; i < 1000; ++i) {
        const double x = lo + (hi - lo) * i / 999.0;
        CAPTURE(k);
        CAPTURE(j);
        CHECK(s[j - 1] * x <= std::sin(pi * x) + 1e-12);
      }
    }
  }
}

TEST_CASE("large-gap objective matches the high-precision oracle") {
  for (double b : {2.0, 3.0, 4.5, 5.0107, 5.3, 7.0, 10.0}) {
    CAPTURE(b);
    CHECK(std::abs(theta_objective(b, kPrintedTheta) - oracle::theta_display(b)) <= 1e-12);
  }
  // frozen from the 100-digit oracle
  CHECK(std::abs(oracle::theta_display(5.0107) - 0.570119363) <= 1e-9);
  CHECK(std::abs(theta_objective(5.3, kPrintedTheta) - 0.57073) <= 1e-4);
}

TEST_CASE("as-printed and rigorous two-piece large-gap objectives coincide") {
  for (double b = 2.5; b <= 10.0; b += 0.01) {
    CAPTURE(b);
    CHECK(std::abs(theta_objective(b, kPrintedTheta) - theta_objective(b, rigorous(2))) <= 1e-14);
  }
}

TEST_CASE("rigorous k-piece objectives match the piecewise oracle") {
  for (int k : kPieces) {
    for (double b = 2.5; b <= 9.0; b += 0.25) {
      CAPTURE(k);
      CAPTURE(b);
      CHECK(std::abs(theta_objective(b, rigorous(k)) - oracle::theta_k_piece(b, k)) <= 1e-12);
      CHECK(std::abs(vartheta_objective(b, rigorous(k)) - oracle::vartheta_k_piece(b, k)) <= 1e-12);
    }
  }
}

TEST_CASE("small-gap objective as displayed") {
  CHECK(std::abs(vartheta_objective(5.17305, kPrintedVartheta) - 0.299856) <= 2e-5);
  CHECK(std::abs(vartheta_objective(5.17305, kPrintedVartheta) - oracle::vartheta_display(5.17305)) <=
        1e-12);
  CHECK(std::abs(vartheta_objective(4.0, kPrintedVartheta) - 0.281356) <= 1e-4);
}

TEST_CASE("objective domains and scheme checks") {
  CHECK_THROWS_AS(theta_objective(1.0, kPrintedTheta), DomainError);
  CHECK_THROWS_AS(vartheta_objective(2.0, kPrintedVartheta), DomainError);
  CHECK_THROWS_AS(theta_objective(5.0, {4, BoundMode::kAsPrinted}), InvalidScheme);
  CHECK_THROWS_AS(vartheta_objective(5.0, {2, BoundMode::kAsPrinted}), InvalidScheme);
  CHECK_THROWS_AS(theta_objective(5.0, rigorous(0)), InvalidScheme);
  CHECK_THROWS_AS(optimize_theta(kPrintedTheta, {0.5, 8.0}), DomainError);
  CHECK_THROWS_AS(optimize_vartheta(kPrintedVartheta, {2.0, 9.0}), DomainError);
  CHECK_THROWS_AS(optimize_theta(kPrintedTheta, {5.0, 4.0}), DomainError);
}

TEST_CASE("large-gap optimum over [3, 8]") {
  const auto res = optimize_theta(kPrintedTheta, {3.0, 8.0});
  CHECK(std::abs(res.theta - 0.5707) <= 5e-4);
  CHECK(std::abs(res.b_star - 5.3) <= 0.3);
  CHECK_FALSE(res.boundary_warning);
  CHECK(res.theta == theta_objective(res.b_star, kPrintedTheta));
  CHECK(res.bracket.first <= res.b_star);
  CHECK(res.b_star <= res.bracket.second);

  const auto grid = oracle::dense_grid_max(
      [](double b) { return theta_objective(b, kPrintedTheta); }, 3.0, 8.0, 100000);
  CHECK(std::abs(res.b_star - grid.arg) <= 5.0 / 99999.0);
  CHECK(res.theta >= grid.val - 1e-12);
}

TEST_CASE("one-piece rigorous large-gap optimum") {
  const auto res = optimize_theta(rigorous(1), {3.0, 8.0});
  CHECK(std::abs(res.theta - 0.465) <= 5e-3);
}

TEST_CASE("finer partitions never lower the constants") {
  double prev_theta = -1.0, prev_vartheta = -1.0;
  for (int k : kPieces) {
    const auto t = optimize_theta(rigorous(k), {3.0, 8.0});
    const auto v = optimize_vartheta(rigorous(k), {3.0, 9.0});
    CAPTURE(k);
    CHECK(t.theta >= prev_theta);
    CHECK(v.theta >= prev_vartheta);
    prev_theta = t.theta;
    prev_vartheta = v.theta;
  }
}

TEST_CASE("small-gap optimum as displayed") {
  const auto res = optimize_vartheta(kPrintedVartheta, {3.0, 9.0});
  CHECK(std::abs(res.theta - 0.2999) <= 5e-4);
  CHECK(std::abs(res.b_star - 5.17305) <= 0.3);
  CHECK(res.valid);

  const auto grid = oracle::dense_grid_max(
      [](double b) { return vartheta_objective(b, kPrintedVartheta); }, 3.0, 9.0, 100000);
  CHECK(std::abs(res.b_star - grid.arg) <= 6.0 / 99999.0);
}

TEST_CASE("rigorous two-piece small-gap optimum") {
  const auto res = optimize_vartheta(rigorous(2), {3.0, 9.0});
  CHECK(std::abs(res.theta - 0.359222) <= 5e-3);
  CHECK(res.valid);
}

TEST_CASE("certified upper bound dominates h+") {
  CHECK(certified_h_plus_upper(2.337, 2.2, 0.0, kPrintedTheta) >= 0.99965);

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> cd(0.5, 10.0), ld(1.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double c = cd(rng), ell = ld(rng);
    const double exact = h_plus({c, ell, 0.0, {}});
    double prev = INFINITY;
    for (int k : kPieces) {
      const double upper = certified_h_plus_upper(c, ell, 0.0, rigorous(k));
      CAPTURE(c);
      CAPTURE(ell);
      CAPTURE(k);
      CHECK(upper >= exact - 1e-8);
      CHECK(upper <= prev + 1e-12);
      prev = upper;
    }
  }
}

TEST_CASE("certified bound deficit along c = r + theta sqrt(r)") {
  // With ell^2 + 1 = b c the scaled deficit (c - upper)/sqrt(r) tends to
  // 2 sqrt(b) (2/(pi b) bracket - E1(b)/pi), which dominates theta_objective(b).
  const double r = 1e6;
  for (double b : {4.0, 5.0107, 5.3, 6.5}) {
    const double theta = theta_objective(b, kPrintedTheta);
    const double c = r + theta * std::sqrt(r);
    const double ell = std::sqrt(b * c - 1.0);
    const double deficit = (c - certified_h_plus_upper(c, ell, 0.0, kPrintedTheta)) / std::sqrt(r);
    const double limit =
        2 * std::sqrt(b) * (2 / (pi * b) * oracle::k_piece_bracket(2, b) - oracle::e1(b) / pi);
    CAPTURE(b);
    CHECK(std::abs(deficit - limit) <= 1e-3);
    CHECK(deficit >= theta);
  }
}

TEST_CASE("certified bound argument checks") {
  CHECK_THROWS_AS(certified_h_plus_upper(0.0, 2.0, 0.0, kPrintedTheta), DomainError);
  CHECK_THROWS_AS(certified_h_plus_upper(1.0, 0.5, 0.0, kPrintedTheta), DomainError);
  CHECK_THROWS_AS(certified_h_plus_upper(1.0, 2.0, 0.0, {3, BoundMode::kAsPrinted}), InvalidScheme);
}
