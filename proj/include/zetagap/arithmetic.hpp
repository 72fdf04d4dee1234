#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zetagap {

enum class Sign { kPlus, kMinus };

/// Parameters of the finite Dirichlet-polynomial functional.
/// Coefficients are d_ell(n) for kPlus and lambda(n) d_ell(n) for kMinus.
struct DiscreteParams {
  std::uint64_t X = 1;
  double logT = 1.0;
  int ell = 1;
  Sign sign = Sign::kPlus;
  double c = 0.0;
};

void validate(const DiscreteParams& p);

inline constexpr std::size_t kDefaultSieveBudgetBytes = std::size_t{1} << 30;

/// Smallest-prime-factor table and the sorted list of prime powers up to X.
/// Read-only after construction.
class Sieve {
 public:
  /// Throws ResourceError if the tables would exceed budget_bytes.
  explicit Sieve(std::uint64_t X, std::size_t budget_bytes = kDefaultSieveBudgetBytes);

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint32_t smallest_prime_factor(std::uint64_t n) const;
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  std::span<const std::uint32_t> prime_powers() const noexcept { return prime_powers_; }

  /// d_ell(n) = prod over p^m || n of C(m + ell - 1, m). Throws RangeError on overflow.
  std::uint64_t d_ell(std::uint64_t n, int ell) const;
  int liouville(std::uint64_t n) const;
  double von_mangoldt(std::uint64_t k) const;

  static std::size_t bytes_required(std::uint64_t X);

 private:
  void check(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint32_t> prime_powers_;
};

/// g_c(k) = 2 sin(pi c log k / log T) / (pi log k), k >= 2.
double g_kernel(std::uint64_t k, double c, double logT);

struct DiscreteSums {
  double numerator = 0.0;
  double denominator = 0.0;
  double h = 0.0;
};

/// h(c) = c - Re(sum_{kn<=X} a(n) a(kn) g_c(k) Lambda(k) / (kn)) / sum_{n<=X} a(n)^2 / n.
/// The Liouville factor in the minus coefficients supplies the sign flip, so
/// both signs share this one formula. Sums are compensated, inner sums over n
/// ascending per prime power k, then over k ascending.
DiscreteSums h_discrete_sums(const Sieve& sieve, const DiscreteParams& p);
double h_discrete(const Sieve& sieve, const DiscreteParams& p);
double h_discrete(const DiscreteParams& p);

}  // namespace zetagap
