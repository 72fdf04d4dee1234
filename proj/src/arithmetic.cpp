#include "zetagap/arithmetic.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetagap/error.hpp"

namespace zetagap {

namespace {

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  __extension__ using u128 = unsigned __int128;
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;  // exact: acc holds C(n - k + i, i)
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw RangeError("d_ell value overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

void validate(const DiscreteParams& p) {
  if (p.X < 1) throw DomainError("X must be >= 1");
  if (!(p.logT > 0.0)) throw DomainError("log T must be positive");
  if (std::log(static_cast<double>(p.X)) > p.logT * (1.0 + 1e-12)) {
    throw DomainError("log X must not exceed log T");
  }
  if (p.ell < 1) throw DomainError("ell must be a positive integer");
  if (!(p.c >= 0.0)) throw DomainError("c must be >= 0");
}

std::size_t Sieve::bytes_required(std::uint64_t X) {
  // spf table plus a generous allowance for the prime and prime-power lists
  return static_cast<std::size_t>((X + 1) * sizeof(std::uint32_t) +
                                  (X / 4 + 64) * sizeof(std::uint32_t));
}

Sieve::Sieve(std::uint64_t X, std::size_t budget_bytes) : limit_(X) {
  if (X < 1) throw DomainError("sieve limit must be >= 1");
  if (X > std::numeric_limits<std::uint32_t>::max() - 1) {
    throw ResourceError("sieve limit exceeds 32-bit factor tables");
  }
  if (bytes_required(X) > budget_bytes) {
    throw ResourceError("sieve up to " + std::to_string(X) + " needs " +
                        std::to_string(bytes_required(X)) + " bytes, budget is " +
                        std::to_string(budget_bytes));
  }
  // Linear sieve.
  spf_.assign(X + 1, 0);
  for (std::uint64_t i = 2; i <= X; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t m = i * p;
      if (p > spf_[i] || m > X) break;
      spf_[m] = p;
    }
  }
  for (std::uint64_t n = 2; n <= X; ++n) {
    std::uint64_t m = n;
    const std::uint32_t p = spf_[n];
    while (m % p == 0) m /= p;
    if (m == 1) prime_powers_.push_back(static_cast<std::uint32_t>(n));
  }
}

void Sieve::check(std::uint64_t n) const {
  if (n < 1) throw DomainError("argument must be >= 1");
  if (n > limit_) {
    throw RangeError(std::to_string(n) + " exceeds sieve limit " + std::to_string(limit_));
  }
}

std::uint32_t Sieve::smallest_prime_factor(std::uint64_t n) const {
  check(n);
  return spf_[n];
}

std::uint64_t Sieve::d_ell(std::uint64_t n, int ell) const {
  check(n);
  if (ell < 1) throw DomainError("ell must be a positive integer");
  __extension__ using u128 = unsigned __int128;
  u128 acc = 1;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint64_t m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    acc *= binomial(m + static_cast<std::uint64_t>(ell) - 1, m);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw RangeError("d_ell value overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

int Sieve::liouville(std::uint64_t n) const {
  check(n);
  int parity = 0;
  while (n > 1) {
    n /= spf_[n];
    parity ^= 1;
  }
  return parity ? -1 : 1;
}

double Sieve::von_mangoldt(std::uint64_t k) const {
  check(k);
  if (k == 1) return 0.0;
  const std::uint32_t p = spf_[k];
  while (k % p == 0) k /= p;
  return k == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

double g_kernel(std::uint64_t k, double c, double logT) {
  if (k < 2) throw DomainError("g_kernel requires k >= 2");
  if (!(logT > 0.0)) throw DomainError("log T must be positive");
  const double logk = std::log(static_cast<double>(k));
  const double g = 2.0 * std::sin(std::numbers::pi * c * logk / logT) / (std::numbers::pi * logk);
  assert(std::abs(g) <= 2.0 * std::abs(c) / logT * (1.0 + 1e-12) + 1e-300);
  return g;
}

DiscreteSums h_discrete_sums(const Sieve& sieve, const DiscreteParams& p) {
  validate(p);
  if (p.X > sieve.limit()) throw RangeError("X exceeds sieve limit");

  const std::uint64_t X = p.X;
  std::vector<double> a(X + 1, 0.0);
  for (std::uint64_t n = 1; n <= X; ++n) {
    double v = static_cast<double>(sieve.d_ell(n, p.ell));
    if (p.sign == Sign::kMinus) v *= sieve.liouville(n);
    a[n] = v;
  }

  CompensatedSum denominator;
  for (std::uint64_t n = 1; n <= X; ++n) denominator.add(a[n] * a[n] / static_cast<double>(n));

  CompensatedSum numerator;
  if (p.c != 0.0) {
    for (std::uint32_t k : sieve.prime_powers()) {
      if (k > X) break;
      CompensatedSum inner;
      const std::uint64_t top = X / k;
      for (std::uint64_t n = 1; n <= top; ++n) inner.add(a[n] * a[k * n] / static_cast<double>(n));
      const double weight = g_kernel(k, p.c, p.logT) * sieve.von_mangoldt(k) / k;
      numerator.add(weight * inner.value());
    }
  }

  DiscreteSums out;
  out.numerator = numerator.value();
  out.denominator = denominator.value();
  out.h = p.c - out.numerator / out.denominator;
  return out;
}

double h_discrete(const Sieve& sieve, const DiscreteParams& p) {
  return h_discrete_sums(sieve, p).h;
}

double h_discrete(const DiscreteParams& p) {
  validate(p);
  const Sieve sieve(p.X);
  return h_discrete(sieve, p);
}

}  // namespace zetagap
