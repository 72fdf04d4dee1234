#include "zetagap/zetagap.h"

#include <algorithm>
#include <new>
#include <sstream>
#include <string>

#include "zetagap/arithmetic.hpp"
#include "zetagap/asymptotic.hpp"
#include "zetagap/bounds.hpp"
#include "zetagap/error.hpp"
#include "zetagap/hfun.hpp"
#include "zetagap/numerics.hpp"
#include "zetagap/zeros.hpp"

struct zg_sieve {
  zetagap::Sieve impl;
};

struct zg_zero_table {
  zetagap::ZeroTable impl;
};

namespace {

thread_local std::string g_message;
thread_local std::size_t g_line = 0;

zg_status fail(zg_status status, std::string message, std::size_t line = 0) {
  g_message = std::move(message);
  g_line = line;
  return status;
}

template <typename Fn>
zg_status guard(Fn&& fn) {
  g_message.clear();
  g_line = 0;
  try {
    fn();
    return ZG_OK;
  } catch (const zetagap::InputError& e) {
    return fail(static_cast<zg_status>(e.code()), e.what(), e.line());
  } catch (const zetagap::Error& e) {
    return fail(static_cast<zg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZG_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ZG_ERR_INTERNAL, "unknown exception");
  }
}

#define ZG_REQUIRE(ptr)                                                         \
  do {                                                                          \
    if ((ptr) == nullptr) return fail(ZG_ERR_NULL_ARGUMENT, #ptr " is null");   \
  } while (0)

zetagap::QuadSpec to_quad(const zg_quad* quad) {
  if (quad == nullptr) return zetagap::QuadSpec{};
  return zetagap::QuadSpec{quad->abs_tol, quad->max_subdivisions};
}

zetagap::BoundScheme to_scheme(zg_scheme s) {
  return zetagap::BoundScheme{
      s.k, s.mode == ZG_MODE_RIGOROUS ? zetagap::BoundMode::kRigorousKPiece
                                      : zetagap::BoundMode::kAsPrinted};
}

void fill(zg_theta_result* out, const zetagap::ThetaResult& res, zg_scheme scheme) {
  out->b_star = res.b_star;
  out->value = res.theta;
  out->scheme = scheme;
  out->bracket_lo = res.bracket.first;
  out->bracket_hi = res.bracket.second;
  out->boundary_warning = res.boundary_warning ? 1 : 0;
  out->valid = res.valid ? 1 : 0;
}

// Quadrature failures still hand back the best estimate.
template <typename Fn>
zg_status guard_quad(double* out, Fn&& fn) {
  ZG_REQUIRE(out);
  g_message.clear();
  g_line = 0;
  try {
    *out = fn();
    return ZG_OK;
  } catch (const zetagap::ToleranceNotMet& e) {
    *out = e.estimate();
    return fail(ZG_ERR_TOLERANCE, e.what());
  } catch (...) {
    return guard([] { throw; });
  }
}

}  // namespace

extern "C" {

const char* zg_status_name(zg_status status) {
  switch (status) {
    case ZG_OK: return "ok";
    case ZG_ERR_DOMAIN: return "domain_error";
    case ZG_ERR_TOLERANCE: return "tolerance_not_met";
    case ZG_ERR_NO_CERTIFICATE: return "no_certificate";
    case ZG_ERR_PARSE: return "parse_error";
    case ZG_ERR_MONOTONICITY: return "monotonicity_error";
    case ZG_ERR_EMPTY: return "empty_table";
    case ZG_ERR_RANGE: return "range_error";
    case ZG_ERR_RESOURCE: return "resource_error";
    case ZG_ERR_INVALID_SCHEME: return "invalid_scheme";
    case ZG_ERR_IO: return "io_error";
    case ZG_ERR_NULL_ARGUMENT: return "null_argument";
    case ZG_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* zg_last_error(void) { return g_message.c_str(); }
size_t zg_last_error_line(void) { return g_line; }
const char* zg_version(void) { return "1.0.0"; }

zg_quad zg_quad_default(void) {
  const zetagap::QuadSpec q;
  return zg_quad{q.abs_tol, q.max_subdivisions};
}

zg_status zg_exp_integral_e1(double x, double* out) {
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::exp_integral_e1(x); });
}

zg_status zg_h_plus(double c, double ell, double delta, const zg_quad* quad, double* out) {
  return guard_quad(out, [&] { return zetagap::h_plus({c, ell, delta, to_quad(quad)}); });
}

zg_status zg_h_minus(double c, double ell, double delta, const zg_quad* quad, double* out) {
  return guard_quad(out, [&] { return zetagap::h_minus({c, ell, delta, to_quad(quad)}); });
}

zg_status zg_find_large_gap_c(int r, double ell, double delta, const zg_quad* quad, double* out) {
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::find_large_gap_c(r, ell, delta, to_quad(quad)); });
}

zg_status zg_find_small_gap_c(int r, double ell, double delta, const zg_quad* quad, double* out) {
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::find_small_gap_c(r, ell, delta, to_quad(quad)); });
}

zg_status zg_build_table(zg_kind kind, const int* r, const double* ell, size_t count, double delta,
                         const zg_quad* quad, zg_table_row* out) {
  ZG_REQUIRE(r);
  ZG_REQUIRE(ell);
  ZG_REQUIRE(out);
  return guard([&] {
    std::vector<zetagap::TableRequest> rows;
    rows.reserve(count);
    for (size_t i = 0; i < count; ++i) rows.push_back({r[i], ell[i]});
    const auto table = zetagap::build_table(
        kind == ZG_KIND_MINUS ? zetagap::GapKind::kSmall : zetagap::GapKind::kLarge, rows, delta,
        to_quad(quad));
    for (size_t i = 0; i < table.size(); ++i) {
      out[i] = zg_table_row{table[i].r, table[i].ell, table[i].c, table[i].h_value,
                            table[i].error ? ZG_ERR_NO_CERTIFICATE : ZG_OK};
    }
  });
}

zg_status zg_chord_slopes(int k, double* out) {
  ZG_REQUIRE(out);
  return guard([&] {
    const auto s = zetagap::chord_slopes(k);
    std::copy(s.begin(), s.end(), out);
  });
}

zg_status zg_theta_objective(double b, zg_scheme scheme, double* out) {
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::theta_objective(b, to_scheme(scheme)); });
}

zg_status zg_vartheta_objective(double b, zg_scheme scheme, double* out) {
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::vartheta_objective(b, to_scheme(scheme)); });
}

zg_status zg_optimize_theta(zg_scheme scheme, double b_lo, double b_hi, zg_theta_result* out) {
  ZG_REQUIRE(out);
  return guard([&] {
    fill(out, zetagap::optimize_theta(to_scheme(scheme), {b_lo, b_hi}), scheme);
  });
}

zg_status zg_optimize_vartheta(zg_scheme scheme, double b_lo, double b_hi, zg_theta_result* out) {
  ZG_REQUIRE(out);
  return guard([&] {
    fill(out, zetagap::optimize_vartheta(to_scheme(scheme), {b_lo, b_hi}), scheme);
  });
}

zg_status zg_certified_h_plus_upper(double c, double ell, double delta, zg_scheme scheme,
                                    double* out) {
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::certified_h_plus_upper(c, ell, delta, to_scheme(scheme)); });
}

zg_status zg_asymptotic_objective(double B, double* out) {
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::asymptotic_objective(B); });
}

zg_status zg_asymptotic_integral_closed(double B, double delta, double* out) {
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::asymptotic_integral_closed(B, delta); });
}

zg_status zg_asymptotic_integral(double B, double delta, const zg_quad* quad, double* out) {
  return guard_quad(out, [&] { return zetagap::asymptotic_integral(B, delta, to_quad(quad)); });
}

zg_status zg_tail_e(double r, double B, double delta, const zg_quad* quad, double* out) {
  return guard_quad(out, [&] { return zetagap::tail_E(r, B, delta, to_quad(quad)); });
}

zg_status zg_optimize_b(double lo, double hi, zg_opt_result* out) {
  ZG_REQUIRE(out);
  return guard([&] {
    const auto res = zetagap::optimize_B({lo, hi});
    *out = zg_opt_result{res.arg_star, res.val_star, res.bracket.first, res.bracket.second,
                         res.boundary_warning ? 1 : 0};
  });
}

zg_status zg_h_plus_large_r(double r, double B, double delta, double theta, const zg_quad* quad,
                            double* out) {
  return guard_quad(
      out, [&] { return zetagap::h_plus_large_r({B, r, delta}, theta, to_quad(quad)); });
}

zg_status zg_h_minus_large_r(double r, double B, double delta, double vartheta,
                             const zg_quad* quad, double* out) {
  return guard_quad(
      out, [&] { return zetagap::h_minus_large_r({B, r, delta}, vartheta, to_quad(quad)); });
}

zg_status zg_finite_r_correction(double r, double B, double delta, const zg_quad* quad,
                                 double* out) {
  return guard_quad(out,
                    [&] { return zetagap::finite_r_correction({B, r, delta}, to_quad(quad)); });
}

zg_status zg_negligible_correction_r(double B, double delta, double tol, const zg_quad* quad,
                                     double* out) {
  ZG_REQUIRE(out);
  return guard(
      [&] { *out = zetagap::negligible_correction_r(B, delta, tol, to_quad(quad)); });
}

zg_status zg_sieve_create(uint64_t X, size_t budget_bytes, zg_sieve** out) {
  ZG_REQUIRE(out);
  return guard([&] {
    const size_t budget = budget_bytes == 0 ? zetagap::kDefaultSieveBudgetBytes : budget_bytes;
    *out = new zg_sieve{zetagap::Sieve(X, budget)};
  });
}

void zg_sieve_destroy(zg_sieve* sieve) { delete sieve; }

zg_status zg_sieve_limit(const zg_sieve* sieve, uint64_t* out) {
  ZG_REQUIRE(sieve);
  ZG_REQUIRE(out);
  *out = sieve->impl.limit();
  return ZG_OK;
}

zg_status zg_sieve_prime_count(const zg_sieve* sieve, uint64_t* out) {
  ZG_REQUIRE(sieve);
  ZG_REQUIRE(out);
  *out = sieve->impl.primes().size();
  return ZG_OK;
}

zg_status zg_sieve_prime_power_count(const zg_sieve* sieve, uint64_t* out) {
  ZG_REQUIRE(sieve);
  ZG_REQUIRE(out);
  *out = sieve->impl.prime_powers().size();
  return ZG_OK;
}

zg_status zg_sieve_prime_powers(const zg_sieve* sieve, uint32_t* out, size_t capacity,
                                size_t* written) {
  ZG_REQUIRE(sieve);
  ZG_REQUIRE(written);
  const auto pp = sieve->impl.prime_powers();
  const size_t n = std::min(capacity, pp.size());
  if (n > 0) {
    ZG_REQUIRE(out);
    std::copy_n(pp.begin(), n, out);
  }
  *written = n;
  return ZG_OK;
}

zg_status zg_smallest_prime_factor(const zg_sieve* sieve, uint64_t n, uint32_t* out) {
  ZG_REQUIRE(sieve);
  ZG_REQUIRE(out);
  return guard([&] { *out = sieve->impl.smallest_prime_factor(n); });
}

zg_status zg_d_ell(const zg_sieve* sieve, uint64_t n, int ell, uint64_t* out) {
  ZG_REQUIRE(sieve);
  ZG_REQUIRE(out);
  return guard([&] { *out = sieve->impl.d_ell(n, ell); });
}

zg_status zg_liouville(const zg_sieve* sieve, uint64_t n, int* out) {
  ZG_REQUIRE(sieve);
  ZG_REQUIRE(out);
  return guard([&] { *out = sieve->impl.liouville(n); });
}

zg_status zg_von_mangoldt(const zg_sieve* sieve, uint64_t k, double* out) {
  ZG_REQUIRE(sieve);
  ZG_REQUIRE(out);
  return guard([&] { *out = sieve->impl.von_mangoldt(k); });
}

zg_status zg_g_kernel(uint64_t k, double c, double logT, double* out) {
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::g_kernel(k, c, logT); });
}

zg_status zg_h_discrete(const zg_sieve* sieve, const zg_discrete_params* params,
                        zg_discrete_result* out) {
  ZG_REQUIRE(sieve);
  ZG_REQUIRE(params);
  ZG_REQUIRE(out);
  return guard([&] {
    const zetagap::DiscreteParams p{params->X, params->logT, params->ell,
                                    params->sign == ZG_KIND_MINUS ? zetagap::Sign::kMinus
                                                                  : zetagap::Sign::kPlus,
                                    params->c};
    const auto sums = zetagap::h_discrete_sums(sieve->impl, p);
    *out = zg_discrete_result{sums.h, sums.numerator, sums.denominator};
  });
}

zg_status zg_zeros_load_file(const char* path, zg_zero_table** out) {
  ZG_REQUIRE(path);
  ZG_REQUIRE(out);
  return guard([&] { *out = new zg_zero_table{zetagap::load_zeros_file(path)}; });
}

zg_status zg_zeros_load_buffer(const char* data, size_t size, const char* source,
                               zg_zero_table** out) {
  ZG_REQUIRE(out);
  if (size > 0) ZG_REQUIRE(data);
  return guard([&] {
    std::istringstream in(std::string(data == nullptr ? "" : data, size));
    *out = new zg_zero_table{zetagap::load_zeros(in, source ? source : "buffer")};
  });
}

void zg_zeros_destroy(zg_zero_table* table) { delete table; }

zg_status zg_zeros_size(const zg_zero_table* table, size_t* out) {
  ZG_REQUIRE(table);
  ZG_REQUIRE(out);
  *out = table->impl.size();
  return ZG_OK;
}

zg_status zg_zeros_get(const zg_zero_table* table, size_t n, double* out) {
  ZG_REQUIRE(table);
  ZG_REQUIRE(out);
  if (n < 1 || n > table->impl.size()) return fail(ZG_ERR_RANGE, "index out of range");
  *out = table->impl.gamma(n);
  return ZG_OK;
}

double zg_default_theta(void) { return zetagap::kDefaultTheta; }
double zg_default_vartheta(void) { return zetagap::kDefaultVartheta; }

zg_status zg_normalized_gap(const zg_zero_table* table, size_t n, int r, double* out) {
  ZG_REQUIRE(table);
  ZG_REQUIRE(out);
  return guard([&] { *out = zetagap::normalized_gap(table->impl, n, r); });
}

zg_status zg_gap_report_compute(const zg_zero_table* table, int r, double theta, double vartheta,
                                zg_gap_report* out) {
  ZG_REQUIRE(table);
  ZG_REQUIRE(out);
  return guard([&] {
    const auto rep = zetagap::gap_report(table->impl, r, theta, vartheta);
    *out = zg_gap_report{rep.r,           rep.max_norm,    rep.argmax,     rep.min_norm,
                         rep.argmin,      rep.count_above, rep.count_below, rep.theta_used,
                         rep.vartheta_used, rep.n_gaps};
  });
}

zg_status zg_counting_check(const zg_zero_table* table, double T, zg_counting* out) {
  ZG_REQUIRE(table);
  ZG_REQUIRE(out);
  return guard([&] {
    const auto res = zetagap::counting_check(table->impl, T);
    *out = zg_counting{res.T, res.empirical, res.main_term, res.refined_term};
  });
}

}  // extern "C"
