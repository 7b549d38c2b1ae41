#pragma once

#include <cstdint>

namespace rgl {

// Integer division with rounding toward -inf / +inf. Divisor must be > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// Half-open window (lower, upper] of host orders sharing one k.
struct Window {
  std::int64_t lower = 0;  // exclusive: (r-1)(t-1)k
  std::int64_t upper = 0;  // inclusive: (r-1)(t-1)(k+1)
  bool contains(std::int64_t n) const { return lower < n && n <= upper; }
};

Window window(std::int64_t r, std::int64_t t, std::int64_t k);

/// Clique order r, path order t, window index k and host order n, plus the
/// derived x = ceil(n/(r-1)) and M = floor(x/(k+1)).
struct GoodnessParams {
  std::int64_t r = 2;
  std::int64_t t = 2;
  std::int64_t k = 1;
  std::int64_t n = 0;
  std::int64_t x = 0;
  std::int64_t M = 0;

  /// Throws WindowError for k = 0, InputError when n leaves the window.
  static GoodnessParams make(std::int64_t r, std::int64_t t, std::int64_t k, std::int64_t n);
  /// k taken from the window that contains n.
  static GoodnessParams for_order(std::int64_t r, std::int64_t t, std::int64_t n);

  /// Inside the regime k >= t - 3 where the degree condition is proven.
  bool in_proven_regime() const { return k >= t - 3; }
};

/// Unique k with (r-1)(t-1)k < n <= (r-1)(t-1)(k+1). Throws WindowError
/// when n <= (r-1)(t-1).
std::int64_t k_of(std::int64_t r, std::int64_t t, std::int64_t n);

/// n - ceil(k x/(k+1)). Cross-checked against n - x + M on every call.
std::int64_t degree_threshold(const GoodnessParams& p);
/// n - x + M.
std::int64_t degree_threshold_shifted(const GoodnessParams& p);

/// ceil(y - y/(k+1)) == y - floor(y/(k+1)), exact rational evaluation.
bool ceiling_identity_check(std::int64_t y, std::int64_t k);

/// (chi-1)(h_order-1) + surplus.
std::int64_t burr_lower_bound(std::int64_t chi, std::int64_t surplus, std::int64_t h_order);
/// (r-1)(t-1) + 1.
std::int64_t goodness_value(std::int64_t r, std::int64_t t);

/// Degree of the tight construction at n = (r-1)(t-1)(k+1); one below the
/// threshold.
std::int64_t extremal_degree(const GoodnessParams& p);

}  // namespace rgl
