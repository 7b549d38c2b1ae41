#include "rgl/thresholds.hpp"

#include <string>

#include "rgl/errors.hpp"

namespace rgl {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw InputError("floor_div: divisor must be positive");
  std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw InputError("ceil_div: divisor must be positive");
  std::int64_t q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

Window window(std::int64_t r, std::int64_t t, std::int64_t k) {
  const std::int64_t block = (r - 1) * (t - 1);
  return {block * k, block * (k + 1)};
}

namespace {

void check_rt(std::int64_t r, std::int64_t t) {
  if (r < 2) throw InputError("clique order r must be >= 2");
  if (t < 2) throw InputError("path order t must be >= 2");
}

}  // namespace

std::int64_t k_of(std::int64_t r, std::int64_t t, std::int64_t n) {
  check_rt(r, t);
  const std::int64_t block = (r - 1) * (t - 1);
  if (n <= block)
    throw WindowError("n=" + std::to_string(n) + " is below classical Ramsey window (n must exceed (r-1)(t-1) = " +
                      std::to_string(block) + "; k = 0 is vacuous)");
  return ceil_div(n, block) - 1;
}

GoodnessParams GoodnessParams::make(std::int64_t r, std::int64_t t, std::int64_t k, std::int64_t n) {
  check_rt(r, t);
  if (k == 0) throw WindowError("k = 0 is vacuous: the degree condition would read delta(G) >= n");
  if (k < 0) throw InputError("k must be >= 1");
  Window w = window(r, t, k);
  if (!w.contains(n))
    throw InputError("n=" + std::to_string(n) + " outside the k=" + std::to_string(k) + " window (" +
                     std::to_string(w.lower) + ", " + std::to_string(w.upper) + "]");
  GoodnessParams p;
  p.r = r;
  p.t = t;
  p.k = k;
  p.n = n;
  p.x = ceil_div(n, r - 1);
  p.M = floor_div(p.x, k + 1);
  return p;
}

GoodnessParams GoodnessParams::for_order(std::int64_t r, std::int64_t t, std::int64_t n) {
  return make(r, t, k_of(r, t, n), n);
}

std::int64_t degree_threshold_shifted(const GoodnessParams& p) { return p.n - p.x + p.M; }

std::int64_t degree_threshold(const GoodnessParams& p) {
  const std::int64_t ceiling_form = p.n - ceil_div(p.k * p.x, p.k + 1);
  if (ceiling_form != degree_threshold_shifted(p))
    throw InvariantError("degree threshold forms disagree at n=" + std::to_string(p.n));
  return ceiling_form;
}

bool ceiling_identity_check(std::int64_t y, std::int64_t k) {
  if (k < 1) throw InputError("ceiling_identity_check: k must be >= 1");
  // y - y/(k+1) = y k / (k+1) as a reduced-free rational.
  const std::int64_t lhs = ceil_div(y * k, k + 1);
  const std::int64_t rhs = y - floor_div(y, k + 1);
  return lhs == rhs;
}

std::int64_t burr_lower_bound(std::int64_t chi, std::int64_t surplus, std::int64_t h_order) {
  if (chi < 1) throw InputError("burr_lower_bound: chi must be >= 1");
  if (surplus < 1) throw InputError("burr_lower_bound: surplus must be >= 1");
  if (h_order < surplus) throw InputError("burr_lower_bound: need |H| >= s(G)");
  return (chi - 1) * (h_order - 1) + surplus;
}

std::int64_t goodness_value(std::int64_t r, std::int64_t t) {
  if (r < 2) throw InputError("goodness_value: r must be >= 2");
  if (t < 1) throw InputError("goodness_value: t must be >= 1");
  return (r - 1) * (t - 1) + 1;
}

std::int64_t extremal_degree(const GoodnessParams& p) {
  if (p.n != window(p.r, p.t, p.k).upper)
    throw InputError("extremal_degree: n must equal (r-1)(t-1)(k+1) = " +
                     std::to_string(window(p.r, p.t, p.k).upper));
  return p.n - ceil_div(p.k * p.x, p.k + 1) - 1;
}

}  // namespace rgl
