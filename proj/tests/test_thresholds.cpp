#include <boost/rational.hpp>

#include "doctest.h"
#include "rgl/errors.hpp"
#include "rgl/families.hpp"
#include "rgl/graph.hpp"
#include "rgl/thresholds.hpp"

using namespace rgl;
using Q = boost::rational<long long>;

namespace {

long long q_ceil(Q q) {
  long long f = q.numerator() / q.denominator();
  if (q.numerator() % q.denominator() != 0 && q > 0) ++f;
  return f;
}

long long q_floor(Q q) {
  long long f = q.numerator() / q.denominator();
  if (q.numerator() % q.denominator() != 0 && q < 0) --f;
  return f;
}

// Threshold straight from the rational formula.
long long rational_threshold(long long r, long long k, long long n) {
  const long long x = q_ceil(Q(n, r - 1));
  return n - q_ceil(Q(k, k + 1) * x);
}

}  // namespace

TEST_CASE("floor and ceil division") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(0, 5) == 0);
  for (long long a = -50; a <= 50; ++a)
    for (long long b = 1; b <= 9; ++b) {
      CHECK(floor_div(a, b) == q_floor(Q(a, b)));
      CHECK(ceil_div(a, b) == q_ceil(Q(a, b)));
    }
}

TEST_CASE("k_of") {
  CHECK(k_of(3, 3, 8) == 1);
  CHECK(k_of(3, 3, 9) == 2);
  CHECK(k_of(2, 4, 6) == 1);
  CHECK_THROWS_AS(k_of(3, 3, 4), WindowError);
  CHECK_THROWS_WITH_AS(k_of(3, 3, 4), doctest::Contains("below classical Ramsey window"), WindowError);
  for (long long r = 2; r <= 6; ++r)
    for (long long t = 2; t <= 6; ++t) {
      const long long base = (r - 1) * (t - 1);
      long long prev_upper = base;
      for (long long k = 1; k <= 6; ++k) {
        const Window w = window(r, t, k);
        CHECK(w.lower == prev_upper);  // windows tile with no gap or overlap
        prev_upper = w.upper;
        for (long long n = w.lower + 1; n <= w.upper; ++n) CHECK(k_of(r, t, n) == k);
      }
    }
}

TEST_CASE("degree_threshold examples") {
  const GoodnessParams a = GoodnessParams::make(3, 3, 1, 8);
  CHECK(a.x == 4);
  CHECK(a.M == 2);
  CHECK(degree_threshold(a) == 6);
  CHECK(degree_threshold_shifted(a) == 6);
  const GoodnessParams b = GoodnessParams::make(3, 4, 1, 12);
  CHECK(b.x == 6);
  CHECK(b.M == 3);
  CHECK(degree_threshold(b) == 9);
  CHECK(degree_threshold(GoodnessParams::for_order(2, 5, 9)) == 3);
  for (long long t = 2; t <= 8; ++t)
    for (long long n = t; n <= 40; ++n) {
      const GoodnessParams p = GoodnessParams::for_order(2, t, n);
      CHECK(degree_threshold(p) == n / (p.k + 1));
    }
  CHECK_THROWS_AS(GoodnessParams::make(3, 3, 0, 4), WindowError);
  CHECK_THROWS_AS(GoodnessParams::make(3, 3, 1, 9), InputError);
}

TEST_CASE("threshold forms agree with the rational formula") {
  for (long long r = 2; r <= 10; ++r)
    for (long long t = 2; t <= 10; ++t)
      for (long long k = 1; k <= 10; ++k) {
        const Window w = window(r, t, k);
        for (long long n = w.lower + 1; n <= w.upper; ++n) {
          const GoodnessParams p = GoodnessParams::make(r, t, k, n);
          REQUIRE(degree_threshold(p) == rational_threshold(r, k, n));
          REQUIRE(degree_threshold_shifted(p) == rational_threshold(r, k, n));
        }
      }
}

TEST_CASE("ceiling identity") {
  CHECK(ceiling_identity_check(7, 2));
  CHECK(ceiling_identity_check(0, 5));
  CHECK_THROWS_AS(ceiling_identity_check(3, 0), InputError);
  for (long long y = 0; y <= 300; ++y)
    for (long long k = 1; k <= 20; ++k)
      CHECK(q_ceil(Q(y) - Q(y, k + 1)) == y - q_floor(Q(y, k + 1)));
}

TEST_CASE("burr bound and goodness value") {
  CHECK(burr_lower_bound(3, 1, 3) == 5);
  CHECK(burr_lower_bound(3, 1, 5) == 9);
  CHECK(goodness_value(3, 3) == 5);
  CHECK(goodness_value(3, 4) == 7);
  CHECK(goodness_value(4, 3) == 7);
  const Graph k3 = families::complete(3);
  CHECK(burr_lower_bound(chromatic_number(k3).chi, chromatic_surplus(k3), 5) == goodness_value(3, 5));
  CHECK_THROWS_AS(burr_lower_bound(3, 0, 5), InputError);
  CHECK_THROWS_AS(burr_lower_bound(3, 6, 5), InputError);
  CHECK_THROWS_AS(burr_lower_bound(0, 1, 5), InputError);
}

TEST_CASE("extremal degree") {
  CHECK(extremal_degree(GoodnessParams::make(3, 3, 1, 8)) == 5);
  CHECK(extremal_degree(GoodnessParams::make(2, 3, 1, 4)) == 1);
  CHECK(extremal_degree(GoodnessParams::make(3, 4, 1, 12)) == 8);
  CHECK_THROWS_AS(extremal_degree(GoodnessParams::make(3, 3, 1, 7)), InputError);
  for (long long r = 2; r <= 6; ++r)
    for (long long t = 2; t <= 6; ++t)
      for (long long k = 1; k <= 4; ++k) {
        const GoodnessParams p = GoodnessParams::make(r, t, k, (r - 1) * (t - 1) * (k + 1));
        CHECK(extremal_degree(p) == degree_threshold(p) - 1);
      }
}
