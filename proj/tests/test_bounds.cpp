#include "doctest.h"
#include "oracles.hpp"

#include "twodist/bounds.hpp"
#include "twodist/code_io.hpp"

#include <sstream>

using namespace twodist;

namespace {

std::vector<TwoDistParams> small_params(int q_max, int n_max) {
  std::vector<TwoDistParams> out;
  for (int q = 2; q <= q_max; ++q)
    for (int n = 2; n <= n_max; ++n)
      for (int d = 1; d < n; ++d)
        for (int delta = 1; d + delta <= n; ++delta) out.emplace_back(q, n, d, delta);
  return out;
}

}  // namespace

TEST_CASE("LP optimum agrees with a floating-point vertex oracle") {
  for (const auto& p : small_params(4, 14)) {
    const double ref = oracle::lp_optimum(p.q, p.n, p.d, p.delta);
    try {
      const LpSolution s = lp_solve(p);
      CHECK(std::abs(s.optimum.convert_to<double>() - ref) < 1e-6 * (1 + ref));
      CHECK(s.value == floor(s.optimum));
      CHECK(Rational(1) + s.a_near + s.a_far == s.optimum);
    } catch (const LpUnbounded&) {
      FAIL_CHECK("unexpected unbounded LP for " << p.str());
    }
  }
}

TEST_CASE("LP bound values from the tables") {
  CHECK(lp_bound({2, 11, 2, 2}) == 56);
  CHECK(lp_bound({2, 18, 2, 2}) == 154);
  CHECK(lp_bound({3, 7, 3, 3}) == 27);
  CHECK(lp_bound({3, 10, 3, 3}) == 81);
  CHECK(lp_bound({2, 13, 6, 6}) == 24);
}

TEST_CASE("every bound dominates the exact maximum on tiny instances") {
  for (const auto& p : small_params(3, 6)) {
    if (ipow(Int(p.q), static_cast<unsigned>(p.n)) > 81) continue;
    const Int exact = oracle::brute_maximum(p.q, p.n, p.d, p.delta);
    const BoundReport r = best_upper_bound(p);
    if (r.special && r.special->kind == BoundStatus::Kind::NotWellDefined) continue;
    INFO(p.str());
    REQUIRE(r.best);
    CHECK(*r.best >= exact);
    for (const auto& e : r.entries)
      if (e.counts_toward_best && e.value) CHECK(*e.value >= exact);
  }
}

TEST_CASE("degree-2 bound") {
  CHECK(d2_bound({2, 9, 4, 2}) == 16);
  CHECK(d2_bound({2, 8, 4, 4}) == 16);
  CHECK(d2_bound({4, 7, 4, 2}) == 64);
  CHECK(d2_bound({3, 11, 6, 3}) == 243);
  CHECK(d2_bound({2, 12, 6, 4}) == 20);
  CHECK_FALSE(d2_bound({2, 16, 6, 4}));

  // Closed-form coefficients against the expansion of (z - d)(z - d - delta),
  // which is the certificate up to the factor 4/n^2.
  for (const auto& p : small_params(3, 12)) {
    const D2Analysis a = d2_analysis(p);
    const RationalPoly f = RationalPoly::from_roots({Rational(p.d), Rational(p.far())});
    const auto c = kraw_expand(f, p.n, p.q);
    CHECK(a.f0 == c[0] * ratio(4, p.n * p.n));
    CHECK(a.f1 == c[1] * ratio(4, p.n * p.n));
    if (p.n >= 2) CHECK(a.f2 == c[2] * ratio(4, p.n * p.n));
    if (a.applicable()) CHECK(a.ratio == f(Rational(0)) / c[0]);
  }
}

TEST_CASE("distance distribution refinement") {
  CHECK(dd_refine({2, 12, 6, 4}, 20).value == 19);
  CHECK(dd_refine({2, 20, 10, 4}, 28).value == 27);
  CHECK(dd_refine({2, 16, 8, 6}, 28).value == 27);
  CHECK(dd_refine({2, 12, 6, 4}, 20).refuted);
  // The precondition is that B is exactly the integral degree-2 value.
  CHECK_THROWS_AS(dd_refine({2, 12, 6, 4}, 21), std::invalid_argument);
  CHECK_THROWS_AS(dd_refine({2, 16, 6, 4}, 10), std::invalid_argument);
}

TEST_CASE("refinement agrees with solving M1 = M2 = 0 directly") {
  for (const auto& p : small_params(3, 16)) {
    const D2Analysis a = d2_analysis(p);
    if (!a.applicable() || !a.f1_strict || !is_integral(a.ratio)) continue;
    const DdRefinement r = dd_refine(p, a.value);
    // Independent 2x2 solve with oracle Krawtchouk values.
    const oracle::BigInt B = a.value;
    const oracle::BigInt k1d = oracle::krawtchouk(p.n, p.q, 1, p.d), k1f = oracle::krawtchouk(p.n, p.q, 1, p.far());
    const oracle::BigInt k2d = oracle::krawtchouk(p.n, p.q, 2, p.d), k2f = oracle::krawtchouk(p.n, p.q, 2, p.far());
    const oracle::BigInt r1 = -oracle::krawtchouk(p.n, p.q, 1, 0), r2 = -oracle::krawtchouk(p.n, p.q, 2, 0);
    const oracle::BigInt det = k1d * k2f - k1f * k2d;
    INFO(p.str());
    if (det == 0) continue;
    const oracle::BigRat x = oracle::frac(r1 * k2f - k1f * r2, det);
    const oracle::BigRat y = oracle::frac(k1d * r2 - r1 * k2d, det);
    CHECK(r.a_near == x);
    CHECK(r.a_far == y);
    // An attaining code is distance invariant, so A_d and A_{d+delta} are
    // nonnegative integers summing to B - 1.
    const auto pairs_ok = [](const oracle::BigRat& a_j) {
      return a_j >= 0 && boost::multiprecision::denominator(a_j) == 1;
    };
    const bool possible = x + y + 1 == oracle::BigRat(B) && pairs_ok(x) && pairs_ok(y);
    CHECK(r.refuted == !possible);
  }
}

TEST_CASE("spherical bound") {
  CHECK(sphere_bound({2, 11, 4, 2}).value == 23);
  CHECK(sphere_bound({2, 13, 6, 4}).value == 27);
  CHECK(sphere_bound({3, 9, 1, 3}).value == 37);
  CHECK(sphere_bound({4, 8, 2, 5}).value == 49);
  for (TwoDistParams p : std::vector<TwoDistParams>{{2, 11, 4, 2}, {2, 13, 6, 4}, {3, 9, 1, 3}, {4, 8, 2, 5}})
    CHECK(sphere_bound(p).applicable);
  CHECK_FALSE(sphere_bound({3, 9, 3, 3}).applicable);
  CHECK(sphere_linear_dim_limit({2, 11, 4, 2}) == 4);
}

TEST_CASE("Gray-Rankin and Plotkin") {
  CHECK(gray_rankin_bound(2, 8, 4) == 16);
  CHECK(gray_rankin_bound(4, 8, 6) == 32);
  CHECK(gray_rankin_bound(3, 9, 6) == 27);
  CHECK(plotkin_bound({2, 10, 6, 2}) == 6);
  CHECK_FALSE(plotkin_bound({2, 10, 4, 2}));
}

TEST_CASE("best bound tags") {
  CHECK(best_upper_bound({2, 11, 2, 2}).tag() == "lp");
  CHECK(best_upper_bound({2, 9, 4, 2}).tag() == "d2");
  CHECK(best_upper_bound({2, 12, 6, 4}).tag() == "dd");
  CHECK(*best_upper_bound({2, 12, 6, 4}).best == 19);
  CHECK(best_upper_bound({2, 11, 4, 2}).tag() == "sc");
  CHECK(best_upper_bound({3, 6, 1, 2}).tag() == "exact");
  CHECK(best_upper_bound({2, 9, 3, 4}).tag().empty());

  ExternalBounds ext;
  ext.set(2, 11, 6, 12);
  const BoundReport tied = best_upper_bound({2, 11, 6, 2}, &ext);
  CHECK(tied.tag() == "*,d2");
  ext.set(2, 11, 6, 8);
  const BoundReport alone = best_upper_bound({2, 11, 6, 2}, &ext);
  CHECK(alone.tag() == "*");
  CHECK(*alone.best == 8);
}

TEST_CASE("external bounds CSV") {
  std::istringstream good("q,n,d,bound\n# Brouwer\n2,13,8,4\n\n2, 14, 8, 8\n");
  const auto t = ExternalBounds::parse(good);
  CHECK(t.size() == 2);
  CHECK(t.lookup(2, 14, 8) == Int(8));
  CHECK_FALSE(t.lookup(2, 14, 9));

  std::istringstream bad_header("q,n,bound\n");
  CHECK_THROWS_AS(ExternalBounds::parse(bad_header), ParseError);
  std::istringstream bad_row("q,n,d,bound\n2,13,8,4\n2,13,x,4\n");
  try {
    ExternalBounds::parse(bad_row);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream range("q,n,d,bound\n2,5,9,4\n");
  CHECK_THROWS_AS(ExternalBounds::parse(range), ParseError);
}
