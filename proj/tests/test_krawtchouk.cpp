#include "doctest.h"
#include "oracles.hpp"

#include "twodist/krawtchouk.hpp"

using namespace twodist;

TEST_CASE("kraw_eval matches the generating-function oracle") {
  for (int q = 2; q <= 5; ++q)
    for (int n = 1; n <= 12; ++n)
      for (int i = 0; i <= n; ++i)
        for (int z = 0; z <= n; ++z) CHECK(kraw_eval(n, q, i, z) == oracle::krawtchouk(n, q, i, z));
}

TEST_CASE("known small values") {
  CHECK(kraw_eval(8, 2, 1, 4) == 0);
  CHECK(kraw_eval(8, 2, 2, 4) == -4);
  CHECK(kraw_eval(5, 3, 1, 2) == 4);
  CHECK(kraw_norm(7, 2, 3) == 35);
  CHECK(kraw_normalized(8, 2, 1, 2) == ratio(1, 2));
  CHECK_THROWS_AS(kraw_eval(5, 2, 6, 0), std::out_of_range);
  CHECK_THROWS_AS(kraw_eval(5, 1, 1, 0), std::out_of_range);
}

TEST_CASE("orthogonality with respect to the binomial weight") {
  // sum_z C(n,z)(q-1)^z K_i(z) K_j(z) = q^n (q-1)^i C(n,i) [i == j]
  for (int q = 2; q <= 4; ++q)
    for (int n = 1; n <= 9; ++n) {
      const Int qn = ipow(Int(q), static_cast<unsigned>(n));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          Int s = 0;
          for (int z = 0; z <= n; ++z)
            s += binom(n, z) * ipow(Int(q - 1), static_cast<unsigned>(z)) * kraw_eval(n, q, i, z) * kraw_eval(n, q, j, z);
          CHECK(s == (i == j ? qn * kraw_norm(n, q, i) : Int(0)));
        }
    }
}

TEST_CASE("reciprocity r_z K_i(z) = r_i K_z(i)") {
  for (int q = 2; q <= 4; ++q)
    for (int n = 1; n <= 10; ++n)
      for (int i = 0; i <= n; ++i)
        for (int z = 0; z <= n; ++z)
          CHECK(kraw_norm(n, q, z) * kraw_eval(n, q, i, z) == kraw_norm(n, q, i) * kraw_eval(n, q, z, i));
}

TEST_CASE("polynomial form agrees with point evaluation") {
  for (int q = 2; q <= 3; ++q)
    for (int n = 1; n <= 10; ++n)
      for (int i = 0; i <= n; ++i) {
        const RationalPoly p = kraw_poly(n, q, i);
        CHECK(p.degree() == i);
        for (int z = 0; z <= n; ++z) CHECK(p(Rational(z)) == Rational(kraw_eval(n, q, i, z)));
      }
}

TEST_CASE("expansion in the normalized basis reproduces the polynomial") {
  const int n = 9, q = 2;
  const RationalPoly p = RationalPoly::from_roots({Rational(3), Rational(5)}, Rational(2));
  const auto f = kraw_expand(p, n, q);
  for (int z = 0; z <= n; ++z) CHECK(f.evaluate(z) == p(Rational(z)));
  // f_0 is the average of p over the weighted space.
  Rational avg = 0;
  for (int z = 0; z <= n; ++z) avg += Rational(binom(n, z)) * p(Rational(z));
  CHECK(f[0] == avg / Rational(ipow(Int(2), n)));

  std::vector<Rational> big(12, Rational(0));
  big.back() = 1;
  CHECK_THROWS_AS(kraw_expand(RationalPoly(big), n, q), std::invalid_argument);
}

TEST_CASE("t_to_z substitutes t = 1 - 2z/n") {
  const int n = 8;
  const RationalPoly t_sq({Rational(0), Rational(0), Rational(1)});
  const RationalPoly z = t_to_z(t_sq, n);
  for (int k = 0; k <= n; ++k) {
    const Rational t = Rational(1) - ratio(2 * k, n);
    CHECK(z(Rational(k)) == t * t);
  }
}
