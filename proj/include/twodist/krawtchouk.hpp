#pragma once

#include "twodist/rational.hpp"

#include <vector>

namespace twodist {

/// K_i^{(n,q)}(z) = sum_j (-1)^j (q-1)^{i-j} C(z,j) C(n-z,i-j), exact.
/// Throws std::out_of_range unless 0 <= i,z <= n and q >= 2.
Int kraw_eval(int n, int q, int i, int z);

/// r_i = (q-1)^i C(n,i), the value K_i(0).
Int kraw_norm(int n, int q, int i);

/// Normalized Q_i = K_i / r_i evaluated at distance z.
Rational kraw_normalized(int n, int q, int i, int z);

/// Polynomial in the distance variable z with exact rational coefficients,
/// stored in ascending powers. The zero polynomial has no coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);

  /// (z - root) for each root, times `scale`.
  static RationalPoly from_roots(const std::vector<Rational>& roots, const Rational& scale = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;

  Rational operator()(const Rational& z) const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// K_i^{(n,q)} as a polynomial in z.
RationalPoly kraw_poly(int n, int q, int i);

/// Coefficients f_0..f_n of p(z) = sum_i f_i Q_i(z) on the nodes z = 0..n.
struct KrawtchoukCoeffs {
  int n = 0;
  int q = 2;
  std::vector<Rational> f;

  const Rational& operator[](std::size_t i) const { return f[i]; }
  /// sum_i f_i Q_i(z)
  Rational evaluate(int z) const;
};

/// Expands p (deg p <= n) in the normalized Krawtchouk basis by peeling off
/// leading terms from the top degree down. Throws std::invalid_argument if
/// deg p > n.
KrawtchoukCoeffs kraw_expand(const RationalPoly& p, int n, int q);

/// Converts a polynomial in the inner-product variable t to the distance
/// variable z via t = 1 - 2z/n.
RationalPoly t_to_z(const RationalPoly& in_t, int n);

}  // namespace twodist
