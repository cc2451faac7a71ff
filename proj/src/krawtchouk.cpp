#include "twodist/krawtchouk.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twodist {

namespace {

void check_index(int n, int q, int i, int z) {
  if (q < 2) throw std::out_of_range("Krawtchouk: q must be >= 2");
  if (n < 0 || i < 0 || i > n || z < 0 || z > n)
    throw std::out_of_range("Krawtchouk: index out of range (n=" + std::to_string(n) +
                            ", i=" + std::to_string(i) + ", z=" + std::to_string(z) + ")");
}

}  // namespace

Int kraw_eval(int n, int q, int i, int z) {
  check_index(n, q, i, z);
  Int sum = 0;
  for (int j = 0; j <= i; ++j) {
    Int term = ipow(Int(q - 1), static_cast<unsigned>(i - j)) * binom(z, j) * binom(n - z, i - j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

Int kraw_norm(int n, int q, int i) {
  check_index(n, q, i, 0);
  return ipow(Int(q - 1), static_cast<unsigned>(i)) * binom(n, i);
}

Rational kraw_normalized(int n, int q, int i, int z) {
  return ratio(kraw_eval(n, q, i, z), kraw_norm(n, q, i));
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::from_roots(const std::vector<Rational>& roots, const Rational& scale) {
  RationalPoly p({scale});
  for (const auto& r : roots) p = p * RationalPoly({-r, Rational(1)});
  return p;
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPoly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
    if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
  }
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + Rational(-1) * b; }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const Rational& s, const RationalPoly& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return RationalPoly(std::move(c));
}

namespace {

// C(x + shift, k) as a polynomial in z, where x = sign * z.
RationalPoly binom_poly(int sign, int shift, int k) {
  RationalPoly p({Rational(1)});
  Int fact = 1;
  for (int m = 0; m < k; ++m) {
    p = p * RationalPoly({Rational(shift - m), Rational(sign)});
    fact *= m + 1;
  }
  return ratio(1, fact) * p;
}

}  // namespace

RationalPoly kraw_poly(int n, int q, int i) {
  check_index(n, q, i, 0);
  RationalPoly sum;
  for (int j = 0; j <= i; ++j) {
    Rational c = ipow(Int(q - 1), static_cast<unsigned>(i - j));
    if (j % 2) c = -c;
    sum = sum + c * (binom_poly(1, 0, j) * binom_poly(-1, n, i - j));
  }
  return sum;
}

Rational KrawtchoukCoeffs::evaluate(int z) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) acc += f[i] * kraw_normalized(n, q, static_cast<int>(i), z);
  return acc;
}

KrawtchoukCoeffs kraw_expand(const RationalPoly& p, int n, int q) {
  if (q < 2 || n < 0) throw std::invalid_argument("kraw_expand: need q >= 2, n >= 0");
  if (p.degree() > n)
    throw std::invalid_argument("kraw_expand: degree " + std::to_string(p.degree()) +
                                " exceeds n = " + std::to_string(n));
  KrawtchoukCoeffs out{n, q, std::vector<Rational>(static_cast<std::size_t>(n) + 1)};
  RationalPoly rest = p;
  // Q_m has degree exactly m, so each step strictly lowers the degree.
  for (int m = p.degree(); m >= 0; --m) {
    Rational lead = rest.coeff(m);
    if (lead == 0) continue;
    RationalPoly qm = ratio(1, kraw_norm(n, q, m)) * kraw_poly(n, q, m);
    Rational fm = lead / qm.coeff(m);
    out.f[static_cast<std::size_t>(m)] = fm;
    rest = rest - fm * qm;
  }
  return out;
}

RationalPoly t_to_z(const RationalPoly& in_t, int n) {
  const RationalPoly t_of_z({Rational(1), ratio(-2, n)});
  RationalPoly acc;
  const auto& c = in_t.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t_of_z + RationalPoly({*it});
  return acc;
}

}  // namespace twodist
