#pragma once

#include <vector>

namespace twodist {

/// GF(p^m) with elements encoded as integers 0..q-1 whose base-p digits are
/// polynomial coefficients (lowest digit = constant term). The modulus is the
/// first primitive polynomial in ascending digit order, so x^2+x+1 for q=4,
/// x^3+x+1 for q=8, x^2+x+2 for q=9.
class Field {
 public:
  /// Throws std::invalid_argument unless q is a prime power <= 4096.
  explicit Field(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int m() const { return m_; }
  /// Coefficients c_0..c_{m-1} of the monic modulus (x^m + ...).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const { return sub(0, a); }
  int mul(int a, int b) const;
  int inv(int a) const;  // throws std::domain_error on 0
  /// alpha^e for the primitive element alpha = x.
  int exp(int e) const { return exp_[static_cast<std::size_t>(e % (q_ - 1))]; }

 private:
  int q_, p_, m_;
  std::vector<int> modulus_;
  std::vector<int> exp_;
  std::vector<int> log_;
};

}  // namespace twodist
