#include "twodist/field.hpp"

#include "twodist/feasibility.hpp"

#include <stdexcept>
#include <string>

namespace twodist {

namespace {

// a * x mod f, where f is monic of degree m with low coefficients `mod`.
int times_x(int a, int p, int m, const std::vector<int>& mod) {
  std::vector<int> d(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i < m; ++i) {
    d[static_cast<std::size_t>(i) + 1] = a % p;
    a /= p;
  }
  const int top = d[static_cast<std::size_t>(m)];
  int out = 0;
  for (int i = m - 1; i >= 0; --i) {
    const int c = ((d[static_cast<std::size_t>(i)] - top * mod[static_cast<std::size_t>(i)]) % p + p) % p;
    out = out * p + c;
  }
  return out;
}

}  // namespace

Field::Field(int q) : q_(q) {
  const auto pp = q <= 4096 ? prime_power(q) : std::nullopt;
  if (!pp) throw std::invalid_argument("Field: q = " + std::to_string(q) + " is not a supported prime power");
  p_ = pp->p;
  m_ = pp->m;
  modulus_.assign(static_cast<std::size_t>(m_), 0);

  // Search monic polynomials by the integer encoding of their low coefficients.
  for (int enc = 1; enc < q_; ++enc) {
    if (enc % p_ == 0) continue;  // x divides f
    int t = enc;
    for (int i = 0; i < m_; ++i) {
      modulus_[static_cast<std::size_t>(i)] = t % p_;
      t /= p_;
    }
    std::vector<int> ex(static_cast<std::size_t>(q_ - 1));
    int a = 1;
    bool primitive = true;
    for (int e = 0; e < q_ - 1; ++e) {
      if (e > 0 && a == 1) {
        primitive = false;
        break;
      }
      ex[static_cast<std::size_t>(e)] = a;
      a = m_ == 1 ? (a * enc) % p_ : times_x(a, p_, m_, modulus_);
    }
    if (!primitive || a != 1) continue;
    if (m_ == 1) {
      // Prime field: use the smallest primitive root as alpha.
      modulus_ = {(p_ - enc) % p_};
    }
    exp_ = std::move(ex);
    log_.assign(static_cast<std::size_t>(q_), -1);
    for (int e = 0; e < q_ - 1; ++e) log_[static_cast<std::size_t>(exp_[static_cast<std::size_t>(e)])] = e;
    return;
  }
  throw std::logic_error("Field: no primitive polynomial found");
}

int Field::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a + b) % p_;
  int out = 0;
  int scale = 1;
  while (a > 0 || b > 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

int Field::sub(int a, int b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a - b + p_) % p_;
  int out = 0;
  int scale = 1;
  while (a > 0 || b > 0) {
    out += ((a % p_ - b % p_ + p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

int Field::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  const int e = log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)];
  return exp_[static_cast<std::size_t>(e % (q_ - 1))];
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("Field: inverse of zero");
  const int e = (q_ - 1 - log_[static_cast<std::size_t>(a)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(e)];
}

}  // namespace twodist
