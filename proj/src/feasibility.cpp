#include "twodist/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twodist {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, m};
}

std::optional<int> valuation(const Int& a, int p) {
  if (a == 0) return std::nullopt;
  Int x = a < 0 ? Int(-a) : a;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

namespace {

PrimePower require_prime_power(int q) {
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

Int gcd_int(const Int& a, const Int& b) {
  Int x = a < 0 ? Int(-a) : a;
  Int y = b < 0 ? Int(-b) : b;
  while (y != 0) {
    Int t = x % y;
    x = y;
    y = t;
  }
  return x;
}

std::string show(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("inf"); }

}  // namespace

LinearParams::LinearParams(int q_, int k_, int n_, int w1_, int w2_, std::optional<int> s_)
    : q(q_), p(0), m(0), k(k_), n(n_), w1(w1_), w2(w2_), s(s_) {
  const PrimePower pp = require_prime_power(q);
  p = pp.p;
  m = pp.m;
  if (k < 1 || n < 1) throw std::invalid_argument("LinearParams: k and n must be positive");
  if (w1 < 1 || w1 >= w2 || w2 > n) throw std::invalid_argument("LinearParams: need 1 <= w1 < w2 <= n");
  if (s) {
    if (*s < 1) throw std::invalid_argument("LinearParams: s must be >= 1");
    if (Int(n) * (q - 1) > Int(*s) * (size() - 1))
      throw std::invalid_argument("LinearParams: n exceeds s(q^k - 1)/(q - 1)");
  }
}

Int LinearParams::size() const { return ipow(Int(q), static_cast<unsigned>(k)); }

std::string LinearParams::str() const {
  std::ostringstream os;
  os << "[" << n << "," << k << ",{" << w1 << "," << w2 << "}]_" << q;
  if (s) os << " s=" << *s;
  return os.str();
}

Oa2Quadratic check_oa2_quadratic(int q, const Int& N, int n, int w1, int w2) {
  const Int qq = Int(q) * q;
  if (N <= qq) throw std::domain_error("check_oa2_quadratic: need N > q^2");
  if (N % qq != 0) throw std::domain_error("check_oa2_quadratic: N/q^2 is not an integer");
  if (!(w1 < w2 && w2 <= n)) throw std::invalid_argument("check_oa2_quadratic: need w1 < w2 <= n");

  Oa2Quadratic r;
  r.Q1 = ratio(Int(q) * (N - q), N - qq);
  r.Q2 = ratio(qq * (N - 1), N - qq);
  const Rational u1 = n - w1;
  const Rational u2 = n - w2;
  r.residual = Rational(n) * n - Rational(n) * (r.Q1 * (u1 + u2 - 1) + 1) + r.Q2 * u1 * u2;
  r.ok = r.residual == 0;

  r.a = 1 - 2 * r.Q1 + r.Q2;
  r.b = r.Q1 * (w1 + w2 + 1) - 1 - r.Q2 * (w1 + w2);
  r.c = r.Q2 * w1 * w2;
  if (r.a == 0) {
    if (r.b != 0) r.roots.push_back(-r.c / r.b);
    r.discriminant_square = true;
  } else {
    r.discriminant = r.b * r.b - 4 * r.a * r.c;
    r.discriminant_square = is_rational_square(r.discriminant);
    if (r.discriminant_square) {
      const Rational root(exact_isqrt(numer(r.discriminant)), exact_isqrt(denom(r.discriminant)));
      r.roots.push_back((-r.b - root) / (2 * r.a));
      if (root != 0) r.roots.push_back((-r.b + root) / (2 * r.a));
      std::sort(r.roots.begin(), r.roots.end());
    }
  }
  for (const auto& x : r.roots)
    if (x > 0 && is_integral(x)) r.positive_integer_roots.push_back(to_i64(numer(x)));
  if (w2 == n) r.full_weight_length = (r.Q1 * (w1 + 1) - 1) / (r.Q1 - 1);
  return r;
}

std::optional<DelsarteForm> delsarte_form(int q, int w1, int w2) {
  const PrimePower pp = require_prime_power(q);
  if (w1 < 1 || w2 <= w1) return std::nullopt;
  const int delta = w2 - w1;
  const int u = *valuation(delta, pp.p);
  if (delta != ipow64(pp.p, static_cast<unsigned>(u))) return std::nullopt;
  if (w1 % delta != 0) return std::nullopt;
  return DelsarteForm{pp.p, u, w1 / delta};
}

std::string to_string(MacWilliamsMu::Status s) {
  switch (s) {
    case MacWilliamsMu::Status::Ok: return "ok";
    case MacWilliamsMu::Status::Infeasible: return "infeasible";
    case MacWilliamsMu::Status::Degenerate: return "degenerate";
  }
  return "?";
}

MacWilliamsMu macwilliams_mu(const LinearParams& lp) {
  const Int qk = lp.size();
  const Int total = Int(lp.n) * (lp.q - 1) * (qk / lp.q);
  MacWilliamsMu r;
  r.mu2 = ratio(total - Int(lp.w1) * (qk - 1), Int(lp.delta()));
  r.mu1 = Rational(qk - 1) - r.mu2;
  const Rational nq = Rational(lp.n) * (lp.q - 1);
  const Rational qk2 = Rational(qk) / (Int(lp.q) * lp.q);
  r.second_identity_residual =
      Rational(lp.w1) * lp.w1 * r.mu1 + Rational(lp.w2) * lp.w2 * r.mu2 - nq * (nq + 1) * qk2;
  if (!is_integral(r.mu1) || !is_integral(r.mu2) || r.mu1 < 0 || r.mu2 < 0)
    r.status = MacWilliamsMu::Status::Infeasible;
  else if (r.mu1 == 0 || r.mu2 == 0)
    r.status = MacWilliamsMu::Status::Degenerate;
  else
    r.status = MacWilliamsMu::Status::Ok;
  return r;
}

SrgParams srg_analysis(const LinearParams& lp) {
  if (lp.k < 2) throw std::invalid_argument("srg_analysis: need k >= 2");
  SrgParams r;
  const Int q = lp.q;
  const Int w1 = lp.w1;
  const Int w2 = lp.w2;
  r.N = lp.size();
  r.K = Int(lp.n) * (q - 1);
  r.lambda = r.K * (r.K + 3) - q * (w1 + w2) * (r.K + 1) + q * q * w1 * w2;
  r.mu = r.K * (r.K + 1) - r.K * q * (w1 + w2) + q * q * w1 * w2;
  if (r.lambda < 0 || r.mu < 0)
    throw std::domain_error("srg_analysis: lambda = " + r.lambda.str() + ", mu = " + r.mu.str() +
                            " cannot belong to a strongly regular graph");
  const Int lm = r.lambda - r.mu;
  r.Delta = lm * lm + 4 * (r.K - r.mu);
  const Int qd = q * lp.delta();
  r.delta_matches = r.Delta == qd * qd;
  const Int root = exact_isqrt(r.Delta);
  if (root > 0) {
    r.rho1 = ratio(lm + root, 2);
    r.rho2 = ratio(lm - root, 2);
    const Rational frac = ratio((r.N - 1) * lm + 2 * r.K, root);
    r.e1 = (Rational(r.N - 1) + frac) / 2;
    r.e2 = (Rational(r.N - 1) - frac) / 2;
    r.integral = is_integral(r.e1) && is_integral(r.e2) && r.e1 >= 0 && r.e2 >= 0;
  }
  const Rational frac_alt =
      ratio(r.N * (2 * Int(lp.n) * (q - 1) - q * (w1 + w2)), q * (w1 - w2));
  r.e1_alt = (Rational(r.N - 1) + frac_alt) / 2;
  r.e2_alt = (Rational(r.N - 1) - frac_alt) / 2;
  r.alt_agrees = (r.e1 == r.e1_alt && r.e2 == r.e2_alt) || (r.e1 == r.e2_alt && r.e2 == r.e1_alt);
  return r;
}

std::string to_string(GcdScreen::Verdict v) {
  switch (v) {
    case GcdScreen::Verdict::Pass: return "pass";
    case GcdScreen::Verdict::Fail: return "fail";
    case GcdScreen::Verdict::Abstain: return "abstain";
  }
  return "?";
}

GcdScreen gcd_screen(const LinearParams& lp) {
  if (lp.k < 2) throw std::invalid_argument("gcd_screen: need k >= 2");
  GcdScreen g;
  g.s = lp.s.value_or(1);
  const Int qk = lp.size();
  const Int dc = Int(g.s) * (qk / lp.q) - lp.w2;
  const Int nc = Int(g.s) * ((qk - 1) / (lp.q - 1)) - lp.n;
  if (dc < 0) throw std::invalid_argument("gcd_screen: d_c < 0, s = " + std::to_string(g.s) + " is inconsistent");
  if (nc < 0) throw std::invalid_argument("gcd_screen: n_c < 0, s = " + std::to_string(g.s) + " is inconsistent");
  g.d_c = to_i64(dc);
  g.n_c = to_i64(nc);

  const int d = lp.w1;
  const int delta = lp.delta();
  g.valuations = {valuation(d, lp.p), valuation(delta, lp.p), valuation(g.d_c, lp.p)};
  const auto& v = g.valuations;
  const bool gd = v.gamma_d && v.gamma_d == v.gamma_delta;
  const bool gc = v.gamma_c && v.gamma_c == v.gamma_delta;
  std::ostringstream vals;
  vals << "gamma_d=" << show(v.gamma_d) << " gamma_delta=" << show(v.gamma_delta)
       << " gamma_c=" << show(v.gamma_c);

  const Int q = lp.q;
  const Int gcd_d = gcd_int(q, d);
  const Int gcd_delta = gcd_int(q, delta);
  const Int gcd_c = gcd_int(q, g.d_c);
  const bool both_gcd = gcd_d == gcd_delta && gcd_c == gcd_delta;
  std::ostringstream gcds;
  gcds << "(q,d)=" << gcd_d << " (q,delta)=" << gcd_delta << " (q,d_c)=" << gcd_c;

  const bool s1 = g.s == 1;
  {
    ClauseResult c{"i", s1 && lp.k >= 4, true, gcds.str()};
    if (c.applies) c.holds = both_gcd;
    g.clauses.push_back(c);
  }
  {
    ClauseResult c{"ii", s1 && lp.k == 3, true, ""};
    if (c.applies) {
      const Int nn = Int(lp.n) * (lp.n - 1);
      const Int ncnc = Int(g.n_c) * (g.n_c - 1);
      const bool first = gcd_d * gcd_d <= q * gcd_int(nn, q);
      const Int gcd_far = gcd_int(lp.w2, q);
      const bool second = gcd_far * gcd_far > q * gcd_int(ncnc, q);
      c.holds = !(first || second) || both_gcd;
      std::ostringstream os;
      os << gcds.str() << "; trigger (d,q)^2 <= q(n(n-1),q): " << (first ? "yes" : "no")
         << "; trigger (d+delta,q)^2 > q(n_c(n_c-1),q): " << (second ? "yes" : "no");
      c.detail = os.str();
    }
    g.clauses.push_back(c);
  }
  {
    ClauseResult c{"iii", s1 && lp.k >= 2, true, vals.str()};
    if (c.applies) c.holds = gd || gc;
    g.clauses.push_back(c);
  }
  {
    ClauseResult c{"iv", lp.k >= 3, true, vals.str()};
    if (c.applies) c.holds = gd || gc;
    g.clauses.push_back(c);
  }

  const bool any = std::any_of(g.clauses.begin(), g.clauses.end(), [](const ClauseResult& c) { return c.applies; });
  if (!any) {
    g.verdict = GcdScreen::Verdict::Abstain;
    g.cited = "k = 2 with s > 1: no condition applies";
    return g;
  }
  for (const auto& c : g.clauses) {
    if (c.applies && !c.holds) {
      g.verdict = GcdScreen::Verdict::Fail;
      g.cited = c.clause + ": " + c.detail;
      return g;
    }
  }
  g.verdict = GcdScreen::Verdict::Pass;
  std::string via = gc ? "gamma_c = gamma_delta" : (gd ? "gamma_d = gamma_delta" : "no valuation equality needed");
  if (gd && gc) via = "gamma_d = gamma_delta = gamma_c";
  g.cited = via + " (" + vals.str() + ")";
  return g;
}

std::vector<GcdScreen> gcd_screen_all(const LinearParams& lp) {
  if (lp.s) return {gcd_screen(lp)};
  std::vector<GcdScreen> out;
  const Int qk = lp.size();
  const Int smax = (Int(lp.n) * (lp.q - 1) + qk - 2) / (qk - 1) + 1;
  for (int s = 1; s <= to_i64(smax); ++s) {
    const Int dc = Int(s) * (qk / lp.q) - lp.w2;
    const Int nc = Int(s) * ((qk - 1) / (lp.q - 1)) - lp.n;
    if (dc < 0 || nc < 0) continue;
    LinearParams with_s = lp;
    with_s.s = s;
    out.push_back(gcd_screen(with_s));
  }
  return out;
}

SpecialValues special_values(const TwoDistParams& p) {
  SpecialValues sv;
  const int q = p.q, n = p.n, d = p.d, delta = p.delta, far = p.far();
  auto nwd = [&](const char* rule) {
    sv.status = BoundStatus::not_well_defined({"exact"});
    sv.rule = rule;
  };
  if (q == 2) {
    const bool d_odd = d % 2 == 1;
    const bool far_odd = far % 2 == 1;
    if (d_odd && far_odd) nwd("binary: both distances odd");
    else if (d_odd && !far_odd && 2 * n < 3 * d - delta) nwd("binary: d odd, d+delta even, n < (3d-delta)/2");
    else if (d_odd && !far_odd && d < delta) nwd("binary: d odd, d+delta even, d < delta");
    else if (far == n && n != 2 * d) nwd("binary: d+delta = n, n != 2d");
    else if (far == n - 1 && 2 * d > n + 1) nwd("binary: d+delta = n-1, 2d > n+1");
    else if (d_odd && delta == d) {
      const int disjoint = 1 + n / d;
      sv.boundary = disjoint <= 4;
      sv.status = BoundStatus::exact(std::max(4, disjoint), {"exact"});
      sv.rule = "binary: d odd, distances {d, 2d}: 1 + floor(n/d) disjoint supports";
    }
  } else if (q == 3 && d == 1 && delta == 2 && n >= 4) {
    sv.status = BoundStatus::exact(6, {"exact"});
    sv.rule = "ternary: distances {1, 3}";
  }
  if (!sv.status && pair_shapes(p).empty()) nwd("no two words realise both distances");

  if (d == 2 && delta == 2 && q >= 2 && q <= 4 && n >= 6)
    sv.conjectures.push_back({binom(n, 2) + 1, "zero word and all weight-2 words"});
  if (q == 2 && d == 2 && delta >= 3 && n >= 6)
    sv.conjectures.push_back({Int(far == n - 1 ? n + 1 : n), "binary {2, 2+delta}, delta >= 3"});
  return sv;
}

std::vector<ComplementaryParams> complementary_params(const LinearParams& lp) {
  const Int qk = lp.size();
  std::vector<int> candidates;
  if (lp.s) {
    candidates.push_back(*lp.s);
  } else {
    const Int smax = (Int(lp.n) * (lp.q - 1) + qk - 2) / (qk - 1) + 1;
    for (int s = 1; s <= to_i64(smax); ++s) candidates.push_back(s);
  }
  const MacWilliamsMu mw = macwilliams_mu(lp);
  std::vector<ComplementaryParams> out;
  for (int s : candidates) {
    const Int nc = Int(s) * ((qk - 1) / (lp.q - 1)) - lp.n;
    const Int dc = Int(s) * (qk / lp.q) - lp.w2;
    if (nc < 0 || dc < 0) continue;
    ComplementaryParams c{s, static_cast<int>(to_i64(nc)), static_cast<int>(to_i64(dc)), nc == 0 || dc == 0,
                          std::nullopt, std::nullopt};
    if (mw.status != MacWilliamsMu::Status::Infeasible) {
      c.mu_near = mw.mu2;
      c.mu_far = mw.mu1;
    }
    out.push_back(c);
  }
  if (out.empty()) throw std::invalid_argument("complementary_params: no s gives n_c >= 0 and d_c >= 0 for " + lp.str());
  return out;
}

}  // namespace twodist
