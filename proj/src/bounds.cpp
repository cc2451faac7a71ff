#include "twodist/bounds.hpp"

#include "twodist/feasibility.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace twodist {

namespace {

// a x + b y + c >= 0
struct HalfPlane {
  Int a, b, c;
};

std::vector<HalfPlane> lp_constraints(const TwoDistParams& p) {
  std::vector<HalfPlane> cons;
  cons.reserve(static_cast<std::size_t>(p.n) + 2);
  for (int i = 1; i <= p.n; ++i)
    cons.push_back({kraw_eval(p.n, p.q, i, p.d), kraw_eval(p.n, p.q, i, p.far()), kraw_eval(p.n, p.q, i, 0)});
  cons.push_back({1, 0, 0});
  cons.push_back({0, 1, 0});
  return cons;
}

bool ray_is_recession(const std::vector<HalfPlane>& cons, const Int& rx, const Int& ry) {
  if (rx < 0 || ry < 0 || rx + ry == 0) return false;
  return std::all_of(cons.begin(), cons.end(), [&](const HalfPlane& h) { return h.a * rx + h.b * ry >= 0; });
}

}  // namespace

LpSolution lp_solve(const TwoDistParams& p) {
  const auto cons = lp_constraints(p);

  // The objective is unbounded iff some nonzero ray of the quadrant stays
  // feasible; extreme rays of the recession cone lie on constraint boundaries.
  if (ray_is_recession(cons, 1, 0) || ray_is_recession(cons, 0, 1))
    throw LpUnbounded("LP unbounded for " + p.str());
  for (const auto& h : cons) {
    if (ray_is_recession(cons, h.b, -h.a) || ray_is_recession(cons, -h.b, h.a))
      throw LpUnbounded("LP unbounded for " + p.str());
  }

  // Vertices in homogeneous form (X, Y, W) with W > 0; the origin is always
  // feasible since K_i(0) > 0.
  Int best_num = 0;
  Int best_den = 1;
  Int best_x = 0, best_y = 0, best_w = 1;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const auto& u = cons[i];
      const auto& v = cons[j];
      Int w = u.a * v.b - v.a * u.b;
      if (w == 0) continue;
      Int x = v.c * u.b - u.c * v.b;
      Int y = u.a * v.c * -1 + v.a * u.c;
      // x = (-c_u b_v + c_v b_u)/det,  y = (-a_u c_v + a_v c_u)/det
      if (w < 0) {
        w = -w;
        x = -x;
        y = -y;
      }
      if (x < 0 || y < 0) continue;
      // Compare (x + y)/w against the incumbent before the feasibility scan.
      if ((x + y) * best_den <= best_num * w) continue;
      const bool feasible = std::all_of(cons.begin(), cons.end(),
                                        [&](const HalfPlane& h) { return h.a * x + h.b * y + h.c * w >= 0; });
      if (!feasible) continue;
      best_num = x + y;
      best_den = w;
      best_x = x;
      best_y = y;
      best_w = w;
    }
  }
  LpSolution s;
  s.a_near = ratio(best_x, best_w);
  s.a_far = ratio(best_y, best_w);
  s.optimum = 1 + s.a_near + s.a_far;
  s.value = floor(s.optimum);
  return s;
}

Int lp_bound(const TwoDistParams& p) { return lp_solve(p).value; }

std::optional<Int> plotkin_bound(const TwoDistParams& p) {
  const Int qd = Int(p.q) * p.d;
  const Int rhs = Int(p.q - 1) * p.n;
  if (qd <= rhs) return std::nullopt;
  return qd / (qd - rhs);
}

D2Analysis d2_analysis(const TwoDistParams& p) {
  const Int q = p.q, n = p.n, d = p.d, dl = p.delta;
  D2Analysis r;
  const Int f1_lhs = q * (2 * d + dl);
  const Int f1_rhs = 2 * n * q + 2 - 2 * n - q;
  r.f1_nonnegative = f1_lhs >= f1_rhs;
  r.f1_strict = f1_lhs > f1_rhs;
  const Int den = n * (q - 1) * (n * q - n + 1) - q * q * (2 * n * d + n * dl - d * d - d * dl) + n * q * (2 * d + dl);
  r.f0_positive = den > 0;
  r.f0 = ratio(4 * den, n * n * q * q);
  r.f1 = ratio(4 * (q - 1) * (2 * d * q + dl * q + 2 * n + q - 2 * n * q - 2), n * q * q);
  r.f2 = ratio(4 * (q - 1) * (q - 1) * (n - 1), n * q * q);
  if (r.applicable()) {
    r.ratio = ratio(d * (d + dl) * q * q, den);
    r.value = floor(r.ratio);
  }
  return r;
}

std::optional<Int> d2_bound(const TwoDistParams& p) {
  const D2Analysis a = d2_analysis(p);
  if (!a.applicable()) return std::nullopt;
  return a.value;
}

DdRefinement dd_refine(const TwoDistParams& p, const Int& B) {
  const D2Analysis a = d2_analysis(p);
  if (!a.applicable()) throw std::invalid_argument("dd_refine: degree-2 bound not applicable for " + p.str());
  if (!a.f1_strict) throw std::invalid_argument("dd_refine: f_1 > 0 is not strict for " + p.str());
  if (B != a.value) throw std::invalid_argument("dd_refine: B = " + B.str() + " is not the degree-2 value " + a.value.str());
  if (!is_integral(a.ratio))
    throw std::invalid_argument("dd_refine: degree-2 bound " + a.ratio.str() + " is not attained by an integer size");

  // Q_i(0) + A_d Q_i(d) + A_{d+delta} Q_i(d+delta) = 0 for i = 1, 2.
  std::array<std::array<Rational, 3>, 2> m;
  for (int i = 1; i <= 2; ++i)
    m[static_cast<std::size_t>(i - 1)] = {kraw_normalized(p.n, p.q, i, p.d), kraw_normalized(p.n, p.q, i, p.far()),
                                          -kraw_normalized(p.n, p.q, i, 0)};
  DdRefinement r;
  r.value = B;
  const Rational det = m[0][0] * m[1][1] - m[1][0] * m[0][1];
  if (det == 0) {
    r.solvable = false;
    return r;
  }
  r.a_near = (m[0][2] * m[1][1] - m[1][2] * m[0][1]) / det;
  r.a_far = (m[0][0] * m[1][2] - m[1][0] * m[0][2]) / det;
  const bool consistent = is_integral(r.a_near) && is_integral(r.a_far) && r.a_near >= 0 && r.a_far >= 0 &&
                          r.a_near + r.a_far == Rational(B - 1);
  if (!consistent) {
    r.refuted = true;
    r.value = B - 1;
  }
  return r;
}

std::optional<Int> gray_rankin_bound(int q_, int n_, int d_) {
  if (q_ < 2 || n_ < 1 || d_ < 1 || d_ > n_) return std::nullopt;
  const Int q = q_, n = n_, d = d_;
  const Int t = (q - 1) * n - q * d;
  const Int den = n - t * t;
  if (den <= 0) return std::nullopt;
  const Int num = q * q * (q * d - (q - 2) * n) * (n - d);
  if (num <= 0) return std::nullopt;
  return num / den;
}

SphereBound sphere_bound(const TwoDistParams& p) {
  SphereBound b;
  const int g = std::gcd(p.d, p.far());
  b.r = p.d / g;
  b.s = p.far() / g;
  const Int m2 = Int(2) * (p.q - 1) * p.n;
  b.value = m2 + 1;
  if (b.s - b.r >= 2) b.applicable = true;
  else if (b.s == b.r + 1) b.applicable = Int(2 * b.r + 1) * (2 * b.r + 1) > m2;
  return b;
}

std::optional<int> sphere_linear_dim_limit(const TwoDistParams& p) {
  const SphereBound b = sphere_bound(p);
  if (!b.applicable) return std::nullopt;
  int k = 0;
  Int power = p.q;
  while (power <= b.value) {
    ++k;
    power *= p.q;
  }
  return k;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::lp: return "lp";
    case Method::plotkin: return "plotkin";
    case Method::d2: return "d2";
    case Method::dd: return "dd";
    case Method::sc: return "sc";
    case Method::gr: return "gr";
    case Method::ext: return "ext";
  }
  return "?";
}

const BoundEntry* BoundReport::entry(Method m) const {
  for (const auto& e : entries)
    if (e.method == m) return &e;
  return nullptr;
}

std::string BoundReport::tag() const {
  if (special) return special->kind == BoundStatus::Kind::NotWellDefined ? "" : "exact";
  std::string t;
  if (best_matches_external) t = "*";
  if (!best_methods.empty() && best_methods.front() != Method::ext) {
    if (!t.empty()) t += ",";
    t += to_string(best_methods.front());
  }
  return t;
}

BoundReport best_upper_bound(const TwoDistParams& p, const ExternalBounds* external) {
  BoundReport r{p, std::nullopt, "", {}, std::nullopt, {}, false};
  const SpecialValues sv = special_values(p);
  if (sv.status) {
    r.special = sv.status;
    r.special_rule = sv.rule;
    if (sv.status->kind == BoundStatus::Kind::ExactValue) r.best = sv.status->hi;
    return r;
  }

  try {
    const LpSolution lp = lp_solve(p);
    r.entries.push_back({Method::lp, lp.value, true,
                         "optimum " + lp.optimum.str() + " at A_d=" + lp.a_near.str() + ", A_{d+delta}=" + lp.a_far.str()});
  } catch (const LpUnbounded& e) {
    r.entries.push_back({Method::lp, std::nullopt, true, e.what()});
  }

  r.entries.push_back({Method::plotkin, plotkin_bound(p), true, ""});

  const D2Analysis d2 = d2_analysis(p);
  if (d2.applicable()) {
    r.entries.push_back({Method::d2, d2.value, true, "f(1)/f_0 = " + d2.ratio.str()});
    if (d2.f1_strict && is_integral(d2.ratio)) {
      const DdRefinement dd = dd_refine(p, d2.value);
      r.entries.push_back({Method::dd, dd.value, true,
                           dd.refuted ? "distance distribution A_d=" + dd.a_near.str() + ", A_{d+delta}=" + dd.a_far.str() +
                                            " is impossible"
                                      : "distance distribution consistent"});
    } else {
      r.entries.push_back({Method::dd, std::nullopt, true, d2.f1_strict ? "bound not integral" : "f_1 = 0"});
    }
  } else {
    r.entries.push_back({Method::d2, std::nullopt, true, d2.f1_nonnegative ? "f_0 <= 0" : "f_1 < 0"});
  }

  const SphereBound sc = sphere_bound(p);
  r.entries.push_back({Method::sc, sc.applicable ? std::optional<Int>(sc.value) : std::nullopt, true,
                       "d/(d+delta) = " + std::to_string(sc.r) + "/" + std::to_string(sc.s)});

  r.entries.push_back({Method::gr, gray_rankin_bound(p.q, p.n, p.d), false, "antipodal codes only"});

  if (external) {
    const auto v = external->lookup(p.q, p.n, p.d);
    r.entries.push_back({Method::ext, v, true, v ? "external A_q(n,d) table" : "no external entry"});
  }

  for (const auto& e : r.entries)
    if (e.counts_toward_best && e.value && (!r.best || *e.value < *r.best)) r.best = e.value;
  if (r.best) {
    static constexpr std::array<Method, 5> order{Method::d2, Method::dd, Method::sc, Method::lp, Method::plotkin};
    for (Method m : order) {
      const BoundEntry* e = r.entry(m);
      if (e && e->value && *e->value == *r.best) r.best_methods.push_back(m);
    }
    const BoundEntry* ext = r.entry(Method::ext);
    r.best_matches_external = ext && ext->value && *ext->value == *r.best;
    if (r.best_methods.empty() && r.best_matches_external) r.best_methods.push_back(Method::ext);
  }
  return r;
}

}  // namespace twodist
