#pragma once

#include "twodist/core.hpp"
#include "twodist/krawtchouk.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace twodist {

/// The restricted Delsarte LP has no finite optimum.
class LpUnbounded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optimal vertex of
///   max 1 + A_d + A_{d+delta}
///   s.t. A_d, A_{d+delta} >= 0,
///        K_i(0) + A_d K_i(d) + A_{d+delta} K_i(d+delta) >= 0   (i = 1..n).
struct LpSolution {
  Rational optimum;
  Rational a_near;  // A_d at the optimal vertex
  Rational a_far;   // A_{d+delta}
  Int value;        // floor(optimum)
};

/// Solves the LP exactly by enumerating the vertices of the 2-D feasible
/// polygon. Throws LpUnbounded when the polygon is unbounded.
LpSolution lp_solve(const TwoDistParams& p);
Int lp_bound(const TwoDistParams& p);

/// floor(qd / (qd - (q-1)n)) when qd > (q-1)n.
std::optional<Int> plotkin_bound(const TwoDistParams& p);

/// Degree-2 certificate f(t) = (t - 1 + 2d/n)(t - 1 + 2(d+delta)/n).
struct D2Analysis {
  bool f1_nonnegative = false;  // q(2d+delta) >= 2nq + 2 - 2n - q
  bool f1_strict = false;
  bool f0_positive = false;
  Rational f0, f1, f2;  // Krawtchouk coefficients
  Rational ratio;       // f(1)/f_0, meaningful when applicable()
  Int value = 0;        // floor(ratio)

  bool applicable() const { return f1_nonnegative && f0_positive; }
};

D2Analysis d2_analysis(const TwoDistParams& p);
std::optional<Int> d2_bound(const TwoDistParams& p);

/// Solution of M_1 = M_2 = 0 for a putative code of size B that attains the
/// degree-2 bound.
struct DdRefinement {
  Int value;          // B or B - 1
  bool refuted = false;
  bool solvable = true;  // the 2x2 system was nonsingular
  Rational a_near, a_far;
};

/// Single-step refinement of the degree-2 bound. Throws std::invalid_argument
/// unless B is exactly the degree-2 value, f_1 > 0 strictly and f(1)/f_0 is an
/// integer (only then must an attaining code have strength 2).
DdRefinement dd_refine(const TwoDistParams& p, const Int& B);

/// Antipodal-code bound N <= q * q(qd - (q-2)n)(n-d) / (n - ((q-1)n - qd)^2).
std::optional<Int> gray_rankin_bound(int q, int n, int d);

struct SphereBound {
  bool applicable = false;
  Int value = 0;  // 2(q-1)n + 1
  int r = 0;      // d/(d+delta) = r/s in lowest terms
  int s = 0;
};

SphereBound sphere_bound(const TwoDistParams& p);

/// Largest k with q^k <= 2(q-1)n + 1, when the spherical bound applies.
std::optional<int> sphere_linear_dim_limit(const TwoDistParams& p);

/// Upper bounds on A_q(n, d) ingested from CSV with header `q,n,d,bound`.
class ExternalBounds {
 public:
  static ExternalBounds parse(std::istream& in);
  static ExternalBounds load(const std::string& path);

  void set(int q, int n, int d, Int bound) { table_[{q, n, d}] = std::move(bound); }
  std::optional<Int> lookup(int q, int n, int d) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::tuple<int, int, int>, Int> table_;
};

enum class Method { lp, plotkin, d2, dd, sc, gr, ext };

std::string to_string(Method m);

struct BoundEntry {
  Method method;
  std::optional<Int> value;  // nullopt: not applicable
  bool counts_toward_best = true;
  std::string note;
};

struct BoundReport {
  TwoDistParams params;
  /// Set when the special-value screen settles the query outright.
  std::optional<BoundStatus> special;
  std::string special_rule;
  std::vector<BoundEntry> entries;
  std::optional<Int> best;
  /// Methods attaining `best`, in display precedence (d2, dd, sc, lp, plotkin);
  /// dd only attains it alone, when the refinement actually lowered d2.
  std::vector<Method> best_methods;
  bool best_matches_external = false;

  const BoundEntry* entry(Method m) const;
  /// Display tag, e.g. "d2", "*,d2", "sc", "exact".
  std::string tag() const;
};

BoundReport best_upper_bound(const TwoDistParams& p, const ExternalBounds* external = nullptr);

}  // namespace twodist
