#pragma once

#include "twodist/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twodist {

struct PrimePower {
  int p;
  int m;
};

/// q = p^m by trial division; nullopt when q is not a prime power.
std::optional<PrimePower> prime_power(int q);
bool is_prime(int p);

/// p-adic valuation; nullopt stands for +infinity (a = 0).
std::optional<int> valuation(const Int& a, int p);

/// Parameters [n, k, {w1, w2}]_q of a linear two-weight code; s is the
/// column multiplicity of the complementary construction when known.
struct LinearParams {
  int q;
  int p;
  int m;
  int k;
  int n;
  int w1;
  int w2;
  std::optional<int> s;

  LinearParams(int q, int k, int n, int w1, int w2, std::optional<int> s = std::nullopt);
  int delta() const { return w2 - w1; }
  Int size() const;  // q^k
  std::string str() const;
};

struct Oa2Quadratic {
  Rational Q1, Q2;
  Rational residual;  // n^2 - n(Q1(u1+u2-1)+1) + Q2 u1 u2
  bool ok = false;    // residual == 0
  // The same identity read as a quadratic a n^2 + b n + c = 0 with the
  // weights held fixed (u_i = n - w_i).
  Rational a, b, c;
  Rational discriminant;
  bool discriminant_square = false;
  std::vector<Rational> roots;    // rational roots, ascending
  std::vector<int> positive_integer_roots;
  std::optional<Rational> full_weight_length;  // (Q1(w1+1) - 1)/(Q1 - 1) when w2 == n
};

/// Length condition for a two-weight code that is an orthogonal array of
/// strength >= 2. Throws std::domain_error if N <= q^2 or q^2 does not divide N.
Oa2Quadratic check_oa2_quadratic(int q, const Int& N, int n, int w1, int w2);

struct DelsarteForm {
  int p;
  int u;
  int h;
};

/// w1 = h p^u, w2 = (h+1) p^u, or nullopt. Throws if q is not a prime power.
std::optional<DelsarteForm> delsarte_form(int q, int w1, int w2);

struct MacWilliamsMu {
  enum class Status { Ok, Infeasible, Degenerate };
  Status status = Status::Infeasible;
  Rational mu1, mu2;
  Rational second_identity_residual;  // vanishes for projective codes
};

std::string to_string(MacWilliamsMu::Status s);

/// Weight counts from w1 mu1 + w2 mu2 = n(q-1)q^{k-1}, mu1 + mu2 = q^k - 1.
MacWilliamsMu macwilliams_mu(const LinearParams& lp);

struct SrgParams {
  Int N, K, lambda, mu;
  Int Delta;
  bool delta_matches = false;  // Delta == (q delta)^2
  Rational rho1, rho2;
  Rational e1, e2;                  // multiplicities from the eigenvalue formula
  Rational e1_alt, e2_alt;          // the closed form in terms of n, w1, w2
  bool alt_agrees = false;
  bool integral = false;            // e1, e2 nonnegative integers
};

/// Strongly regular graph parameters and integrality verdict of a projective
/// two-weight code. Throws std::domain_error when lambda or mu is negative.
SrgParams srg_analysis(const LinearParams& lp);

struct Valuations {
  std::optional<int> gamma_d;
  std::optional<int> gamma_delta;
  std::optional<int> gamma_c;
};

struct ClauseResult {
  std::string clause;  // "i", "ii", "iii", "iv"
  bool applies = false;
  bool holds = true;
  std::string detail;
};

struct GcdScreen {
  enum class Verdict { Pass, Fail, Abstain };
  int s = 1;
  int d_c = 0;
  int n_c = 0;
  Valuations valuations;
  std::vector<ClauseResult> clauses;
  Verdict verdict = Verdict::Abstain;
  std::string cited;  // clause deciding the verdict
};

std::string to_string(GcdScreen::Verdict v);

/// Valuation and gcd conditions for linear two-weight codes with k >= 2.
/// Uses lp.s (default 1). Throws std::invalid_argument if d_c < 0 or k < 2.
GcdScreen gcd_screen(const LinearParams& lp);

/// Runs gcd_screen for the supplied s, or for every s = 1..ceil(n(q-1)/(q^k-1))+1
/// with d_c >= 0 when s is unknown.
std::vector<GcdScreen> gcd_screen_all(const LinearParams& lp);

struct ConjecturalValue {
  Int value;
  std::string rule;
};

struct SpecialValues {
  std::optional<BoundStatus> status;  // ExactValue or NotWellDefined when a rule fires
  std::string rule;
  bool boundary = false;
  std::vector<ConjecturalValue> conjectures;  // lower bounds only
};

SpecialValues special_values(const TwoDistParams& p);

struct ComplementaryParams {
  int s;
  int n_c;
  int d_c;
  bool degenerate;  // d_c == 0 or n_c == 0
  // Weight counts of the complement: mu2 words of weight d_c, mu1 of weight d_c + delta.
  std::optional<Rational> mu_near;
  std::optional<Rational> mu_far;
};

/// Throws std::invalid_argument when no s gives n_c >= 0 and d_c >= 0.
std::vector<ComplementaryParams> complementary_params(const LinearParams& lp);

}  // namespace twodist
