#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's arithmetic; each oracle recomputes from first
// principles so a shared bug cannot cancel out.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Word = std::vector<std::uint8_t>;

inline BigRat frac(BigInt a, BigInt b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  return BigRat(a, b);
}

// Coefficient of t^i in (1 + (q-1)t)^(n-z) (1 - t)^z.
inline BigInt krawtchouk(int n, int q, int i, int z) {
  std::vector<BigInt> poly{1};
  auto mul = [&](BigInt c0, BigInt c1) {
    std::vector<BigInt> out(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      out[k] += poly[k] * c0;
      out[k + 1] += poly[k] * c1;
    }
    poly = out;
  };
  for (int k = 0; k < n - z; ++k) mul(1, q - 1);
  for (int k = 0; k < z; ++k) mul(1, -1);
  return i < static_cast<int>(poly.size()) ? poly[static_cast<std::size_t>(i)] : BigInt(0);
}

inline BigInt choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline int distance(const Word& a, const Word& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// Number of unordered pairs at each distance.
inline std::map<int, long long> pair_histogram(const std::vector<Word>& words) {
  std::map<int, long long> h;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) ++h[distance(words[i], words[j])];
  return h;
}

// Largest t such that every t-subset of columns shows every t-tuple equally often.
inline int strength(const std::vector<Word>& words, int q) {
  const int n = static_cast<int>(words.front().size());
  int best = 0;
  for (int t = 1; t <= n; ++t) {
    std::vector<int> cols(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) cols[static_cast<std::size_t>(i)] = i;
    long long cells = 1;
    for (int i = 0; i < t; ++i) cells *= q;
    if (static_cast<long long>(words.size()) % cells) return best;
    while (true) {
      std::map<std::vector<int>, long long> counts;
      for (const auto& w : words) {
        std::vector<int> key;
        for (int c : cols) key.push_back(w[static_cast<std::size_t>(c)]);
        ++counts[key];
      }
      if (static_cast<long long>(counts.size()) != cells) return best;
      for (const auto& [k, v] : counts)
        if (v != static_cast<long long>(words.size()) / cells) return best;
      int i = t - 1;
      while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - t + i) --i;
      if (i < 0) break;
      ++cols[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j) - 1] + 1;
    }
    best = t;
  }
  return best;
}

// Strongly regular parameters read off an explicit graph, or nothing.
struct Srg {
  long long N = 0, K = 0, lambda = 0, mu = 0;
  long long e1 = 0, e2 = 0;  // multiplicities of the larger and smaller restricted eigenvalues
  bool ok = false;
};

inline Srg srg_from_graph(const std::vector<std::vector<bool>>& adj) {
  Srg s;
  s.N = static_cast<long long>(adj.size());
  s.K = std::count(adj[0].begin(), adj[0].end(), true);
  long long lam = -1, mu = -1;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (std::count(adj[i].begin(), adj[i].end(), true) != s.K) return s;
    for (std::size_t j = 0; j < adj.size(); ++j) {
      if (i == j) continue;
      long long common = 0;
      for (std::size_t k = 0; k < adj.size(); ++k) common += adj[i][k] && adj[j][k];
      long long& slot = adj[i][j] ? lam : mu;
      if (slot >= 0 && slot != common) return s;
      slot = common;
    }
  }
  s.lambda = lam;
  s.mu = mu;
  // Eigenvalues r > s solve x^2 - (lambda - mu)x - (K - mu) = 0; multiplicities
  // follow from 1 + e1 + e2 = N and trace(A) = K + e1 r + e2 s = 0.
  const long long b = lam - mu, c = -(s.K - mu);
  const long long disc = b * b - 4 * c;
  long long root = 0;
  while ((root + 1) * (root + 1) <= disc) ++root;
  if (root * root != disc || (b + root) % 2) return s;
  const long long r = (b + root) / 2, t = (b - root) / 2;
  // e1 r + e2 t = -K, e1 + e2 = N - 1
  const long long num = -s.K - (s.N - 1) * t;
  if (num % (r - t)) return s;
  s.e1 = num / (r - t);
  s.e2 = s.N - 1 - s.e1;
  s.ok = s.e1 >= 0 && s.e2 >= 0;
  return s;
}

// Optimum of max 1 + x + y over the Delsarte LP restricted to distances d and
// d + delta, by brute force over every pair of constraint lines in doubles.
inline double lp_optimum(int q, int n, int d, int delta) {
  struct Line {
    double a, b, c;  // a x + b y + c >= 0
  };
  std::vector<Line> lines{{1, 0, 0}, {0, 1, 0}};
  for (int i = 1; i <= n; ++i)
    lines.push_back({static_cast<double>(krawtchouk(n, q, i, d)), static_cast<double>(krawtchouk(n, q, i, d + delta)),
                     static_cast<double>(krawtchouk(n, q, i, 0))});
  double best = -1;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double det = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
      if (det == 0) continue;
      const double x = (-lines[i].c * lines[j].b + lines[j].c * lines[i].b) / det;
      const double y = (-lines[i].a * lines[j].c + lines[j].a * lines[i].c) / det;
      bool feasible = true;
      for (const auto& l : lines)
        if (l.a * x + l.b * y + l.c < -1e-7 * (1 + std::abs(l.a) + std::abs(l.b) + std::abs(l.c))) feasible = false;
      if (feasible) best = std::max(best, 1 + x + y);
    }
  return best;
}

// Largest code containing 0 in which both distances occur, by plain
// backtracking over all q^n words; 0 if there is none. Tiny instances only.
inline int brute_maximum(int q, int n, int d, int delta) {
  std::vector<Word> all;
  Word w(static_cast<std::size_t>(n), 0);
  while (true) {
    all.push_back(w);
    int i = n - 1;
    while (i >= 0 && ++w[static_cast<std::size_t>(i)] == q) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  std::vector<const Word*> cur{&all[0]};
  int near = 0, far = 0;
  std::size_t best = 0;
  auto rec = [&](auto& self, std::size_t from) -> void {
    if (near && far) best = std::max(best, cur.size());
    if (cur.size() + (all.size() - from) <= best) return;
    for (std::size_t i = from; i < all.size(); ++i) {
      int dn = 0, df = 0;
      bool good = true;
      for (const Word* c : cur) {
        const int x = distance(*c, all[i]);
        if (x == d) ++dn;
        else if (x == d + delta) ++df;
        else {
          good = false;
          break;
        }
      }
      if (!good) continue;
      cur.push_back(&all[i]);
      near += dn;
      far += df;
      self(self, i + 1);
      near -= dn;
      far -= df;
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return static_cast<int>(best);
}

}  // namespace oracle
