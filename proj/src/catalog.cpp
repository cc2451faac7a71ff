#include "twodist/catalog.hpp"

#include "twodist/feasibility.hpp"

#include <sstream>

namespace twodist {

namespace {

int ipow_int(int b, int e) { return static_cast<int>(ipow64(b, static_cast<unsigned>(e))); }

GeneratorMatrix repeat(const GeneratorMatrix& g, int t) {
  GeneratorMatrix out = g;
  for (int i = 1; i < t; ++i)
    for (int r = 0; r < g.k; ++r) {
      auto& row = out.rows[static_cast<std::size_t>(r)];
      row.insert(row.end(), g.rows[static_cast<std::size_t>(r)].begin(), g.rows[static_cast<std::size_t>(r)].end());
    }
  out.n = g.n * t;
  return out;
}

std::string name(const std::string& base, std::initializer_list<int> args, int t = 1) {
  std::ostringstream os;
  os << base << "(";
  bool first = true;
  for (int a : args) {
    os << (first ? "" : ",") << a;
    first = false;
  }
  os << ")";
  if (t > 1) os << "x" << t;
  return os.str();
}

struct Builder {
  std::vector<CatalogEntry>& out;
  int n_max;

  // Adds g repeated t = 1, 2, ... times while the length fits.
  void linear(const std::string& base, std::initializer_list<int> args, int field_q, int n, int d, int delta,
              long long size, std::function<GeneratorMatrix()> make, bool repeatable = true) {
    for (int t = 1; t * n <= n_max; ++t) {
      out.push_back({name(base, args, t), field_q, t * n, t * d, t * delta, Int(size), true,
                     [make, t] { return repeat(make(), t).span(); }});
      if (!repeatable) break;
    }
  }
};

}  // namespace

std::vector<CatalogEntry> catalog_entries(int q, int n_max) {
  std::vector<CatalogEntry> out;
  Builder b{out, n_max};
  for (int fq = 2; fq <= q; ++fq) {
    const auto pp = prime_power(fq);
    if (!pp) continue;
    const int p = pp->p;

    // Difference-matrix codes over the group of order fq = p^l.
    for (int h = 0;; ++h) {
      const int mu = ipow_int(p, h);
      if (fq * mu > n_max || fq * fq * mu > (1 << 16)) break;
      const int l = pp->m;
      out.push_back({name("dm", {p, l, h}), fq, fq * mu, (fq - 1) * mu, mu, Int(fq * fq * mu), false,
                     [p, l, h] { return dm_code(p, l, h); }});
    }

    // MDS [r,2,{r-1,r}] and the equidistant [q+1,2,q].
    for (int r = 2; r <= fq + 1 && r <= n_max; ++r) {
      const bool eq = r == fq + 1;
      b.linear("mds2", {fq, r}, fq, r, eq ? fq : r - 1, eq ? 0 : 1, fq * fq,
               [fq, r] { return seed_code(SeedKind::mds2, fq, r); });
    }

    // Simplex codes and their repetitions.
    for (int m = 2; ipow64(fq, static_cast<unsigned>(m)) <= 4096; ++m) {
      const int n = (ipow_int(fq, m) - 1) / (fq - 1);
      if (n > n_max) break;
      b.linear("simplex", {fq, m}, fq, n, ipow_int(fq, m - 1), 0, ipow64(fq, static_cast<unsigned>(m)),
               [fq, m] { return seed_code(SeedKind::simplex, fq, m); });
    }

    // SU1 removal and union.
    for (int m = 3; ipow64(fq, static_cast<unsigned>(m)) <= 4096; ++m) {
      const int full = (ipow_int(fq, m) - 1) / (fq - 1);
      for (int r = 2; r <= m - 1; ++r) {
        const int sub = (ipow_int(fq, r) - 1) / (fq - 1);
        const int top = ipow_int(fq, m - 1);
        const int step = ipow_int(fq, r - 1);
        for (int s = 1; s * full - s * sub <= n_max; ++s)
          for (int h = 1; h <= s; ++h) {
            const int n = s * full - h * sub;
            if (n > n_max) continue;
            out.push_back({name("su1-removal", {fq, m, r, s, h}), fq, n, s * top - h * step, h * step,
                           Int(ipow64(fq, static_cast<unsigned>(m))), true,
                           [=] { return su1_code(fq, m, r, s, h, Su1Mode::removal).span(); }});
          }
        for (int s = 1; s * full + sub <= n_max; ++s)
          for (int h = 1; s * full + h * sub <= n_max; ++h)
            out.push_back({name("su1-union", {fq, m, r, s, h}), fq, s * full + h * sub, s * top, h * step,
                           Int(ipow64(fq, static_cast<unsigned>(m))), true,
                           [=] { return su1_code(fq, m, r, s, h, Su1Mode::union_).span(); }});
      }
    }

    // SU2 over the prime field.
    if (pp->m == 1) {
      for (int m = 1; ipow64(p, static_cast<unsigned>(2 * m)) <= 4096; ++m) {
        const int big = ipow_int(p, m);
        if (big < 4) continue;
        const int inner = (big - 1) / (p - 1);
        for (int r = 2; r <= big + 1 && r * inner <= n_max; ++r) {
          const bool eq = r == big + 1;
          b.linear("su2", {p, m, r}, p, r * inner, (r - 1) * ipow_int(p, m - 1), eq ? 0 : ipow_int(p, m - 1),
                   ipow64(p, static_cast<unsigned>(2 * m)), [p, m, r] { return su2_code(p, m, r); });
        }
      }
    }

    if (p == 2 && fq >= 4 && fq + 2 <= n_max)
      b.linear("arc", {fq}, fq, fq + 2, fq, 2, ipow64(fq, 3), [fq] { return arc_code(fq); });

    for (int delta = 1; fq + 1 + delta <= n_max; ++delta)
      b.linear("pencil", {fq, delta}, fq, fq + 1 + delta, fq, delta, fq * fq,
               [fq, delta] { return pencil_code(fq, delta); }, false);
  }
  return out;
}

namespace {

void consider(std::optional<CatalogBound>& best, const Int& size, const std::string& family, bool eq, int source_n,
              std::function<Code()> build) {
  if (best && size <= best->value) return;
  best = CatalogBound{size, family, eq, source_n, std::move(build)};
}

std::function<Code()> padded_to(std::function<Code()> build, int from, int to, int q) {
  return [build = std::move(build), from, to, q] {
    Code c = build().padded(to - from);
    return Code(q, c.n(), c.words());
  };
}

}  // namespace

std::optional<CatalogBound> catalog_lower_bound(const TwoDistParams& p, const std::vector<CatalogEntry>& entries) {
  std::optional<CatalogBound> best;
  for (const auto& e : entries) {
    if (e.equidistant() || e.q > p.q || e.n > p.n || e.d != p.d || e.delta != p.delta) continue;
    consider(best, e.size, e.family, false, e.n, padded_to(e.build, e.n, p.n, p.q));
  }

  const int q = p.q, n = p.n, d = p.d, dl = p.delta;
  if (d == 2 && dl == 2 && n >= 4)
    consider(best, binom(n, 2) + 1, "weight2", false, n, [q, n] { return small_family_code(SmallFamily::weight2, q, n); });
  if (d == 2 && n >= dl + 3) {
    const Int size = n == dl + 3 ? n + 1 : n;
    consider(best, size, "bin-2-2d", false, n,
             [q, n, dl] { return small_family_code(SmallFamily::bin_2_2d, q, n, dl); });
  }
  if (d == dl && n / d >= 2)
    consider(best, Int(1 + n / d), "disjoint", false, n,
             [q, n, d] { return small_family_code(SmallFamily::disjoint, q, n, d); });
  if (q >= 3 && d == 1 && dl == 2 && n >= 4)
    consider(best, Int(6), "ternary13", false, n, [q, n] { return small_family_code(SmallFamily::ternary13, q, n); });
  return best;
}

std::optional<CatalogBound> catalog_equidistant(const TwoDistParams& p, const std::vector<CatalogEntry>& entries) {
  std::optional<CatalogBound> best;
  for (const auto& e : entries) {
    if (!e.equidistant() || e.q > p.q || e.n > p.n || (e.d != p.d && e.d != p.far())) continue;
    consider(best, e.size, e.family, true, e.n, padded_to(e.build, e.n, p.n, p.q));
  }
  return best;
}

}  // namespace twodist
