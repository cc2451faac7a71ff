#include "twodist/constructions.hpp"

#include "twodist/feasibility.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twodist {

namespace {

int digit_op(int a, int b, int p, bool subtract) {
  int out = 0;
  int scale = 1;
  while (a > 0 || b > 0) {
    const int x = a % p;
    const int y = b % p;
    out += (subtract ? (x - y + p) % p : (x + y) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

int ipow_int(int b, int e) { return static_cast<int>(ipow64(b, static_cast<unsigned>(e))); }

std::vector<int> combine(const Field& f, const std::vector<std::vector<int>>& rows, const std::vector<int>& msg,
                         int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (msg[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      w[static_cast<std::size_t>(j)] = f.add(w[static_cast<std::size_t>(j)], f.mul(msg[i], rows[i][static_cast<std::size_t>(j)]));
  }
  return w;
}

// Calls fn(msg) for every message in F_q^k, first coordinate slowest.
template <typename Fn>
void for_each_message(int q, int k, Fn&& fn) {
  std::vector<int> msg(static_cast<std::size_t>(k), 0);
  while (true) {
    fn(msg);
    int i = k - 1;
    while (i >= 0 && ++msg[static_cast<std::size_t>(i)] == q) msg[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(int q_, std::vector<std::vector<int>> rows_)
    : q(q_), k(static_cast<int>(rows_.size())), n(rows_.empty() ? 0 : static_cast<int>(rows_[0].size())),
      rows(std::move(rows_)) {
  require(prime_power(q).has_value(), "GeneratorMatrix: q must be a prime power");
  for (const auto& r : rows) {
    require(static_cast<int>(r.size()) == n, "GeneratorMatrix: ragged rows");
    for (int x : r) require(x >= 0 && x < q, "GeneratorMatrix: entry outside the field");
  }
}

GeneratorMatrix GeneratorMatrix::from_columns(int q, int k, const std::vector<std::vector<int>>& columns) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k));
  for (const auto& c : columns) {
    require(static_cast<int>(c.size()) == k, "from_columns: column length differs from k");
    for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)].push_back(c[static_cast<std::size_t>(i)]);
  }
  return GeneratorMatrix(q, std::move(rows));
}

std::vector<int> GeneratorMatrix::column(int j) const {
  std::vector<int> c;
  c.reserve(static_cast<std::size_t>(k));
  for (const auto& r : rows) c.push_back(r[static_cast<std::size_t>(j)]);
  return c;
}

std::vector<std::vector<int>> GeneratorMatrix::columns() const {
  std::vector<std::vector<int>> cs;
  for (int j = 0; j < n; ++j) cs.push_back(column(j));
  return cs;
}

int GeneratorMatrix::rank() const {
  const Field f(q);
  auto m = rows;
  int r = 0;
  for (int c = 0; c < n && r < k; ++c) {
    int piv = -1;
    for (int i = r; i < k; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(piv)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    const int inv = f.inv(pr[static_cast<std::size_t>(c)]);
    for (int& x : pr) x = f.mul(x, inv);
    for (int i = 0; i < k; ++i) {
      if (i == r) continue;
      auto& row = m[static_cast<std::size_t>(i)];
      const int factor = row[static_cast<std::size_t>(c)];
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j)
        row[static_cast<std::size_t>(j)] = f.sub(row[static_cast<std::size_t>(j)], f.mul(factor, pr[static_cast<std::size_t>(j)]));
    }
    ++r;
  }
  return r;
}

std::vector<Word> GeneratorMatrix::codewords() const {
  require(q <= 256, "codewords: q > 256 does not fit a symbol");
  require(ipow64(q, static_cast<unsigned>(k)) <= (1LL << 22), "codewords: q^k too large to enumerate");
  const Field f(q);
  std::vector<Word> out;
  for_each_message(q, k, [&](const std::vector<int>& msg) {
    const auto w = combine(f, rows, msg, n);
    out.emplace_back(w.begin(), w.end());
  });
  return out;
}

Code GeneratorMatrix::span() const {
  require(n >= 1, "span: empty generator");
  require(rank() == k, "span: generator matrix is not full rank");
  return Code(q, n, codewords());
}

std::map<int, long long> GeneratorMatrix::weight_distribution() const {
  std::map<int, long long> dist;
  for (const auto& w : codewords()) ++dist[weight(w)];
  return dist;
}

void write_generator(std::ostream& out, const GeneratorMatrix& g) {
  out << g.k << " " << g.n << " " << g.q << "\n";
  for (const auto& r : g.rows) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
    out << "\n";
  }
}

GeneratorMatrix read_generator(std::istream& in) {
  int k = 0, n = 0, q = 0;
  if (!(in >> k >> n >> q) || k < 1 || n < 1) throw std::invalid_argument("read_generator: bad 'k n q' header");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& r : rows)
    for (auto& x : r)
      if (!(in >> x)) throw std::invalid_argument("read_generator: truncated matrix");
  return GeneratorMatrix(q, std::move(rows));
}

std::vector<std::vector<int>> projective_points(int q, int k) {
  std::vector<std::vector<int>> pts;
  for_each_message(q, k, [&](const std::vector<int>& v) {
    const auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (it != v.end() && *it == 1) pts.push_back(v);
  });
  return pts;
}

std::vector<int> normalize(const Field& f, std::vector<int> v) {
  const auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
  if (it == v.end()) throw std::invalid_argument("normalize: zero vector");
  const int inv = f.inv(*it);
  for (int& x : v) x = f.mul(x, inv);
  return v;
}

bool DifferenceMatrix::valid() const {
  const int sz = size();
  for (int i = 0; i < sz; ++i)
    for (int j = i + 1; j < sz; ++j) {
      std::vector<int> hits(static_cast<std::size_t>(group_order), 0);
      for (int c = 0; c < sz; ++c)
        ++hits[static_cast<std::size_t>(digit_op(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)],
                                                 entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)], p,
                                                 true))];
      if (std::any_of(hits.begin(), hits.end(), [&](int h) { return h != mu; })) return false;
    }
  return true;
}

DifferenceMatrix difference_matrix(int p, int l, int h) {
  require(is_prime(p), "difference_matrix: p must be prime");
  require(l >= 1 && h >= 0, "difference_matrix: need l >= 1, h >= 0");
  DifferenceMatrix dm;
  dm.p = p;
  dm.l = l;
  dm.h = h;
  dm.group_order = ipow_int(p, l);
  dm.mu = ipow_int(p, h);
  const Field f(dm.group_order * dm.mu);
  const int sz = dm.size();
  dm.entries.assign(static_cast<std::size_t>(sz), std::vector<int>(static_cast<std::size_t>(sz)));
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      dm.entries[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = f.mul(x, y) % dm.group_order;
  if (!dm.valid()) throw std::logic_error("difference_matrix: construction failed its definition check");
  return dm;
}

Code dm_code(int p, int l, int h) {
  const DifferenceMatrix dm = difference_matrix(p, l, h);
  require(dm.group_order <= 256, "dm_code: group order exceeds symbol range");
  std::vector<Word> words;
  for (const auto& row : dm.entries)
    for (int c = 0; c < dm.group_order; ++c) {
      Word w(row.size());
      for (std::size_t j = 0; j < row.size(); ++j) w[j] = static_cast<Symbol>(digit_op(row[j], c, p, false));
      words.push_back(std::move(w));
    }
  return Code(dm.group_order, dm.size(), std::move(words));
}

Code concatenate(const Code& outer, const Code& inner) {
  if (static_cast<int>(inner.size()) != outer.q())
    throw std::invalid_argument("concatenate: inner code has " + std::to_string(inner.size()) +
                                " words but the outer alphabet has " + std::to_string(outer.q()) + " symbols");
  std::vector<Word> words;
  for (const auto& w : outer.words()) {
    Word out;
    out.reserve(static_cast<std::size_t>(outer.n() * inner.n()));
    for (Symbol s : w) out.insert(out.end(), inner[s].begin(), inner[s].end());
    words.push_back(std::move(out));
  }
  return Code(inner.q(), outer.n() * inner.n(), std::move(words));
}

GeneratorMatrix seed_code(SeedKind kind, int q, int param) {
  require(prime_power(q).has_value(), "seed_code: q must be a prime power");
  if (kind == SeedKind::simplex) {
    require(param >= 2, "seed_code(simplex): m must be >= 2");
    return GeneratorMatrix::from_columns(q, param, projective_points(q, param));
  }
  require(param >= 2 && param <= q + 1, "seed_code(mds2): r must be in [2, q+1]");
  std::vector<std::vector<int>> cols;
  for (int t = 0; t < q; ++t) cols.push_back({1, t});
  cols.push_back({0, 1});
  cols.resize(static_cast<std::size_t>(param));
  return GeneratorMatrix::from_columns(q, 2, cols);
}

GeneratorMatrix su1_code(int q, int m, int r, int s, int h, Su1Mode mode) {
  require(prime_power(q).has_value(), "su1_code: q must be a prime power");
  require(m >= 3 && r >= 2 && r <= m - 1, "su1_code: need 2 <= r <= m-1");
  require(s >= 1 && h >= 1, "su1_code: need s, h >= 1");
  if (mode == Su1Mode::removal) require(h <= s, "su1_code: removal needs h <= s");
  std::vector<std::vector<int>> cols;
  for (const auto& pt : projective_points(q, m)) {
    const bool in_sub = std::all_of(pt.begin() + r, pt.end(), [](int x) { return x == 0; });
    int mult = s;
    if (in_sub) mult += mode == Su1Mode::removal ? -h : h;
    for (int i = 0; i < mult; ++i) cols.push_back(pt);
  }
  return GeneratorMatrix::from_columns(q, m, cols);
}

GeneratorMatrix su2_code(int p, int m, int r) {
  require(is_prime(p) && m >= 1, "su2_code: p must be prime and m >= 1");
  const int q = ipow_int(p, m);
  require(q >= 4, "su2_code: q = p^m must be at least 4");
  require(r >= 2 && r <= q + 1, "su2_code: r must be in [2, q+1]");
  const Field f(q);
  const GeneratorMatrix outer = seed_code(SeedKind::mds2, q, r);
  const auto inner_cols = projective_points(p, m);
  // Message digits (a_0..a_{m-1}, b_0..b_{m-1}) over F_p; the coordinate for
  // outer column c and inner column v is <digits(a c_0 + b c_1), v>.
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < 2 * m; ++i) {
    const int unit = ipow_int(p, i % m);
    const int a = i < m ? unit : 0;
    const int b = i < m ? 0 : unit;
    for (int j = 0; j < outer.n; ++j) {
      const auto c = outer.column(j);
      int sym = f.add(f.mul(a, c[0]), f.mul(b, c[1]));
      std::vector<int> digits(static_cast<std::size_t>(m));
      for (int t = 0; t < m; ++t, sym /= p) digits[static_cast<std::size_t>(t)] = sym % p;
      for (const auto& v : inner_cols) {
        int dot = 0;
        for (int t = 0; t < m; ++t) dot += digits[static_cast<std::size_t>(t)] * v[static_cast<std::size_t>(t)];
        rows[static_cast<std::size_t>(i)].push_back(dot % p);
      }
    }
  }
  return GeneratorMatrix(p, std::move(rows));
}

GeneratorMatrix arc_code(int q) {
  const auto pp = prime_power(q);
  require(pp && pp->p == 2 && q >= 4, "arc_code: q must be a power of 2, at least 4");
  const Field f(q);
  std::vector<std::vector<int>> cols;
  for (int t = 0; t < q; ++t) cols.push_back({1, t, f.mul(t, t)});
  cols.push_back({0, 1, 0});
  cols.push_back({0, 0, 1});
  return GeneratorMatrix::from_columns(q, 3, cols);
}

GeneratorMatrix pencil_code(int q, int delta) {
  require(delta >= 1, "pencil_code: delta must be >= 1");
  GeneratorMatrix g = seed_code(SeedKind::mds2, q, q + 1);
  for (int i = 0; i < delta; ++i) {
    g.rows[0].push_back(0);
    g.rows[1].push_back(1);
  }
  g.n += delta;
  return g;
}

SmallFamily parse_small_family(const std::string& name) {
  if (name == "weight2") return SmallFamily::weight2;
  if (name == "bin-2-2d") return SmallFamily::bin_2_2d;
  if (name == "disjoint") return SmallFamily::disjoint;
  if (name == "ternary13") return SmallFamily::ternary13;
  throw std::invalid_argument("unknown small family '" + name + "'");
}

std::string to_string(SmallFamily f) {
  switch (f) {
    case SmallFamily::weight2: return "weight2";
    case SmallFamily::bin_2_2d: return "bin-2-2d";
    case SmallFamily::disjoint: return "disjoint";
    case SmallFamily::ternary13: return "ternary13";
  }
  return "?";
}

Code small_family_code(SmallFamily kind, int q, int n, int param) {
  auto word = [n](std::initializer_list<int> ones) {
    Word w(static_cast<std::size_t>(n), 0);
    for (int i : ones) w[static_cast<std::size_t>(i)] = 1;
    return w;
  };
  std::vector<Word> words{Word(static_cast<std::size_t>(n), 0)};
  switch (kind) {
    case SmallFamily::weight2:
      require(n >= 2, "weight2: n must be >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) words.push_back(word({i, j}));
      break;
    case SmallFamily::bin_2_2d: {
      const int delta = param;
      require(delta >= 1 && n >= delta + 3, "bin-2-2d: need delta >= 1 and n >= delta + 3");
      // Weight delta+2 inside the first delta+3 coordinates, first coordinate 1.
      for (int hole = 1; hole <= delta + 2; ++hole) {
        Word w(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < delta + 3; ++i) w[static_cast<std::size_t>(i)] = i == hole ? 0 : 1;
        words.push_back(std::move(w));
      }
      for (int j = delta + 3; j < n; ++j) words.push_back(word({0, j}));
      if (n == delta + 3) {
        Word w(static_cast<std::size_t>(n), 1);
        w[0] = 0;
        words.push_back(std::move(w));
      }
      break;
    }
    case SmallFamily::disjoint: {
      const int d = param;
      require(d >= 1 && n / d >= 1, "disjoint: need 1 <= d <= n");
      for (int b = 0; b + d <= n; b += d) {
        Word w(static_cast<std::size_t>(n), 0);
        std::fill(w.begin() + b, w.begin() + b + d, Symbol{1});
        words.push_back(std::move(w));
      }
      break;
    }
    case SmallFamily::ternary13: {
      require(q >= 3 && n >= 4, "ternary13: need q >= 3 and n >= 4");
      words.clear();
      for (const char* s : {"0000", "1000", "2110", "2120", "2201", "2202"}) {
        Word w(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(i)] = static_cast<Symbol>(s[i] - '0');
        words.push_back(std::move(w));
      }
      break;
    }
  }
  return Code(q, n, std::move(words));
}

ComplementaryCode complementary_code(const GeneratorMatrix& g) {
  const Field f(g.q);
  require(g.rank() == g.k, "complementary_code: generator is not full rank");
  std::map<std::vector<int>, int> mult;
  for (const auto& c : g.columns()) {
    require(std::any_of(c.begin(), c.end(), [](int x) { return x != 0; }), "complementary_code: zero column");
    ++mult[normalize(f, c)];
  }
  int s = 0;
  for (const auto& [pt, m] : mult) s = std::max(s, m);

  std::vector<std::vector<int>> cols;
  for (const auto& pt : projective_points(g.q, g.k)) {
    const auto it = mult.find(pt);
    const int have = it == mult.end() ? 0 : it->second;
    for (int i = have; i < s; ++i) cols.push_back(pt);
  }
  if (cols.empty()) throw std::domain_error("complementary_code: complementary empty");

  ComplementaryCode out;
  out.generator = GeneratorMatrix::from_columns(g.q, g.k, cols);
  out.s = s;

  GeneratorMatrix joint = g;
  for (int i = 0; i < g.k; ++i) {
    auto& row = joint.rows[static_cast<std::size_t>(i)];
    const auto& extra = out.generator.rows[static_cast<std::size_t>(i)];
    row.insert(row.end(), extra.begin(), extra.end());
  }
  joint.n += out.generator.n;
  const long long expected = s * ipow64(g.q, static_cast<unsigned>(g.k - 1));
  for (const auto& [w, count] : joint.weight_distribution())
    if (w != 0 && w != expected)
      throw std::domain_error("complementary_code: joint code is not equidistant (weight " + std::to_string(w) + ")");

  std::set<int> ws;
  bool first = true;  // skip the zero message, which comes first
  for (const auto& w : out.generator.codewords()) {
    if (first) {
      first = false;
      continue;
    }
    ws.insert(weight(w));
  }
  out.weights.assign(ws.begin(), ws.end());
  out.degenerate = out.generator.rank() < g.k || ws.count(0) > 0;
  return out;
}

long long griesmer_length(int q, int k, int d) {
  long long sum = 0;
  long long pw = 1;
  for (int i = 0; i < k; ++i, pw *= q) sum += (d + pw - 1) / pw;
  return sum;
}

}  // namespace twodist
