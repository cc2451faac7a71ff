#include "twodist/core.hpp"

#include "twodist/krawtchouk.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace twodist {

Code::Code(int q, int n, std::vector<Word> words) : q_(q), n_(n), words_(std::move(words)) {
  if (q_ < 2 || q_ > 256) throw std::invalid_argument("Code: alphabet size must be in [2, 256]");
  if (n_ < 1) throw std::invalid_argument("Code: length must be >= 1");
  if (words_.empty()) throw std::invalid_argument("Code: at least one word required");
  for (const auto& w : words_) {
    if (static_cast<int>(w.size()) != n_)
      throw std::invalid_argument("Code: word of length " + std::to_string(w.size()) + ", expected " +
                                  std::to_string(n_));
    for (Symbol s : w)
      if (s >= q_) throw std::invalid_argument("Code: symbol " + std::to_string(s) + " outside alphabet");
  }
  std::vector<Word> copy = words_;
  std::sort(copy.begin(), copy.end());
  if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
    throw std::invalid_argument("Code: words must be pairwise distinct");
}

Code Code::padded(int extra) const {
  if (extra < 0) throw std::invalid_argument("Code::padded: negative padding");
  std::vector<Word> w = words_;
  for (auto& x : w) x.resize(x.size() + static_cast<std::size_t>(extra), 0);
  return Code(q_, n_ + extra, std::move(w));
}

Code Code::sorted() const {
  std::vector<Word> w = words_;
  std::sort(w.begin(), w.end());
  return Code(q_, n_, std::move(w));
}

int hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

int weight(std::span<const Symbol> w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](Symbol s) { return s != 0; }));
}

TwoDistParams::TwoDistParams(int q_, int n_, int d_, int delta_) : q(q_), n(n_), d(d_), delta(delta_) {
  if (q < 2) throw std::invalid_argument("params: q must be >= 2");
  if (n < 1 || d < 1 || delta < 1) throw std::invalid_argument("params: n, d, delta must be positive");
  if (d + delta > n) throw std::invalid_argument("params: d + delta must not exceed n (" + str() + ")");
}

std::string TwoDistParams::str() const {
  std::ostringstream os;
  os << "A_" << q << "(" << n << ",{" << d << "," << d + delta << "})";
  return os.str();
}

std::vector<std::pair<int, int>> pair_shapes(const TwoDistParams& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= std::min(p.d, p.far()); ++i) {
    if (p.d + p.far() - i > p.n) continue;
    for (int b = 0; b <= (p.q > 2 ? i : 0); ++b) {
      const int dist = p.d + p.far() - 2 * i + b;
      if (dist == p.d || dist == p.far()) out.emplace_back(i, b);
    }
  }
  return out;
}

DistanceDistribution::DistanceDistribution(std::size_t cardinality, std::vector<std::uint64_t> pair_counts)
    : cardinality_(cardinality), pair_counts_(std::move(pair_counts)) {}

Rational DistanceDistribution::A(int j) const {
  if (j < 0 || j > n()) return 0;
  return ratio(Int(pair_counts_[static_cast<std::size_t>(j)]), Int(cardinality_));
}

std::vector<int> DistanceDistribution::support() const {
  std::vector<int> s;
  for (int j = 1; j <= n(); ++j)
    if (pair_counts_[static_cast<std::size_t>(j)]) s.push_back(j);
  return s;
}

BoundStatus BoundStatus::exact(Int v, std::vector<std::string> tags) {
  return {Kind::ExactValue, v, v, std::move(tags)};
}
BoundStatus BoundStatus::range(Int lo, Int hi, std::vector<std::string> tags) {
  if (lo > hi) throw std::invalid_argument("BoundStatus: range with lo > hi");
  return {Kind::Range, std::move(lo), std::move(hi), std::move(tags)};
}
BoundStatus BoundStatus::not_well_defined(std::vector<std::string> tags) {
  return {Kind::NotWellDefined, 0, 0, std::move(tags)};
}
BoundStatus BoundStatus::infeasible(std::vector<std::string> tags) {
  return {Kind::Infeasible, 0, 0, std::move(tags)};
}

std::string to_string(BoundStatus::Kind k) {
  switch (k) {
    case BoundStatus::Kind::ExactValue: return "exact";
    case BoundStatus::Kind::Range: return "range";
    case BoundStatus::Kind::NotWellDefined: return "not-well-defined";
    case BoundStatus::Kind::Infeasible: return "infeasible";
  }
  return "?";
}

std::string BoundStatus::str() const {
  switch (kind) {
    case Kind::ExactValue: return lo.str();
    case Kind::Range: return lo.str() + "-" + hi.str();
    case Kind::NotWellDefined: return "--";
    case Kind::Infeasible: return "infeasible";
  }
  return "?";
}

DistanceDistribution distance_distribution(const Code& code) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.n()) + 1, 0);
  const auto& w = code.words();
  counts[0] = w.size();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) counts[static_cast<std::size_t>(hamming_distance(w[i], w[j]))] += 2;
  return DistanceDistribution(w.size(), std::move(counts));
}

VerifyReport verify_two_distance(const Code& code, const TwoDistParams& params) {
  if (code.q() != params.q || code.n() != params.n)
    throw std::invalid_argument("verify_two_distance: code is (q=" + std::to_string(code.q()) +
                                ", n=" + std::to_string(code.n()) + ") but params are " + params.str());
  DistanceDistribution dist = distance_distribution(code);
  std::vector<int> observed = dist.support();
  const bool inside = std::all_of(observed.begin(), observed.end(),
                                  [&](int j) { return j == params.d || j == params.far(); });
  VerifyReport r{inside && observed.size() == 2, inside && observed.size() == 1, observed, std::move(dist)};
  return r;
}

namespace {

bool projection_uniform(const Code& code, const std::vector<int>& cols) {
  std::size_t cells = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) cells *= static_cast<std::size_t>(code.q());
  std::vector<std::size_t> hist(cells, 0);
  for (const auto& w : code.words()) {
    std::size_t idx = 0;
    for (int c : cols) idx = idx * static_cast<std::size_t>(code.q()) + w[static_cast<std::size_t>(c)];
    ++hist[idx];
  }
  return std::all_of(hist.begin(), hist.end(), [&](std::size_t h) { return h == hist[0]; });
}

bool has_strength(const Code& code, int t) {
  std::vector<int> cols(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) cols[static_cast<std::size_t>(i)] = i;
  const int n = code.n();
  while (true) {
    if (!projection_uniform(code, cols)) return false;
    int i = t - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - t + i) --i;
    if (i < 0) return true;
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

int strength(const Code& code) {
  int t = 0;
  std::size_t block = 1;
  while (t < code.n()) {
    block *= static_cast<std::size_t>(code.q());
    if (code.size() % block != 0 || !has_strength(code, t + 1)) break;
    ++t;
  }
  return t;
}

Rational moment(const Code& code, int i) {
  if (i < 0 || i > code.n()) throw std::out_of_range("moment: index out of range");
  const DistanceDistribution dist = distance_distribution(code);
  Rational m = 0;
  for (int j = 0; j <= code.n(); ++j) {
    const auto c = dist.pair_counts()[static_cast<std::size_t>(j)];
    if (c) m += Rational(Int(c)) * kraw_normalized(code.n(), code.q(), i, j);
  }
  return m;
}

bool is_antipodal(const Code& code) {
  const std::size_t N = code.size();
  const auto q = static_cast<std::size_t>(code.q());
  if (N % q != 0) return false;
  const auto& w = code.words();
  std::vector<std::vector<std::size_t>> far(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j && hamming_distance(w[i], w[j]) == code.n()) far[i].push_back(j);

  std::vector<bool> used(N, false);
  // Exact cover of the words by q-cliques of the "distance n" graph.
  std::function<bool()> cover = [&]() -> bool {
    std::size_t first = 0;
    while (first < N && used[first]) ++first;
    if (first == N) return true;
    used[first] = true;
    std::vector<std::size_t> group{first};
    std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
      if (group.size() == q) return cover();
      const auto& cand = far[first];
      for (std::size_t k = from; k < cand.size(); ++k) {
        const std::size_t v = cand[k];
        if (used[v]) continue;
        bool clique = std::all_of(group.begin(), group.end(),
                                  [&](std::size_t g) { return hamming_distance(w[g], w[v]) == code.n(); });
        if (!clique) continue;
        used[v] = true;
        group.push_back(v);
        if (extend(k + 1)) return true;
        group.pop_back();
        used[v] = false;
      }
      return false;
    };
    bool ok = extend(0);
    used[first] = false;
    return ok;
  };
  return cover();
}

}  // namespace twodist
