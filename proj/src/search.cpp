#include "twodist/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace twodist {

namespace {

using Bits = std::vector<std::uint64_t>;

// All words with the given support size, values 1..q-1 on the support.
void words_of_weight(int q, int n, int w, std::vector<Word>& out) {
  std::vector<int> support(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) support[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> vals(static_cast<std::size_t>(w), 1);
    while (true) {
      Word x(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < w; ++i)
        x[static_cast<std::size_t>(support[static_cast<std::size_t>(i)])] = static_cast<Symbol>(vals[static_cast<std::size_t>(i)]);
      out.push_back(std::move(x));
      int i = w - 1;
      while (i >= 0 && ++vals[static_cast<std::size_t>(i)] == q) vals[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
    }
    int i = w - 1;
    while (i >= 0 && support[static_cast<std::size_t>(i)] == n - w + i) --i;
    if (i < 0) return;
    ++support[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < w; ++j) support[static_cast<std::size_t>(j)] = support[static_cast<std::size_t>(j) - 1] + 1;
  }
}

struct Graph {
  std::vector<Word> words;
  std::vector<Bits> adj;
  std::size_t blocks = 0;

  bool edge(int a, int b) const {
    return (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1;
  }
};

Graph compatibility_graph(const TwoDistParams& p, std::vector<Word> words) {
  Graph g;
  g.words = std::move(words);
  const std::size_t v = g.words.size();
  g.blocks = (v + 63) / 64;
  g.adj.assign(v, Bits(g.blocks, 0));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) {
      const int dist = hamming_distance(g.words[i], g.words[j]);
      if (dist == p.d || dist == p.far()) {
        g.adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
        g.adj[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  return g;
}

Code with_zero(const TwoDistParams& p, const std::vector<Word>& words, const std::vector<int>& chosen) {
  std::vector<Word> out{Word(static_cast<std::size_t>(p.n), 0)};
  for (int i : chosen) out.push_back(words[static_cast<std::size_t>(i)]);
  return Code(p.q, p.n, std::move(out));
}

struct Candidate {
  std::vector<int> chosen;  // sorted candidate indices
  int restart = -1;

  // Larger is better; equal sizes prefer the lexicographically smaller code.
  bool better_than(const Candidate& o) const {
    if (o.restart < 0) return true;
    if (chosen.size() != o.chosen.size()) return chosen.size() > o.chosen.size();
    if (chosen != o.chosen) return chosen < o.chosen;
    return restart < o.restart;
  }
};

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Word> candidate_words(const TwoDistParams& p, std::size_t cap) {
  Int count = 0;
  for (int w : {p.d, p.far()}) count += binom(p.n, w) * ipow(Int(p.q - 1), static_cast<unsigned>(w));
  if (count > cap)
    throw InstanceTooLarge("candidate space of " + count.str() + " words exceeds the cap of " + std::to_string(cap));
  if (p.q > 256) throw std::invalid_argument("candidate_words: q > 256");
  std::vector<Word> out;
  words_of_weight(p.q, p.n, p.d, out);
  words_of_weight(p.q, p.n, p.far(), out);
  if (out.empty()) throw std::invalid_argument("candidate space is empty");
  std::sort(out.begin(), out.end());
  return out;
}

SearchResult random_greedy(const TwoDistParams& p, const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw std::invalid_argument("random_greedy: restarts must be >= 1");
  const Graph g = compatibility_graph(p, candidate_words(p, cfg.max_candidates));

  Word start(static_cast<std::size_t>(p.n), 0);
  std::fill(start.begin(), start.begin() + p.d, Symbol{1});
  const int s = static_cast<int>(std::lower_bound(g.words.begin(), g.words.end(), start) - g.words.begin());

  std::vector<int> initial;
  for (int v = 0; v < static_cast<int>(g.words.size()); ++v)
    if (g.edge(s, v)) initial.push_back(v);

  const auto t0 = std::chrono::steady_clock::now();
  auto expired = [&] {
    if (!cfg.time_budget_ms) return false;
    const auto el = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return el.count() >= *cfg.time_budget_ms;
  };

  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cfg.restarts));
  std::vector<Candidate> local(threads);
  std::atomic<int> next{0};
  std::atomic<int> run{0};
  std::atomic<bool> stop{false};

  auto worker = [&](unsigned id) {
    std::vector<int> alive, chosen;
    while (!stop.load(std::memory_order_relaxed)) {
      const int r = next.fetch_add(1);
      if (r >= cfg.restarts) break;
      if (expired()) {
        stop = true;
        break;
      }
      std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(r))));
      alive = initial;
      chosen.assign(1, s);
      while (!alive.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, alive.size() - 1);
        const int v = alive[pick(rng)];
        chosen.push_back(v);
        std::erase_if(alive, [&](int u) { return !g.edge(v, u); });
      }
      std::sort(chosen.begin(), chosen.end());
      Candidate c{chosen, r};
      if (c.better_than(local[id])) local[id] = std::move(c);
      ++run;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& t : pool) t.join();

  Candidate best;
  for (auto& c : local)
    if (c.restart >= 0 && c.better_than(best)) best = c;
  if (best.restart < 0) throw std::runtime_error("random_greedy: time budget expired before the first restart");

  Code code = with_zero(p, g.words, best.chosen);
  VerifyReport report = verify_two_distance(code, p);
  const std::size_t size = code.size();
  return SearchResult{std::move(code), size, best.restart, run.load(), std::move(report)};
}

OracleResult exhaustive_maximum(const TwoDistParams& p, const OracleLimits& limits) {
  const Graph g = compatibility_graph(p, candidate_words(p, limits.max_vertices));
  const std::size_t v = g.words.size();
  std::uint64_t nodes = 0;
  const std::vector<int> any = max_clique(g.adj, v, &nodes);

  auto both = [&](const std::vector<int>& chosen) {
    bool near = false, far = false;
    for (int i : chosen) (weight(g.words[static_cast<std::size_t>(i)]) == p.d ? near : far) = true;
    for (std::size_t a = 0; a < chosen.size() && !(near && far); ++a)
      for (std::size_t b = a + 1; b < chosen.size(); ++b)
        (hamming_distance(g.words[static_cast<std::size_t>(chosen[a])], g.words[static_cast<std::size_t>(chosen[b])]) ==
                 p.d
             ? near
             : far) = true;
    return near && far;
  };
  if (both(any)) {
    Code code = with_zero(p, g.words, any);
    const Int value(code.size());
    return OracleResult{value, std::move(code), value, v, nodes};
  }
  const Int unrestricted(any.size() + 1);

  Word u(static_cast<std::size_t>(p.n), 0);
  std::fill(u.begin(), u.begin() + p.d, Symbol{1});
  const auto index = [&](const Word& w) {
    return static_cast<int>(std::lower_bound(g.words.begin(), g.words.end(), w) - g.words.begin());
  };
  const int iu = index(u);

  std::vector<int> best;
  for (const auto& [i, b] : pair_shapes(p)) {
    Word w(static_cast<std::size_t>(p.n), 0);
    for (int k = 0; k < i; ++k) w[static_cast<std::size_t>(k)] = k < i - b ? 1 : 2;
    for (int k = p.d; k < p.d + p.far() - i; ++k) w[static_cast<std::size_t>(k)] = 1;
    const int iw = index(w);

    std::vector<int> common;
    for (std::size_t x = 0; x < v; ++x)
      if (g.edge(iu, static_cast<int>(x)) && g.edge(iw, static_cast<int>(x))) common.push_back(static_cast<int>(x));
    const std::size_t blocks = (common.size() + 63) / 64;
    std::vector<Bits> sub(common.size(), Bits(blocks, 0));
    for (std::size_t a = 0; a < common.size(); ++a)
      for (std::size_t c = 0; c < common.size(); ++c)
        if (g.edge(common[a], common[c])) sub[a][c / 64] |= std::uint64_t{1} << (c % 64);
    std::uint64_t sub_nodes = 0;
    std::vector<int> chosen{iu, iw};
    for (int x : max_clique(sub, common.size(), &sub_nodes)) chosen.push_back(common[static_cast<std::size_t>(x)]);
    nodes += sub_nodes;
    std::sort(chosen.begin(), chosen.end());
    if (chosen.size() > best.size()) best = std::move(chosen);
  }
  if (best.empty()) throw std::domain_error("exhaustive_maximum: no code with both distances for " + p.str());
  Code code = with_zero(p, g.words, best);
  const Int value(code.size());
  return OracleResult{value, std::move(code), unrestricted, v, nodes};
}

}  // namespace twodist
