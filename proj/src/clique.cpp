#include "twodist/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace twodist {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

struct Solver {
  const std::vector<Bits>& adj;
  std::size_t words;
  std::vector<int> current, best;
  std::uint64_t nodes = 0;

  // Greedy colouring of P; fills `order` and `colour` so colours are non-decreasing.
  void colour_sort(const Bits& P, std::vector<int>& order, std::vector<int>& colour) const {
    Bits uncoloured = P;
    int k = 0;
    while (any(uncoloured)) {
      ++k;
      Bits avail = uncoloured;
      for (std::size_t w = 0; w < words; ++w) {
        while (avail[w]) {
          const int bit = std::countr_zero(avail[w]);
          const int v = static_cast<int>(w * 64) + bit;
          order.push_back(v);
          colour.push_back(k);
          uncoloured[w] &= ~(std::uint64_t{1} << bit);
          const Bits& nb = adj[static_cast<std::size_t>(v)];
          for (std::size_t x = w; x < words; ++x) avail[x] &= ~nb[x];
          avail[w] &= ~(std::uint64_t{1} << bit);
        }
      }
    }
  }

  void expand(Bits P) {
    ++nodes;
    std::vector<int> order, colour;
    colour_sort(P, order, colour);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + static_cast<std::size_t>(colour[static_cast<std::size_t>(i)]) <= best.size()) return;
      const int v = order[static_cast<std::size_t>(i)];
      current.push_back(v);
      Bits next(words);
      const Bits& nb = adj[static_cast<std::size_t>(v)];
      for (std::size_t w = 0; w < words; ++w) next[w] = P[w] & nb[w];
      if (any(next)) expand(std::move(next));
      else if (current.size() > best.size()) best = current;
      current.pop_back();
      P[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }
};

}  // namespace

std::vector<int> max_clique(const std::vector<std::vector<std::uint64_t>>& adj, std::size_t vertices,
                            std::uint64_t* nodes) {
  if (vertices == 0) return {};
  const std::size_t words = (vertices + 63) / 64;

  // Renumber by non-increasing degree so the colouring bound starts tight.
  std::vector<int> deg(vertices);
  for (std::size_t v = 0; v < vertices; ++v) {
    int d = 0;
    for (std::uint64_t w : adj[v]) d += std::popcount(w);
    deg[v] = d;
  }
  std::vector<int> perm(vertices);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
  std::vector<Bits> re(vertices, Bits(words, 0));
  for (std::size_t i = 0; i < vertices; ++i)
    for (std::size_t j = 0; j < vertices; ++j) {
      const auto a = static_cast<std::size_t>(perm[i]);
      const auto b = static_cast<std::size_t>(perm[j]);
      if ((adj[a][b / 64] >> (b % 64)) & 1) re[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }

  Solver s{re, words, {}, {}, 0};
  Bits all(words, 0);
  for (std::size_t v = 0; v < vertices; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  s.best = {0};  // any single vertex is a clique
  s.expand(all);
  if (nodes) *nodes = s.nodes;
  std::vector<int> out;
  for (int v : s.best) out.push_back(perm[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twodist
