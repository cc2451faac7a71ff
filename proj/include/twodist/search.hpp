#pragma once

#include "twodist/core.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace twodist {

/// Raised when a candidate space exceeds the configured cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchConfig {
  std::uint64_t seed = 1;
  int restarts = 1000;
  std::optional<long long> time_budget_ms;
  std::size_t max_candidates = 20000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SearchResult {
  Code code;
  std::size_t cardinality;
  int restart;           // index of the restart that produced `code`
  int restarts_run;      // fewer than requested only when the budget expired
  VerifyReport report;
};

/// Words of weight d or d + delta over the alphabet, in lexicographic order.
/// Throws InstanceTooLarge past `cap`, std::invalid_argument if empty.
std::vector<Word> candidate_words(const TwoDistParams& p, std::size_t cap);

/// Randomized greedy: each restart starts from {0, 1^d 0^{n-d}} and adds
/// uniformly random compatible candidates until none is left. Restart r uses
/// mt19937_64 seeded with splitmix64(seed ^ splitmix64(r)); the best code over
/// restarts wins, ties going to the lexicographically smallest sorted code and
/// then to the smaller restart index, so the result does not depend on the
/// thread count. A time budget may cut the run short.
SearchResult random_greedy(const TwoDistParams& p, const SearchConfig& cfg);

struct OracleLimits {
  std::size_t max_vertices = 2000;
};

struct OracleResult {
  Int value;                 // A_q(n, {d, d+delta}): both distances occur
  Code code;                 // an optimal code containing the zero word
  Int unrestricted;          // largest code with distances in {d, d+delta}, possibly equidistant
  std::size_t vertices = 0;  // candidate words
  std::uint64_t nodes = 0;   // branch-and-bound nodes
};

/// Exact A_q(n,{d,d+delta}) by maximum clique search on the compatibility
/// graph of candidate words, the zero word being assumed by translation. When
/// the unrestricted optimum is equidistant the search is repeated with both
/// distances forced: some word sees both, so after translating it to zero the
/// code holds u = 1^d and a weight-(d+delta) word v, and up to symmetry v is
/// fixed by how its support and symbols overlap u.
/// Throws InstanceTooLarge past the vertex limit and std::domain_error when no
/// code with both distances exists.
OracleResult exhaustive_maximum(const TwoDistParams& p, const OracleLimits& limits = {});

/// Maximum clique by branch and bound with greedy colouring bounds.
/// `adj` is a symmetric 0/1 adjacency matrix stored as bit rows.
std::vector<int> max_clique(const std::vector<std::vector<std::uint64_t>>& adj, std::size_t vertices,
                            std::uint64_t* nodes = nullptr);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace twodist
