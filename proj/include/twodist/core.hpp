#pragma once

#include "twodist/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace twodist {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

/// A q-ary block code: a nonempty list of pairwise distinct words of length n.
/// Immutable once built; the constructor enforces the invariants.
class Code {
 public:
  Code(int q, int n, std::vector<Word> words);

  int q() const { return q_; }
  int n() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  const Word& operator[](std::size_t i) const { return words_[i]; }

  /// Same code with `extra` all-zero coordinates appended.
  Code padded(int extra) const;
  /// Words sorted lexicographically; handy for comparisons.
  Code sorted() const;

 private:
  int q_;
  int n_;
  std::vector<Word> words_;
};

int hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b);
int weight(std::span<const Symbol> w);

/// Query key (q, n, d, delta) for a code whose distances are d and d + delta.
struct TwoDistParams {
  int q;
  int n;
  int d;
  int delta;

  TwoDistParams(int q, int n, int d, int delta);
  int far() const { return d + delta; }
  std::string str() const;
  friend bool operator==(const TwoDistParams&, const TwoDistParams&) = default;
};

/// Shapes (i, b) of a pair u = 1^d 0^{n-d}, v of weight d + delta with
/// d(u, v) in {d, d + delta}: v meets u in i places, b of them with a symbol
/// other than 1. Every code with both distances contains such a pair up to
/// translation and symmetry, and {0, u, v} is one, so the list is empty
/// exactly when no such code exists.
std::vector<std::pair<int, int>> pair_shapes(const TwoDistParams& p);

/// A_j = (ordered pairs at distance j) / N for j = 0..n.
class DistanceDistribution {
 public:
  DistanceDistribution(std::size_t cardinality, std::vector<std::uint64_t> pair_counts);

  std::size_t cardinality() const { return cardinality_; }
  int n() const { return static_cast<int>(pair_counts_.size()) - 1; }
  const std::vector<std::uint64_t>& pair_counts() const { return pair_counts_; }
  Rational A(int j) const;
  /// Distances j > 0 that occur.
  std::vector<int> support() const;

 private:
  std::size_t cardinality_;
  std::vector<std::uint64_t> pair_counts_;
};

/// Encodes a table cell: an exact value, a range, "--" or an infeasible query.
struct BoundStatus {
  enum class Kind { ExactValue, Range, NotWellDefined, Infeasible };

  Kind kind = Kind::NotWellDefined;
  Int lo = 0;
  Int hi = 0;
  std::vector<std::string> tags;

  static BoundStatus exact(Int v, std::vector<std::string> tags = {});
  static BoundStatus range(Int lo, Int hi, std::vector<std::string> tags = {});
  static BoundStatus not_well_defined(std::vector<std::string> tags = {});
  static BoundStatus infeasible(std::vector<std::string> tags = {});

  std::string str() const;
};

std::string to_string(BoundStatus::Kind k);

struct VerifyReport {
  bool ok = false;
  bool equidistant = false;  // every distinct pair at a single distance
  std::vector<int> observed;
  DistanceDistribution distribution;
};

/// ok iff every distinct pair is at distance d or d + delta and both occur.
/// Throws std::invalid_argument when q or n disagree with the params.
VerifyReport verify_two_distance(const Code& code, const TwoDistParams& params);

DistanceDistribution distance_distribution(const Code& code);

/// Largest t such that every t-column projection is uniform; 0 if none.
int strength(const Code& code);

/// M_i = sum over ordered pairs of Q_i(d(x, y)); exact.
Rational moment(const Code& code, int i);

/// True iff the words split into groups of q words pairwise at distance n.
bool is_antipodal(const Code& code);

}  // namespace twodist
