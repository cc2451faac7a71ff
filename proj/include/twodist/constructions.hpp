#pragma once

#include "twodist/core.hpp"
#include "twodist/field.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace twodist {

/// k x n matrix over GF(q). Rows are stored as vectors of field elements.
struct GeneratorMatrix {
  int q = 2;
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> rows;

  GeneratorMatrix() = default;
  GeneratorMatrix(int q, std::vector<std::vector<int>> rows);
  /// Builds the matrix from columns (each of length k).
  static GeneratorMatrix from_columns(int q, int k, const std::vector<std::vector<int>>& columns);

  std::vector<int> column(int j) const;
  std::vector<std::vector<int>> columns() const;
  int rank() const;
  /// All q^k message combinations, in lexicographic message order (the
  /// first message row varies slowest). Duplicates are kept only if the
  /// matrix is rank deficient, so use rank() first when that matters.
  std::vector<Word> codewords() const;
  /// The linear code as a Code. Throws std::invalid_argument unless rank == k.
  Code span() const;
  /// weight -> number of codewords (zero word included).
  std::map<int, long long> weight_distribution() const;
};

/// `k n q` header, then k rows of space-separated entries.
void write_generator(std::ostream& out, const GeneratorMatrix& g);
GeneratorMatrix read_generator(std::istream& in);

/// D(p^l, p^h): rows and columns indexed by GF(p^{l+h}), entry phi(x*y) where
/// phi keeps the l lowest base-p digits.
struct DifferenceMatrix {
  int p = 2;
  int l = 1;
  int h = 0;
  int group_order = 2;  // p^l
  int mu = 1;           // p^h
  std::vector<std::vector<int>> entries;

  int size() const { return group_order * mu; }
  /// Definition check: every difference of two distinct rows hits each group
  /// element exactly mu times.
  bool valid() const;
};

DifferenceMatrix difference_matrix(int p, int l, int h);

/// {row + c*1 : row in D, c in G}: an (q mu, q^2 mu, {(q-1)mu, q mu})_q code.
Code dm_code(int p, int l, int h);

/// Replaces outer symbol i by the i-th inner word. Needs |inner| == outer.q().
Code concatenate(const Code& outer, const Code& inner);

enum class SeedKind { simplex, mds2 };

/// simplex: param = m >= 2, columns are the points of PG(m-1, q).
/// mds2: param = r in [2, q+1], columns (1, t) for t in GF(q) then (0, 1).
GeneratorMatrix seed_code(SeedKind kind, int q, int param);

enum class Su1Mode { removal, union_ };

/// s copies of PG(m-1, q) with h copies of the points of span(e_1..e_r)
/// removed (removal) or added (union). Removal: d = s q^{m-1} - h q^{r-1};
/// union: d = s q^{m-1}; in both cases delta = h q^{r-1}.
GeneratorMatrix su1_code(int q, int m, int r, int s, int h, Su1Mode mode = Su1Mode::removal);

/// mds2(p^m, r) concatenated with simplex(p, m), as a [r(p^m-1)/(p-1), 2m]_p code.
GeneratorMatrix su2_code(int p, int m, int r);

/// Conic plus nucleus in PG(2, q), q = 2^s >= 4: [q+2, 3, {q, q+2}]_q.
GeneratorMatrix arc_code(int q);

/// Rows (x1 | 0^delta), (x2 | 1^delta) over [x1; x2] generating [q+1, 2, q]_q.
GeneratorMatrix pencil_code(int q, int delta);

enum class SmallFamily { weight2, bin_2_2d, disjoint, ternary13 };

SmallFamily parse_small_family(const std::string& name);
std::string to_string(SmallFamily f);

/// weight2: zero word and all 0/1 words of weight 2 (q >= 2), distances {2, 4}.
/// bin_2_2d: binary code of size n (n+1 when n = delta+3) with distances {2, 2+delta}.
/// disjoint: zero word and floor(n/d) disjoint weight-d binary words.
/// ternary13: {0000,1000,2110,2120,2201,2202} padded to length n.
/// `param` is delta for bin_2_2d, d for disjoint and ignored otherwise.
Code small_family_code(SmallFamily kind, int q, int n, int param = 0);

struct ComplementaryCode {
  GeneratorMatrix generator;
  int s = 1;
  bool degenerate = false;  // rank < k or a zero weight among nonzero messages
  std::vector<int> weights; // distinct weights over nonzero messages
};

/// Column multiset complement with respect to s copies of PG(k-1, q), where s
/// is the largest projective multiplicity. Throws std::invalid_argument if g is
/// not full rank or has a zero column, std::domain_error if the complement is
/// empty or [g | g_c] is not equidistant.
ComplementaryCode complementary_code(const GeneratorMatrix& g);

/// Points of PG(k-1, q): vectors whose first nonzero entry is 1, in
/// lexicographic order of their integer encoding.
std::vector<std::vector<int>> projective_points(int q, int k);

/// Scales a nonzero vector so its first nonzero entry is 1.
std::vector<int> normalize(const Field& f, std::vector<int> v);

/// sum_{i<k} ceil(d / q^i)
long long griesmer_length(int q, int k, int d);

}  // namespace twodist
