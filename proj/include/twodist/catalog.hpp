#pragma once

#include "twodist/constructions.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace twodist {

/// A constructible code with parameters predicted by its family formula.
/// delta == 0 marks an equidistant code at distance d.
struct CatalogEntry {
  std::string family;
  int q = 2;  // alphabet actually used; the code embeds in any larger alphabet
  int n = 0;
  int d = 0;
  int delta = 0;
  Int size;
  bool linear = false;
  std::function<Code()> build;

  bool equidistant() const { return delta == 0; }
};

/// Every catalogued family instance over alphabets q' <= q with length <= n_max.
/// Families: difference-matrix codes, SU1 (removal and union), SU2, hyperoval,
/// pencil, MDS [r,2] and repetitions, simplex and [q+1,2,q] repetitions.
/// Length-dependent small families are handled by catalog_lower_bound.
std::vector<CatalogEntry> catalog_entries(int q, int n_max);

struct CatalogBound {
  Int value;
  std::string family;
  bool equidistant = false;
  int source_n = 0;  // the code is zero-padded from this length
  std::function<Code()> build;  // code of length n (already padded)
};

/// Largest catalogued two-distance code for the parameters, padding shorter
/// codes with zero coordinates.
std::optional<CatalogBound> catalog_lower_bound(const TwoDistParams& p, const std::vector<CatalogEntry>& entries);

/// Largest catalogued equidistant code at distance d or d + delta.
std::optional<CatalogBound> catalog_equidistant(const TwoDistParams& p, const std::vector<CatalogEntry>& entries);

}  // namespace twodist
