#pragma once

#include "twodist/bounds.hpp"
#include "twodist/catalog.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twodist {

struct CellOptions {
  const ExternalBounds* external = nullptr;
  int search_restarts = 0;  // 0 disables search
  std::uint64_t seed = 1;
  std::size_t oracle_max_vertices = 0;  // 0 disables the oracle
  std::size_t search_max_candidates = 20000;
};

struct TableCell {
  enum class Status { Value, Range, NotWellDefined };

  int q = 2, n = 1, d = 1, delta = 1;
  std::optional<Int> lower;
  std::string lower_tag;     // construction, search, oracle, exact, e
  std::string lower_source;  // family or procedure that produced it
  std::optional<Int> upper;
  std::string upper_tag;     // lp, d2, dd, sc, plotkin, ext, exact, "*,d2", ...
  Status status = Status::NotWellDefined;
  bool equidistant = false;  // lower bound comes from an equidistant code
  std::string note;

  /// Text such as "12-19^dd", "56^lp", "16^e,d2" or "--".
  std::string text() const;
  friend bool operator==(const TableCell&, const TableCell&) = default;
};

std::string to_string(TableCell::Status s);

/// Catalog entries are passed in so a table builds them once.
TableCell compute_cell(const TwoDistParams& p, const CellOptions& opt, const std::vector<CatalogEntry>& catalog);
TableCell compute_cell(const TwoDistParams& p, const CellOptions& opt = {});

enum class TableFormat { csv, markdown, latex, json };

TableFormat parse_table_format(const std::string& s);

struct TableSpec {
  int q = 2;
  int delta = 2;
  int n_min = 7;
  int n_max = 20;
  int d_min = 1;
  int d_max = 0;  // 0: up to n_max - delta
  TableFormat format = TableFormat::csv;
};

/// Cells for every (n, d) in range with d + delta <= n, ordered by n then d.
/// Cells are computed concurrently. Throws std::invalid_argument outside
/// q <= 9, n <= 64.
std::vector<TableCell> compute_table(const TableSpec& spec, const CellOptions& opt = {});

std::string render_table(const TableSpec& spec, const std::vector<TableCell>& cells);
std::string render_table(const TableSpec& spec, const CellOptions& opt = {});

nlohmann::json to_json(const TableCell& c);
TableCell cell_from_json(const nlohmann::json& j);

}  // namespace twodist
