#include "twodist/table.hpp"

#include "twodist/feasibility.hpp"
#include "twodist/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace twodist {

std::string to_string(TableCell::Status s) {
  switch (s) {
    case TableCell::Status::Value: return "value";
    case TableCell::Status::Range: return "range";
    case TableCell::Status::NotWellDefined: return "not-well-defined";
  }
  return "?";
}

std::string TableCell::text() const {
  if (status == Status::NotWellDefined) return "--";
  const std::string e = equidistant ? "e" : "";
  auto sup = [](const std::string& tags) { return tags.empty() ? std::string() : "^" + tags; };
  if (status == Status::Value) {
    std::string tags = e;
    if (!upper_tag.empty()) tags += (tags.empty() ? "" : ",") + upper_tag;
    return upper->str() + sup(tags);
  }
  const std::string lo = lower ? lower->str() + sup(e) : "?";
  return lo + "-" + (upper ? upper->str() : "?") + sup(upper_tag);
}

TableCell compute_cell(const TwoDistParams& p, const CellOptions& opt, const std::vector<CatalogEntry>& catalog) {
  TableCell c;
  c.q = p.q;
  c.n = p.n;
  c.d = p.d;
  c.delta = p.delta;

  const SpecialValues sv = special_values(p);
  if (sv.status) {
    c.note = sv.rule + (sv.boundary ? " (boundary)" : "");
    if (sv.status->kind == BoundStatus::Kind::NotWellDefined) {
      c.status = TableCell::Status::NotWellDefined;
      return c;
    }
    c.lower = c.upper = sv.status->hi;
    c.lower_tag = c.upper_tag = "exact";
    c.lower_source = sv.rule;
    c.status = TableCell::Status::Value;
    return c;
  }

  const BoundReport br = best_upper_bound(p, opt.external);
  c.upper = br.best;
  c.upper_tag = br.tag();

  if (const auto lb = catalog_lower_bound(p, catalog)) {
    c.lower = lb->value;
    c.lower_tag = "construction";
    c.lower_source = lb->family;
  }
  if (const auto eq = catalog_equidistant(p, catalog); eq && (!c.lower || eq->value > *c.lower)) {
    c.lower = eq->value;
    c.lower_tag = "e";
    c.lower_source = eq->family;
    c.equidistant = true;
  }

  if (opt.search_restarts > 0) {
    SearchConfig cfg;
    cfg.seed = opt.seed;
    cfg.restarts = opt.search_restarts;
    cfg.max_candidates = opt.search_max_candidates;
    cfg.threads = 1;  // cells already run in parallel
    try {
      const SearchResult r = random_greedy(p, cfg);
      if (r.report.ok && (!c.lower || Int(r.cardinality) >= *c.lower)) {
        c.lower = Int(r.cardinality);
        c.lower_tag = "search";
        c.lower_source = "random_greedy seed " + std::to_string(opt.seed) + " restart " + std::to_string(r.restart);
        c.equidistant = false;
      }
    } catch (const InstanceTooLarge& e) {
      c.note += std::string(c.note.empty() ? "" : "; ") + "search skipped: " + e.what();
    }
  }

  if (opt.oracle_max_vertices > 0) {
    try {
      const OracleResult r = exhaustive_maximum(p, {opt.oracle_max_vertices});
      c.lower = r.value;
      c.lower_tag = "oracle";
      c.lower_source = "exhaustive maximum clique";
      c.equidistant = false;
      if (!c.upper || r.value < *c.upper) {
        c.upper = r.value;
        c.upper_tag = "oracle";
      }
      if (r.unrestricted > r.value)
        c.note += std::string(c.note.empty() ? "" : "; ") + "equidistant codes reach " + r.unrestricted.str();
    } catch (const InstanceTooLarge& e) {
      c.note += std::string(c.note.empty() ? "" : "; ") + "oracle skipped: " + e.what();
    } catch (const std::domain_error&) {
      c = TableCell{};
      c.q = p.q;
      c.n = p.n;
      c.d = p.d;
      c.delta = p.delta;
      c.note = "oracle: no code with both distances";
      c.status = TableCell::Status::NotWellDefined;
      return c;
    }
  }

  if (c.lower && c.upper && *c.lower > *c.upper)
    throw std::logic_error("compute_cell: lower bound " + c.lower->str() + " exceeds upper bound " + c.upper->str() +
                           " for " + p.str());
  c.status = c.lower && c.upper && *c.lower == *c.upper ? TableCell::Status::Value : TableCell::Status::Range;
  return c;
}

TableCell compute_cell(const TwoDistParams& p, const CellOptions& opt) {
  return compute_cell(p, opt, catalog_entries(p.q, p.n));
}

TableFormat parse_table_format(const std::string& s) {
  if (s == "csv") return TableFormat::csv;
  if (s == "markdown" || s == "md") return TableFormat::markdown;
  if (s == "latex") return TableFormat::latex;
  if (s == "json") return TableFormat::json;
  throw std::invalid_argument("unknown table format '" + s + "'");
}

std::vector<TableCell> compute_table(const TableSpec& spec, const CellOptions& opt) {
  if (spec.q < 2 || spec.q > 9) throw std::invalid_argument("table: q must be in [2, 9]");
  if (spec.n_min < 1 || spec.n_max > 64) throw std::invalid_argument("table: n range must lie in [1, 64]");
  if (spec.delta < 1) throw std::invalid_argument("table: delta must be >= 1");

  std::vector<TwoDistParams> params;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    const int d_hi = spec.d_max > 0 ? std::min(spec.d_max, n - spec.delta) : n - spec.delta;
    for (int d = std::max(1, spec.d_min); d <= d_hi; ++d) params.emplace_back(spec.q, n, d, spec.delta);
  }
  if (params.empty()) return {};

  const auto catalog = catalog_entries(spec.q, spec.n_max);
  std::vector<std::optional<TableCell>> cells(params.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < params.size();) {
      try {
        cells[i] = compute_cell(params[i], opt, catalog);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(params.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<TableCell> out;
  out.reserve(cells.size());
  for (auto& c : cells) out.push_back(std::move(*c));
  return out;
}

nlohmann::json to_json(const TableCell& c) {
  nlohmann::json j{{"q", c.q},
                   {"n", c.n},
                   {"d", c.d},
                   {"delta", c.delta},
                   {"lower", c.lower ? nlohmann::json(c.lower->str()) : nlohmann::json(nullptr)},
                   {"lower_tag", c.lower_tag},
                   {"lower_source", c.lower_source},
                   {"upper", c.upper ? nlohmann::json(c.upper->str()) : nlohmann::json(nullptr)},
                   {"upper_tag", c.upper_tag},
                   {"status", to_string(c.status)},
                   {"equidistant", c.equidistant},
                   {"note", c.note},
                   {"text", c.text()}};
  return j;
}

TableCell cell_from_json(const nlohmann::json& j) {
  TableCell c;
  c.q = j.at("q");
  c.n = j.at("n");
  c.d = j.at("d");
  c.delta = j.at("delta");
  if (!j.at("lower").is_null()) c.lower = Int(j.at("lower").get<std::string>());
  c.lower_tag = j.at("lower_tag");
  c.lower_source = j.at("lower_source");
  if (!j.at("upper").is_null()) c.upper = Int(j.at("upper").get<std::string>());
  c.upper_tag = j.at("upper_tag");
  const std::string st = j.at("status");
  if (st == "value") c.status = TableCell::Status::Value;
  else if (st == "range") c.status = TableCell::Status::Range;
  else if (st == "not-well-defined") c.status = TableCell::Status::NotWellDefined;
  else throw std::invalid_argument("cell_from_json: unknown status '" + st + "'");
  c.equidistant = j.at("equidistant");
  c.note = j.at("note");
  return c;
}

namespace {

std::string latex_text(const TableCell& c) {
  if (c.status == TableCell::Status::NotWellDefined) return "--";
  auto sup = [](const std::string& t) { return t.empty() ? std::string() : "$^{" + t + "}$"; };
  if (c.status == TableCell::Status::Value) {
    std::string tags = c.equidistant ? "e" : "";
    if (!c.upper_tag.empty()) tags += (tags.empty() ? "" : ",") + c.upper_tag;
    return c.upper->str() + sup(tags);
  }
  const std::string lo = c.lower ? c.lower->str() + sup(c.equidistant ? "e" : "") : "?";
  return lo + "-" + (c.upper ? c.upper->str() : "?") + sup(c.upper_tag);
}

}  // namespace

std::string render_table(const TableSpec& spec, const std::vector<TableCell>& cells) {
  std::ostringstream os;
  if (spec.format == TableFormat::csv) {
    os << "q,n,d,delta,lower,lower_tag,upper,upper_tag,status\n";
    for (const auto& c : cells)
      os << c.q << "," << c.n << "," << c.d << "," << c.delta << "," << (c.lower ? c.lower->str() : "") << ","
         << c.lower_tag << "," << (c.upper ? c.upper->str() : "") << "," << c.upper_tag << "," << to_string(c.status)
         << "\n";
    return os.str();
  }
  if (spec.format == TableFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cells) arr.push_back(to_json(c));
    os << nlohmann::json{{"q", spec.q}, {"delta", spec.delta}, {"cells", arr}}.dump(2) << "\n";
    return os.str();
  }

  std::set<int> ds, ns;
  std::map<std::pair<int, int>, const TableCell*> grid;
  for (const auto& c : cells) {
    ds.insert(c.d);
    ns.insert(c.n);
    grid[{c.n, c.d}] = &c;
  }
  auto at = [&](int n, int d) -> const TableCell* {
    const auto it = grid.find({n, d});
    return it == grid.end() ? nullptr : it->second;
  };
  if (spec.format == TableFormat::markdown) {
    os << "q=" << spec.q << ", delta=" << spec.delta << "\n\n| n\\d |";
    for (int d : ds) os << " " << d << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < ds.size(); ++i) os << "---|";
    os << "\n";
    for (int n : ns) {
      os << "| " << n << " |";
      for (int d : ds) {
        const TableCell* c = at(n, d);
        os << " " << (c ? c->text() : "") << " |";
      }
      os << "\n";
    }
    return os.str();
  }
  os << "\\begin{tabular}{|c|";
  for (std::size_t i = 0; i < ds.size(); ++i) os << "c|";
  os << "}\n\\hline\n\\multicolumn{" << ds.size() + 1 << "}{|c|}{$q=" << spec.q << "$, $\\delta=" << spec.delta
     << "$} \\\\\n\\hline\n$n|d$";
  for (int d : ds) os << " & " << d;
  os << " \\\\\n\\hline\n";
  for (int n : ns) {
    os << n;
    for (int d : ds) {
      const TableCell* c = at(n, d);
      os << " & " << (c ? latex_text(*c) : "");
    }
    os << " \\\\ \\hline\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string render_table(const TableSpec& spec, const CellOptions& opt) {
  return render_table(spec, compute_table(spec, opt));
}

}  // namespace twodist
