// twodist: bounds, screens, constructions and searches for two-distance codes.
//
// Exit status: 0 success, 2 the query has no code (infeasible or not well
// defined), 1 usage or tool failure.

#include "twodist/bounds.hpp"
#include "twodist/catalog.hpp"
#include "twodist/code_io.hpp"
#include "twodist/constructions.hpp"
#include "twodist/feasibility.hpp"
#include "twodist/search.hpp"
#include "twodist/table.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace twodist;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNoCode = 2;

struct Globals {
  std::string external_path;
  std::string format;
  std::uint64_t seed = 1;
  std::optional<ExternalBounds> external;

  const ExternalBounds* ext() {
    if (!external && !external_path.empty()) external = ExternalBounds::load(external_path);
    return external ? &*external : nullptr;
  }
  bool as_json() const { return format == "json"; }
};

struct ParamOpts {
  int q = 2, n = 0, d = 0, delta = 0;

  void add(CLI::App* app) {
    app->add_option("--q", q, "alphabet size")->required();
    app->add_option("--n", n, "length")->required();
    app->add_option("--d", d, "smaller distance")->required();
    app->add_option("--delta", delta, "distance gap")->required();
  }
  TwoDistParams params() const { return TwoDistParams(q, n, d, delta); }
};

std::string opt_str(const std::optional<Int>& v) { return v ? v->str() : "n/a"; }

json distribution_json(const DistanceDistribution& dd) {
  json a = json::object();
  for (int j = 0; j <= dd.n(); ++j)
    if (dd.pair_counts()[static_cast<std::size_t>(j)]) a[std::to_string(j)] = dd.A(j).str();
  return a;
}

std::string distribution_text(const DistanceDistribution& dd) {
  std::ostringstream os;
  for (int j = 0; j <= dd.n(); ++j)
    if (dd.pair_counts()[static_cast<std::size_t>(j)]) os << " A_" << j << "=" << dd.A(j);
  return os.str();
}

int cmd_bound(Globals& g, const ParamOpts& po) {
  const TwoDistParams p = po.params();
  const BoundReport r = best_upper_bound(p, g.ext());
  const SpecialValues sv = special_values(p);
  const bool nwd = r.special && r.special->kind == BoundStatus::Kind::NotWellDefined;
  if (g.as_json()) {
    json j{{"params", p.str()}, {"q", p.q}, {"n", p.n}, {"d", p.d}, {"delta", p.delta}};
    if (r.special) j["special"] = {{"status", r.special->str()}, {"rule", r.special_rule}, {"boundary", sv.boundary}};
    json entries = json::array();
    for (const auto& e : r.entries)
      entries.push_back({{"method", to_string(e.method)},
                         {"value", e.value ? json(e.value->str()) : json(nullptr)},
                         {"counts_toward_best", e.counts_toward_best},
                         {"note", e.note}});
    j["entries"] = entries;
    j["best"] = r.best ? json(r.best->str()) : json(nullptr);
    j["tag"] = r.tag();
    json conj = json::array();
    for (const auto& c : sv.conjectures) conj.push_back({{"lower", c.value.str()}, {"rule", c.rule}});
    j["conjectural_lower_bounds"] = conj;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.str() << "\n";
    if (r.special) {
      std::cout << "  " << r.special->str() << "  (" << r.special_rule << (sv.boundary ? ", boundary" : "") << ")\n";
    }
    for (const auto& e : r.entries) {
      std::cout << "  " << to_string(e.method) << std::string(9 - to_string(e.method).size(), ' ') << opt_str(e.value);
      if (!e.counts_toward_best) std::cout << "  [not a general bound]";
      if (!e.note.empty()) std::cout << "  " << e.note;
      std::cout << "\n";
    }
    for (const auto& c : sv.conjectures) std::cout << "  conjectural lower bound " << c.value << " (" << c.rule << ")\n";
    if (!nwd) std::cout << "best: " << opt_str(r.best) << (r.tag().empty() ? "" : " ^" + r.tag()) << "\n";
  }
  return nwd ? kNoCode : kOk;
}

int cmd_table(Globals& g, const TableSpec& base, int restarts, std::size_t oracle_vertices) {
  TableSpec spec = base;
  spec.format = parse_table_format(g.format.empty() ? "csv" : g.format);
  CellOptions opt;
  opt.external = g.ext();
  opt.search_restarts = restarts;
  opt.seed = g.seed;
  opt.oracle_max_vertices = oracle_vertices;
  std::cout << render_table(spec, opt);
  return kOk;
}

int cmd_search(Globals& g, const ParamOpts& po, SearchConfig cfg, const std::string& out) {
  const TwoDistParams p = po.params();
  cfg.seed = g.seed;
  const SearchResult r = random_greedy(p, cfg);
  if (!out.empty()) write_code_file(out, r.code);
  if (g.as_json()) {
    std::cout << json{{"params", p.str()},
                      {"cardinality", r.cardinality},
                      {"restart", r.restart},
                      {"restarts_run", r.restarts_run},
                      {"seed", cfg.seed},
                      {"ok", r.report.ok},
                      {"equidistant", r.report.equidistant},
                      {"distances", r.report.observed},
                      {"distribution", distribution_json(r.report.distribution)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << p.str() << ": found " << r.cardinality << " words (restart " << r.restart << " of "
              << r.restarts_run << ", seed " << cfg.seed << ")\n";
    std::cout << "  verified: " << (r.report.ok ? "two distances" : r.report.equidistant ? "equidistant only" : "FAILED")
              << "\n  distribution:" << distribution_text(r.report.distribution) << "\n";
  }
  return kOk;
}

int cmd_oracle(Globals& g, const ParamOpts& po, std::size_t max_vertices, const std::string& out) {
  const TwoDistParams p = po.params();
  std::optional<OracleResult> res;
  try {
    res = exhaustive_maximum(p, {max_vertices});
  } catch (const std::domain_error&) {
    std::cout << p.str() << ": no code with both distances\n";
    return kNoCode;
  }
  const OracleResult& r = *res;
  if (!out.empty()) write_code_file(out, r.code);
  if (g.as_json()) {
    std::cout << json{{"params", p.str()},
                      {"value", r.value.str()},
                      {"unrestricted", r.unrestricted.str()},
                      {"vertices", r.vertices},
                      {"nodes", r.nodes}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << p.str() << " = " << r.value << "  (" << r.vertices << " candidate words, " << r.nodes
              << " search nodes)\n";
    if (r.unrestricted > r.value) std::cout << "  equidistant codes reach " << r.unrestricted << "\n";
  }
  return kOk;
}

int cmd_check(Globals& g, const std::string& path, int d, int delta) {
  const Code code = read_code_file(path);
  const DistanceDistribution dd = distance_distribution(code);
  const auto support = dd.support();
  std::optional<VerifyReport> rep;
  if (d > 0 && delta > 0) {
    rep = verify_two_distance(code, TwoDistParams(code.q(), code.n(), d, delta));
  } else if (support.size() == 2) {
    rep = verify_two_distance(code, TwoDistParams(code.q(), code.n(), support[0], support[1] - support[0]));
  }
  const bool ok = rep && rep->ok;
  const int t = strength(code);
  std::vector<std::string> moments;
  for (int i = 1; i <= std::min(code.n(), 4); ++i) moments.push_back(moment(code, i).str());
  if (g.as_json()) {
    std::cout << json{{"q", code.q()},
                      {"n", code.n()},
                      {"size", code.size()},
                      {"distances", support},
                      {"two_distance", ok},
                      {"equidistant", support.size() == 1},
                      {"distribution", distribution_json(dd)},
                      {"strength", t},
                      {"antipodal", is_antipodal(code)},
                      {"moments", moments}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "q=" << code.q() << " n=" << code.n() << " N=" << code.size() << "\n  distances:";
    for (int j : support) std::cout << " " << j;
    std::cout << "\n  distribution:" << distribution_text(dd) << "\n  strength: " << t
              << "\n  antipodal: " << (is_antipodal(code) ? "yes" : "no") << "\n  moments M_1..:";
    for (const auto& m : moments) std::cout << " " << m;
    std::cout << "\n  verdict: "
              << (ok ? "two-distance code" : support.size() == 1 ? "equidistant, not two-distance" : "not two-distance")
              << "\n";
  }
  return ok ? kOk : kNoCode;
}

int cmd_feasible(Globals& g, int q, int k, int n, int w1, int w2, std::optional<int> s) {
  const LinearParams lp(q, k, n, w1, w2, s);
  bool failed = false;
  json screens = json::array();
  auto line = [&](const std::string& name, const std::string& clause, const std::string& verdict,
                  const std::string& witness) {
    if (verdict == "fail" || verdict == "infeasible") failed = true;
    screens.push_back({{"screen", name}, {"clause", clause}, {"verdict", verdict}, {"witness", witness}});
  };

  try {
    const Oa2Quadratic oa = check_oa2_quadratic(q, lp.size(), n, w1, w2);
    std::ostringstream w;
    w << "Q1=" << oa.Q1 << " Q2=" << oa.Q2 << " residual=" << oa.residual << " roots:";
    for (const auto& x : oa.roots) w << " " << x;
    if (oa.full_weight_length) w << " full-weight length=" << *oa.full_weight_length;
    line("oa2-quadratic", "strength >= 2", oa.ok ? "pass" : "fail", w.str());
  } catch (const std::domain_error& e) {
    line("oa2-quadratic", "strength >= 2", "n/a", e.what());
  }

  if (const auto df = delsarte_form(q, w1, w2)) {
    line("delsarte-form", "projective", "pass",
         "p=" + std::to_string(df->p) + " u=" + std::to_string(df->u) + " h=" + std::to_string(df->h));
  } else {
    line("delsarte-form", "projective", "fail", "w1, w2 are not h p^u, (h+1) p^u");
  }

  const MacWilliamsMu mw = macwilliams_mu(lp);
  line("macwilliams", "first identity", to_string(mw.status),
       "mu1=" + mw.mu1.str() + " mu2=" + mw.mu2.str() + " second-identity residual=" +
           mw.second_identity_residual.str());

  if (k >= 2) {
    try {
      const SrgParams sr = srg_analysis(lp);
      std::ostringstream w;
      w << "(N,K,lambda,mu)=(" << sr.N << "," << sr.K << "," << sr.lambda << "," << sr.mu << ") Delta=" << sr.Delta
        << (sr.delta_matches ? "" : " (!= (q delta)^2)") << " e=(" << sr.e1 << "," << sr.e2 << ")"
        << " printed closed form e=(" << sr.e1_alt << "," << sr.e2_alt << ")" << (sr.alt_agrees ? "" : " disagrees");
      line("srg", "projective", sr.integral ? "pass" : "fail", w.str());
    } catch (const std::domain_error& e) {
      line("srg", "projective", "fail", e.what());
    }
    try {
      for (const auto& gs : gcd_screen_all(lp)) {
        for (const auto& c : gs.clauses)
          if (c.applies)
            line("gcd s=" + std::to_string(gs.s), c.clause, c.holds ? "pass" : "fail", c.detail);
        if (gs.verdict == GcdScreen::Verdict::Abstain) line("gcd s=" + std::to_string(gs.s), "-", "abstain", gs.cited);
      }
    } catch (const std::invalid_argument& e) {
      line("gcd", "-", "n/a", e.what());
    }
    try {
      for (const auto& c : complementary_params(lp)) {
        std::ostringstream w;
        w << "n_c=" << c.n_c << " d_c=" << c.d_c << (c.degenerate ? " degenerate" : "");
        if (c.mu_near) w << " weights d_c:" << *c.mu_near << " d_c+delta:" << *c.mu_far;
        line("complementary s=" + std::to_string(c.s), "-", "info", w.str());
      }
    } catch (const std::invalid_argument& e) {
      line("complementary", "-", "infeasible", e.what());
    }
  }

  if (g.as_json()) {
    std::cout << json{{"params", lp.str()}, {"screens", screens}, {"feasible", !failed}}.dump(2) << "\n";
  } else {
    std::cout << lp.str() << "\n";
    for (const auto& s2 : screens)
      std::cout << "  " << s2["screen"].get<std::string>() << " [" << s2["clause"].get<std::string>()
                << "] " << s2["verdict"].get<std::string>() << ": " << s2["witness"].get<std::string>() << "\n";
    std::cout << "verdict: " << (failed ? "no such code" : "not excluded") << "\n";
  }
  return failed ? kNoCode : kOk;
}

int cmd_construct(Globals& g, const std::string& family, const std::vector<int>& a, bool union_mode,
                  const std::string& from, const std::string& out, const std::string& gen_out) {
  auto need = [&](std::size_t k) {
    if (a.size() != k)
      throw CLI::ValidationError(family + " takes " + std::to_string(k) + " integer parameters");
  };
  std::optional<GeneratorMatrix> gen;
  std::optional<Code> code;
  if (family == "dm") {
    need(3);
    code = dm_code(a[0], a[1], a[2]);
  } else if (family == "simplex") {
    need(2);
    gen = seed_code(SeedKind::simplex, a[0], a[1]);
  } else if (family == "mds2") {
    need(2);
    gen = seed_code(SeedKind::mds2, a[0], a[1]);
  } else if (family == "su1") {
    need(5);
    gen = su1_code(a[0], a[1], a[2], a[3], a[4], union_mode ? Su1Mode::union_ : Su1Mode::removal);
  } else if (family == "su2") {
    need(3);
    gen = su2_code(a[0], a[1], a[2]);
  } else if (family == "arc") {
    need(1);
    gen = arc_code(a[0]);
  } else if (family == "pencil") {
    need(2);
    gen = pencil_code(a[0], a[1]);
  } else if (family == "complementary") {
    if (from.empty()) throw CLI::ValidationError("complementary needs --from <generator file>");
    std::ifstream in(from);
    if (!in) throw std::runtime_error("cannot open " + from);
    gen = complementary_code(read_generator(in)).generator;
  } else {
    const SmallFamily f = parse_small_family(family);
    // weight2: q n; bin-2-2d: n delta; disjoint: n d; ternary13: n
    if (f == SmallFamily::weight2) {
      need(2);
      code = small_family_code(f, a[0], a[1]);
    } else if (f == SmallFamily::ternary13) {
      need(1);
      code = small_family_code(f, 3, a[0]);
    } else {
      need(2);
      code = small_family_code(f, 2, a[0], a[1]);
    }
  }
  if (gen) {
    if (!gen_out.empty()) {
      std::ofstream os(gen_out);
      if (!os) throw std::runtime_error("cannot write " + gen_out);
      write_generator(os, *gen);
    }
    code = gen->rank() == gen->k ? gen->span() : Code(gen->q, gen->n, [&] {
      auto ws = gen->codewords();
      std::sort(ws.begin(), ws.end());
      ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
      return ws;
    }());
  }
  const DistanceDistribution dd = distance_distribution(*code);
  if (out.empty()) {
    write_code(std::cout, *code);
  } else {
    write_code_file(out, *code);
    if (g.as_json()) {
      std::cout << json{{"family", family}, {"q", code->q()}, {"n", code->n()}, {"size", code->size()},
                        {"distances", dd.support()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << family << ": q=" << code->q() << " n=" << code->n() << " N=" << code->size() << " distances:";
      for (int j : dd.support()) std::cout << " " << j;
      std::cout << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds, screens, constructions and searches for codes with two distances"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--external-bounds", g.external_path, "CSV of A_q(n,d) upper bounds (q,n,d,bound)");
  app.add_option("--format", g.format, "text|json, or csv|markdown|latex|json for table");
  app.add_option("--seed", g.seed, "seed for randomized search");

  int rc = kOk;

  ParamOpts bound_p;
  auto* bound = app.add_subcommand("bound", "upper bounds with per-method tags");
  bound_p.add(bound);
  bound->callback([&] { rc = cmd_bound(g, bound_p); });

  TableSpec spec;
  int table_restarts = 0;
  std::size_t table_oracle = 0;
  auto* table = app.add_subcommand("table", "lower/upper bound table for fixed q and delta");
  table->add_option("--q", spec.q)->required();
  table->add_option("--delta", spec.delta)->required();
  table->add_option("--n-min", spec.n_min);
  table->add_option("--n-max", spec.n_max);
  table->add_option("--d-min", spec.d_min);
  table->add_option("--d-max", spec.d_max);
  table->add_option("--search-restarts", table_restarts, "random search per cell (0: off)");
  table->add_option("--oracle-max-vertices", table_oracle, "exact search on small cells (0: off)");
  table->callback([&] { rc = cmd_table(g, spec, table_restarts, table_oracle); });

  ParamOpts search_p;
  SearchConfig cfg;
  long long budget = 0;
  std::string search_out;
  auto* search = app.add_subcommand("search", "randomized greedy lower bounds");
  search_p.add(search);
  search->add_option("--restarts", cfg.restarts);
  search->add_option("--time-budget-ms", budget);
  search->add_option("--threads", cfg.threads);
  search->add_option("--max-candidates", cfg.max_candidates);
  search->add_option("-o,--output", search_out, "write the best code here");
  search->callback([&] {
    if (budget > 0) cfg.time_budget_ms = budget;
    rc = cmd_search(g, search_p, cfg, search_out);
  });

  ParamOpts oracle_p;
  std::size_t max_vertices = 2000;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "exact value by maximum clique search");
  oracle_p.add(oracle);
  oracle->add_option("--max-vertices", max_vertices);
  oracle->add_option("-o,--output", oracle_out);
  oracle->callback([&] { rc = cmd_oracle(g, oracle_p, max_vertices, oracle_out); });

  std::string check_path;
  int check_d = 0, check_delta = 0;
  auto* check = app.add_subcommand("check", "verify a code file");
  check->add_option("file", check_path)->required();
  check->add_option("--d", check_d);
  check->add_option("--delta", check_delta);
  check->callback([&] { rc = cmd_check(g, check_path, check_d, check_delta); });

  int fq = 2, fk = 0, fn = 0, fw1 = 0, fw2 = 0, fs = 0;
  auto* feasible = app.add_subcommand("feasible", "existence screens for linear two-weight codes");
  feasible->add_option("--q", fq)->required();
  feasible->add_option("--k", fk)->required();
  feasible->add_option("--n", fn)->required();
  feasible->add_option("--w1", fw1)->required();
  feasible->add_option("--w2", fw2)->required();
  feasible->add_option("--s", fs, "column multiplicity (default: try all)");
  feasible->callback([&] {
    rc = cmd_feasible(g, fq, fk, fn, fw1, fw2, fs > 0 ? std::optional<int>(fs) : std::nullopt);
  });

  std::string family, from, con_out, gen_out;
  std::vector<int> con_args;
  bool union_mode = false;
  auto* construct = app.add_subcommand(
      "construct",
      "build a code: dm p l h | simplex q m | mds2 q r | su1 q m r s h [--union] | su2 p m r | arc q |\n"
      "pencil q delta | weight2 q n | bin-2-2d n delta | disjoint n d | ternary13 n | complementary --from G");
  construct->add_option("family", family)->required();
  construct->add_option("params", con_args);
  construct->add_flag("--union", union_mode, "SU1 union instead of removal");
  construct->add_option("--from", from, "generator matrix file for complementary");
  construct->add_option("-o,--output", con_out, "code file (default: stdout)");
  construct->add_option("--generator-out", gen_out, "also write the generator matrix");
  construct->callback([&] { rc = cmd_construct(g, family, con_args, union_mode, from, con_out, gen_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
