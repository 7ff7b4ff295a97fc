// Command-line front end for the chain Brill-Noether library.
//
// Exit codes: 0 success, 1 invalid input, 2 oracle capacity exceeded,
// 3 disagreement found by `verify`.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "bnchain/discrete_oracle.hpp"
#include "bnchain/effective_series.hpp"
#include "bnchain/render.hpp"
#include "bnchain/serialization.hpp"
#include "bnchain/verify.hpp"

using namespace bnchain;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kTooLarge = 2, kDisagreement = 3 };

struct Globals {
  std::string format = "table";
  std::uint64_t seed = 0;
  bool allow_nongeneric = false;
  bool json() const { return format == "json"; }
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void emit(const Globals& globals, const Json& j, const std::string& table) {
  if (globals.json()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << table;
  }
}

// Optional --g/--d/--r given alongside a file must agree with it.
struct ParamFlags {
  std::optional<int> g, d, r;
  void add_to(CLI::App* cmd) {
    cmd->add_option("--g", g, "genus");
    cmd->add_option("--d", d, "degree");
    cmd->add_option("--r", r, "projective dimension");
  }
  void check(const BNParams& p) const {
    if ((g && *g != p.g) || (d && *d != p.d) || (r && *r != p.r)) {
      throw std::invalid_argument("flags disagree with the parameters in the input file");
    }
  }
};

Tableau load_tableau(const std::string& path) {
  Tableau t = tableau_from_json(read_json(path));
  require_valid(t);
  return t;
}

ChainGeometry load_geometry(const std::string& path, const Globals& globals, std::string& note) {
  ChainGeometry geom = geometry_from_json(read_json(path));
  const GenericityReport report = check_genericity(geom);
  if (!report.generic) {
    std::string loops;
    for (int k : report.failing_loops) loops += (loops.empty() ? "" : ",") + std::to_string(k);
    if (!globals.allow_nongeneric) {
      throw std::invalid_argument("geometry is not generic (loops " + loops + "); pass --allow-nongeneric to override");
    }
    note = "note: non-generic geometry (loops " + loops + "), results need not match a general chain\n";
  }
  return geom;
}

int run_tableaux(const Globals& globals, int g, int d, int r, bool list) {
  const BNParams p{g, d, r};
  check_params(p);
  const LocusKind kind = classify_locus(p);
  const char* locus = kind == LocusKind::Components ? "components" : kind == LocusKind::Empty ? "empty" : "whole-jacobian";
  Json j{{"g", g}, {"d", d}, {"r", r}, {"locus", locus}};
  std::ostringstream table;
  if (list) {
    j["tableaux"] = Json::array();
    for_each_tableau(p, [&](const Tableau& t) {
      j["tableaux"].push_back(t.rows());
      table << t.str();
      if (!t.free_indices().empty()) {
        table << "  free:";
        for (int i : t.free_indices()) table << ' ' << i;
      }
      table << '\n';
      return true;
    });
  } else {
    std::uint64_t count = 0;
    for_each_tableau(p, [&](const Tableau&) {
      ++count;
      return true;
    });
    j["count"] = count;
    table << count << '\n';
  }
  if (kind == LocusKind::WholeJacobian) std::cerr << "note: g - d + r < 0, every class qualifies\n";
  emit(globals, j, table.str());
  return kOk;
}

int run_effective(const Globals& globals, const std::string& tableau_path, const std::string& eh_path,
                  const ParamFlags& flags) {
  EHSeries series;
  std::optional<Tableau> tableau;
  if (!tableau_path.empty()) {
    tableau = load_tableau(tableau_path);
    flags.check(tableau->params());
    series = eh_series_from_tableau(*tableau);
  } else {
    series = eh_series_from_json(read_json(eh_path));
    flags.check(series.params);
  }
  const EffectiveSeries eff = eh_to_effective(series);
  std::string table = render_effective_series(eff);
  if (tableau) table += "\nconcentrated on C_1:\n" + render_concentrated(describe_concentrated_bundle(*tableau, series));
  table += "\nrestrictions L_{j,i} (row j, column i):\n" + render_grid(concentration_grid(series));
  emit(globals, effective_series_to_json(eff), table);
  return kOk;
}

int run_verify_cmd(const Globals& globals, int g_max, const std::vector<std::string>& inject) {
  VerifyOptions options;
  options.g_max = g_max;
  options.seed = globals.seed;
  for (const auto& path : inject) options.injected_geometries.push_back(geometry_from_json(read_json(path)));
  const VerifyReport report = run_verify(options);

  Json j{{"passed", report.passed}, {"checks", report.checks}, {"notices", report.notices}};
  std::ostringstream table;
  for (const auto& n : report.notices) table << "notice: " << n << '\n';
  table << "checks: " << report.checks << '\n';
  if (report.passed) {
    table << "result: pass\n";
  } else {
    j["failure"] = report.failure;
    j["reproducer"] = report.reproducer;
    table << "result: FAIL\n" << report.failure << "\nreproducer:\n" << report.reproducer.dump(2) << '\n';
  }
  emit(globals, j, table.str());
  return report.passed ? kOk : kDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brill-Noether loci on chains of elliptic curves and chains of loops"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--format", globals.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", globals.seed, "seed for generic sampling");
  app.add_flag("--allow-nongeneric", globals.allow_nongeneric, "accept geometries that fail the genericity test");

  std::function<int()> action;

  auto* tab = app.add_subcommand("tableaux", "count or list the tableaux indexing the components");
  int tg = 0, td = 0, tr = 0;
  bool count_flag = false, list_flag = false;
  tab->add_option("--g", tg, "genus")->required();
  tab->add_option("--d", td, "degree")->required();
  tab->add_option("--r", tr, "projective dimension")->required();
  auto* count_opt = tab->add_flag("--count", count_flag, "print the number of components");
  tab->add_flag("--list", list_flag, "list the tableaux in enumeration order")->excludes(count_opt);
  tab->callback([&] { action = [&] { return run_tableaux(globals, tg, td, tr, list_flag); }; });

  auto* eh = app.add_subcommand("eh", "limit linear series attached to a tableau");
  std::string eh_tableau;
  ParamFlags eh_flags;
  eh->add_option("--tableau", eh_tableau, "tableau JSON file")->required();
  eh_flags.add_to(eh);
  eh->callback([&] {
    action = [&] {
      const Tableau t = load_tableau(eh_tableau);
      eh_flags.check(t.params());
      const EHSeries s = eh_series_from_tableau(t);
      emit(globals, eh_series_to_json(s), render_eh_series(s));
      return int{kOk};
    };
  });

  auto* eff = app.add_subcommand("effective", "effective limit linear series");
  std::string eff_tableau, eff_from_eh;
  ParamFlags eff_flags;
  auto* eff_t = eff->add_option("--tableau", eff_tableau, "tableau JSON file");
  auto* eff_e = eff->add_option("--from-eh", eff_from_eh, "limit linear series JSON file");
  eff_t->excludes(eff_e);
  eff_flags.add_to(eff);
  eff->callback([&] {
    if (eff_tableau.empty() && eff_from_eh.empty()) throw CLI::ValidationError("one of --tableau or --from-eh is required");
    action = [&] { return run_effective(globals, eff_tableau, eff_from_eh, eff_flags); };
  });

  auto* trop = app.add_subcommand("tropical", "divisors on a chain of loops");
  trop->require_subcommand(1);
  std::string trop_geometry, trop_tableau, trop_divisor;
  int trop_r = 0;
  auto* tdiv = trop->add_subcommand("divisor", "divisor attached to a tableau");
  tdiv->add_option("--geometry", trop_geometry, "geometry JSON file")->required();
  tdiv->add_option("--tableau", trop_tableau, "tableau JSON file")->required();
  auto* trank = trop->add_subcommand("rank", "rank of a divisor");
  trank->add_option("--geometry", trop_geometry, "geometry JSON file")->required();
  trank->add_option("--divisor", trop_divisor, "divisor JSON file")->required();
  auto* ttable = trop->add_subcommand("table", "vanishing orders at the nodes");
  ttable->add_option("--geometry", trop_geometry, "geometry JSON file")->required();
  ttable->add_option("--divisor", trop_divisor, "divisor JSON file")->required();
  ttable->add_option("--r", trop_r, "rank to track")->required();

  tdiv->callback([&] {
    action = [&] {
      std::string note;
      const ChainGeometry geom = load_geometry(trop_geometry, globals, note);
      const Tableau t = load_tableau(trop_tableau);
      const TropicalDivisor D = divisor_from_tableau(t, geom, globals.seed);
      if (globals.json()) std::cerr << note;
      emit(globals, divisor_to_json(D), note + render_divisor(D));
      return int{kOk};
    };
  });
  trank->callback([&] {
    action = [&] {
      std::string note;
      const ChainGeometry geom = load_geometry(trop_geometry, globals, note);
      const TropicalDivisor D = divisor_from_json(read_json(trop_divisor), &geom);
      const int rank = tropical_rank(geom, D);
      if (globals.json()) std::cerr << note;
      emit(globals, Json{{"rank", rank}}, note + "rank: " + std::to_string(rank) + "\n");
      return int{kOk};
    };
  });
  ttable->callback([&] {
    action = [&] {
      std::string note;
      const ChainGeometry geom = load_geometry(trop_geometry, globals, note);
      const TropicalDivisor D = divisor_from_json(read_json(trop_divisor), &geom);
      const TropVanishingTable table = tropical_vanishing_table(geom, D, trop_r);
      if (globals.json()) std::cerr << note;
      emit(globals, vanishing_table_to_json(table), note + render_vanishing_table(table));
      return int{kOk};
    };
  });

  auto* oracle = app.add_subcommand("oracle", "graph-model chip-firing checks");
  oracle->require_subcommand(1);
  std::string or_geometry, or_divisor;
  std::optional<std::int64_t> subdiv_cap;
  auto* orank = oracle->add_subcommand("rank", "Baker-Norine rank on the subdivided model");
  auto* owin = oracle->add_subcommand("winnable", "whether the divisor is equivalent to an effective one");
  for (auto* cmd : {orank, owin}) {
    cmd->add_option("--geometry", or_geometry, "geometry JSON file")->required();
    cmd->add_option("--divisor", or_divisor, "divisor JSON file")->required();
    cmd->add_option("--subdiv-cap", subdiv_cap, "maximum number of model vertices");
  }
  auto oracle_action = [&](bool want_rank) {
    return [&, want_rank] {
      const ChainGeometry geom = geometry_from_json(read_json(or_geometry));
      const Json dj = read_json(or_divisor);
      const TropicalDivisor D = divisor_from_json(dj, &geom);
      OracleLimits limits;
      if (dj.contains("subdiv_cap")) limits.max_vertices = dj.at("subdiv_cap").get<std::int64_t>();
      if (subdiv_cap) limits.max_vertices = *subdiv_cap;
      const DiscreteGraph gph = subdivide_for(geom, D, limits);
      const ChipConfig chips = to_chips(gph, D);
      Json j{{"vertices", gph.vertex_count()}};
      std::string table;
      if (want_rank) {
        const int rank = baker_norine_rank(gph, chips, limits);
        j["rank"] = rank;
        table = "rank: " + std::to_string(rank) + "\n";
      } else {
        const bool win = is_winnable(gph, chips, gph.node_vertex(0));
        j["winnable"] = win;
        table = std::string("winnable: ") + (win ? "yes" : "no") + "\n";
      }
      table += "vertices: " + std::to_string(gph.vertex_count()) + "\n";
      emit(globals, j, table);
      return int{kOk};
    };
  };
  orank->callback([&] { action = oracle_action(true); });
  owin->callback([&] { action = oracle_action(false); });

  auto* ver = app.add_subcommand("verify", "run the agreement suite");
  int g_max = 6;
  std::vector<std::string> inject;
  ver->add_option("--g-max", g_max, "largest genus to check")->check(CLI::Range(1, 8));
  ver->add_option("--inject-geometry", inject, "extra geometry JSON files to include");
  ver->callback([&] { action = [&] { return run_verify_cmd(globals, g_max, inject); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    return action();
  } catch (const OracleTooLarge& e) {
    std::cerr << "error: oracle too large: " << e.what() << '\n';
    return kTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
