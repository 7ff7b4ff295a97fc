#include "bnchain/verify.hpp"

#include <algorithm>
#include <sstream>

namespace bnchain {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  // Manual reduction keeps the stream identical across standard libraries.
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Failure {
  std::string message;
  Json reproducer;
};

std::string params_str(const BNParams& p) {
  return "(g,d,r) = (" + std::to_string(p.g) + "," + std::to_string(p.d) + "," + std::to_string(p.r) + ")";
}

std::optional<Failure> check_tableau(const Tableau& t, const std::vector<ChainGeometry>& geoms,
                                     const VerifyOptions& options, VerifyReport& report) {
  const BNParams& p = t.params();
  const EHSeries series = eh_series_from_tableau(t);
  const SeriesCheck sc = check_limit_series(series);
  ++report.checks;
  if (!sc.valid || !sc.refined) {
    return Failure{"tableau series is not a refined limit series: " + sc.diagnostic,
                   {{"check", "limit-series"}, {"tableau", tableau_to_json(t)}}};
  }
  const EffectiveSeries eff = eh_to_effective(series);
  const EffectiveCheck ec = check_effective(eff);
  ++report.checks;
  if (!ec.valid || !ec.refined) {
    return Failure{"effective series fails its conditions: " + ec.diagnostic,
                   {{"check", "effective"}, {"tableau", tableau_to_json(t)}}};
  }
  ++report.checks;
  if (!(effective_to_eh(eff) == series)) {
    return Failure{"effective_to_eh does not invert eh_to_effective", {{"check", "round-trip"}, {"tableau", tableau_to_json(t)}}};
  }
  ++report.checks;
  if (!(eh_series_from_json(eh_series_to_json(series)) == series) ||
      !(effective_series_from_json(effective_series_to_json(eff)) == eff) ||
      !(tableau_from_json(tableau_to_json(t)) == t)) {
    return Failure{"JSON round trip changed a value", {{"check", "json"}, {"tableau", tableau_to_json(t)}}};
  }

  for (std::size_t gi = 0; gi < geoms.size(); ++gi) {
    const ChainGeometry& geom = geoms[gi];
    const TropicalDivisor D = divisor_from_tableau(t, geom, options.seed);
    Json repro{{"check", "vanishing"},
               {"tableau", tableau_to_json(t)},
               {"geometry", geometry_to_json(geom)},
               {"divisor", divisor_to_json(D)},
               {"seed", options.seed}};
    TropVanishingTable table;
    try {
      table = tropical_vanishing_table(geom, D, p.r);
    } catch (const RankDeficiencyError& e) {
      return Failure{std::string("divisor table failed: ") + e.what(), repro};
    }
    for (int i = 0; i <= p.g; ++i) {
      const VanishingSequence closed = options.closed_form(t, i);
      for (int s = 0; s <= p.r; ++s) {
        ++report.checks;
        const int from_series = i == 0 ? p.r - s : eff.components[i - 1].w_Q[s];
        const int predicted = s < closed.size() ? closed[s] : -1;
        const int dynamic = table.u[i][s];
        if (predicted != from_series || predicted != dynamic) {
          repro["i"] = i;
          repro["s"] = s;
          std::ostringstream os;
          os << "vanishing disagreement for " << params_str(p) << ", tableau " << t.str() << " at (i, s) = (" << i
             << ", " << s << "): closed form " << predicted << ", effective series " << from_series
             << ", divisor table " << dynamic;
          return Failure{os.str(), repro};
        }
      }
    }

    if (gi != 0 || !t.free_indices().empty() || D.degree() > options.limits.max_rank_degree) continue;
    const int trop = tropical_rank(geom, D);
    ++report.checks;
    if (trop != p.r) {
      repro["check"] = "tropical-rank";
      return Failure{"tableau divisor has tropical rank " + std::to_string(trop) + ", expected " + std::to_string(p.r),
                     repro};
    }
    try {
      const DiscreteGraph gph = subdivide_for(geom, D, options.limits);
      if (gph.vertex_count() > options.rank_model_vertices) continue;
      const std::uint64_t searches = binomial(gph.vertex_count() + p.r - 1, p.r);
      if (searches > options.rank_search_budget) {
        report.notices.push_back("graph rank skipped for " + t.str() + " at " + params_str(p) + ": " +
                                 std::to_string(searches) + " test divisors");
        continue;
      }
      const int bn = baker_norine_rank(gph, to_chips(gph, D), options.limits);
      ++report.checks;
      if (bn != trop) {
        repro["check"] = "oracle-rank";
        return Failure{"tropical rank " + std::to_string(trop) + " but graph rank " + std::to_string(bn), repro};
      }
    } catch (const OracleTooLarge& e) {
      report.notices.push_back(std::string("oracle skipped: ") + e.what());
    }
  }
  return std::nullopt;
}

}  // namespace

ChainGeometry random_generic_geometry(int g, std::mt19937_64& rng) {
  const std::int64_t bound = std::max<std::int64_t>(2 * g - 2, 1);
  std::vector<LoopLengths> loops;
  for (int k = 0; k < g; ++k) {
    while (true) {
      const std::int64_t m = uniform(rng, 1, 3);
      const std::int64_t l = uniform(rng, bound, bound + 8);
      const Rational ratio(l, m);
      if (std::max(ratio.num(), ratio.den()) >= bound) {
        loops.push_back({Rational(l), Rational(m)});
        break;
      }
    }
  }
  return ChainGeometry(std::move(loops));
}

std::vector<BNParams> component_params(int g_max) {
  std::vector<BNParams> out;
  for (int g = 1; g <= g_max; ++g)
    for (int r = 0; r <= g; ++r)
      for (int kbar = 0; (r + 1) * kbar <= g; ++kbar) out.push_back({g, g - kbar + r, r});
  return out;
}

TropicalDivisor random_divisor(const ChainGeometry& geom, int min_degree, int max_degree, std::mt19937_64& rng) {
  const int target = static_cast<int>(uniform(rng, min_degree, max_degree));
  TropicalDivisor D;
  const int count = static_cast<int>(uniform(rng, 1, 4));
  for (int n = 0; n < count; ++n) {
    int mult = static_cast<int>(uniform(rng, -2, 2));
    if (mult == 0) mult = 1;
    const int k = static_cast<int>(uniform(rng, 1, geom.g()));
    const std::int64_t den = uniform(rng, 1, 3);
    const Rational c = geom.circumference(k);
    const std::int64_t steps = (c * Rational(den)).floor();
    const Rational coord(uniform(rng, 1, std::max<std::int64_t>(steps - 1, 1)), den);
    D.add(point_on_loop(geom, k, coord), mult);
  }
  const int node = static_cast<int>(uniform(rng, 0, geom.g()));
  D.add(ChainPoint::node(node), target - D.degree());
  return D;
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  std::mt19937_64 rng(options.seed);
  auto fail = [&](Failure f) {
    report.passed = false;
    report.failure = std::move(f.message);
    report.reproducer = std::move(f.reproducer);
    return report;
  };

  std::vector<ChainGeometry> injected;
  for (const auto& geom : options.injected_geometries) {
    const GenericityReport gr = check_genericity(geom);
    if (gr.generic) {
      injected.push_back(geom);
      continue;
    }
    std::string loops;
    for (int k : gr.failing_loops) loops += (loops.empty() ? "" : ",") + std::to_string(k);
    report.notices.push_back("skipping non-generic geometry of genus " + std::to_string(geom.g()) + " (loops " +
                             loops + ")");
  }

  for (const BNParams& p : component_params(options.g_max)) {
    std::vector<ChainGeometry> geoms;
    for (int n = 0; n < options.geometries_per_params; ++n) geoms.push_back(random_generic_geometry(p.g, rng));
    for (const auto& geom : injected)
      if (geom.g() == p.g) geoms.push_back(geom);

    std::optional<Failure> failure;
    for_each_tableau(p, [&](const Tableau& t) {
      failure = check_tableau(t, geoms, options, report);
      return !failure;
    });
    if (failure) return fail(std::move(*failure));
  }

  for (int g = 1; g <= std::min(options.g_max, 4); ++g) {
    for (int n = 0; n < options.random_divisors; ++n) {
      const ChainGeometry geom = random_generic_geometry(g, rng);
      const TropicalDivisor D = random_divisor(geom, -6, 6, rng);
      Json repro{{"check", "winnable"}, {"geometry", geometry_to_json(geom)}, {"divisor", divisor_to_json(D)}};
      try {
        const DiscreteGraph gph = subdivide_for(geom, D, options.limits);
        const bool trop = is_equivalent_to_effective(geom, D);
        const bool graph = is_winnable(gph, to_chips(gph, D), gph.node_vertex(0));
        ++report.checks;
        if (trop != graph) {
          return fail({"winnability disagreement on " + D.str() + ": tropical " + (trop ? "yes" : "no") +
                           ", graph " + (graph ? "yes" : "no"),
                       repro});
        }
      } catch (const OracleTooLarge& e) {
        report.notices.push_back(std::string("oracle skipped: ") + e.what());
      }
    }
  }
  return report;
}

}  // namespace bnchain
