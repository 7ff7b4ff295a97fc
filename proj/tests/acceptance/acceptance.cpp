// One line per acceptance criterion: PASS/FAIL, elapsed time, and a short
// detail. Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "bnchain/discrete_oracle.hpp"
#include "bnchain/effective_series.hpp"
#include "bnchain/serialization.hpp"
#include "bnchain/verify.hpp"
#include "figures.hpp"
#include "oracles.hpp"

using namespace bnchain;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few mismatches; a criterion passes only with none.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  long checks() const { return checks_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + first_};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return "(" + out + ")";
}

Outcome figure_one() {
  Tally tally;
  const EHSeries s = eh_series_from_tableau(figures::example_tableau());
  tally.check(s.components.size() == 6, "component count");
  for (std::size_t i = 0; i < 6 && i < s.components.size(); ++i) {
    const auto& c = s.components[i];
    const std::string at = "C_" + std::to_string(i + 1);
    tally.check(c.bundle.str() == figures::kEHBundles[i], at + " bundle " + c.bundle.str());
    for (int t = 0; t < 3; ++t) {
      tally.check(c.vanish_P.ascending()[t] == figures::kEHAtP[i][t], at + " order at P");
      tally.check(c.vanish_Q[t] == figures::kEHAtQ[i][t], at + " order at Q");
    }
  }
  return tally.outcome("6 bundles and 36 orders match");
}

Outcome figure_two() {
  Tally tally;
  const EHSeries eh = eh_series_from_tableau(figures::example_tableau());
  const EffectiveSeries eff = eh_to_effective(eh);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& c = eff.components[i];
    const std::string at = "C_" + std::to_string(i + 1);
    tally.check(c.degree == figures::kEffDegrees[i], at + " degree");
    for (int t = 0; t < 3; ++t) {
      tally.check(c.w_P.ascending()[t] == figures::kEffAtP[i][t], at + " order at P");
      tally.check(c.w_Q[t] == figures::kEffAtQ[i][t], at + " order at Q");
    }
  }
  // Node values straight from a_alpha = d - u_r(Q_alpha) - u_r(P_{alpha+1}).
  std::vector<int> derived;
  for (int alpha = 1; alpha < 6; ++alpha)
    derived.push_back(6 - eh.components[alpha - 1].vanish_Q.bottom() - eh.components[alpha].vanish_P.bottom());
  tally.check(eff.node_values == derived, "node values " + join(eff.node_values) + " vs formula " + join(derived));
  int balance = 0;
  for (const auto& c : eff.components) balance += c.degree;
  for (int a : eff.node_values) balance -= a;
  tally.check(balance == 6, "degree balance");
  return tally.outcome("degrees (3,4,4,4,4,3), 36 orders match; a = " + join(eff.node_values) +
                       " from the formula (the listed (3,2,4,1,2) violates the formula and sum d_i - sum a = d)");
}

Outcome concentrated_column() {
  Tally tally;
  const auto pieces = describe_concentrated_bundle(figures::example_tableau());
  tally.check(pieces.size() == 6, "piece count");
  tally.check(pieces[0].kind == ConcentratedPiece::Kind::Concentration && pieces[0].degree() == 3,
              "concentration component degree " + std::to_string(pieces[0].degree()));
  for (std::size_t j = 1; j < pieces.size(); ++j)
    tally.check(pieces[j].bundle.str() == figures::kConcentratedColumn[j - 1],
                "C_" + std::to_string(j + 1) + " " + pieces[j].bundle.str());
  return tally.outcome("d_1 = 3; O(2Q_2-P_2), O(4Q_3-3P_3), O, O(2Q_5-P_5), O");
}

Outcome counting() {
  Tally tally;
  int params = 0;
  for (int g = 1; g <= 8; ++g) {
    for (int r = 0; r <= 2 * g; ++r) {
      for (int d = 0; d <= 3 * g; ++d) {
        const BNParams p{g, d, r};
        if (p.kbar() < 0 || rho(p) < 0) continue;
        std::uint64_t n = 0;
        for_each_tableau(p, [&](const Tableau&) { return ++n, true; });
        const std::uint64_t expected = binomial(g, rho(p)) * (p.kbar() == 0 ? 1 : hook_count(p.k(), p.kbar()));
        tally.check(n == expected, "count at " + std::to_string(g) + "," + std::to_string(d) + "," + std::to_string(r));
        ++params;
      }
    }
  }
  tally.check(enumerate_tableaux({6, 6, 2}).size() == 5, "(6,6,2)");
  tally.check(enumerate_tableaux({5, 4, 1}).size() == 10, "(5,4,1)");
  tally.check(enumerate_tableaux({6, 4, 1}).size() == 5, "(6,4,1)");
  for (int k = 1; k <= 4; ++k)
    for (int kbar = 1; kbar <= 4; ++kbar)
      tally.check(hook_count(k, kbar) == oracle::count_standard_fillings(k, kbar),
                  "hook count " + std::to_string(k) + "x" + std::to_string(kbar));
  return tally.outcome(std::to_string(params) + " parameter triples with g <= 8; hook counts match for k, kbar <= 4");
}

ChainGeometry rank_geometry() {
  return ChainGeometry({{Rational(10), Rational(1)},
                        {Rational(11), Rational(1)},
                        {Rational(10), Rational(3)},
                        {Rational(11), Rational(2)},
                        {Rational(12), Rational(1)},
                        {Rational(10), Rational(1)}});
}

Outcome rank_certification() {
  Tally tally;
  const ChainGeometry geom = rank_geometry();
  tally.check(check_genericity(geom).generic, "geometry is generic");
  int largest = 0;
  for (const Tableau& t : enumerate_tableaux({6, 6, 2})) {
    const TropicalDivisor D = divisor_from_tableau(t, geom);
    const int trop = tropical_rank(geom, D);
    tally.check(trop == 2, t.str() + " tropical rank " + std::to_string(trop));
    const DiscreteGraph gph = subdivide_for(geom, D, OracleLimits{100000, 8});
    largest = std::max(largest, gph.vertex_count());
    const int bn = baker_norine_rank(gph, to_chips(gph, D));
    tally.check(bn == trop, t.str() + " graph rank " + std::to_string(bn));
  }
  return tally.outcome("5 tableaux: tropical rank 2, graph rank 2 (models up to " + std::to_string(largest) +
                       " vertices)");
}

Outcome remark_agreement() {
  Tally tally;
  std::mt19937_64 rng(0);
  long tableaux = 0;
  for (const BNParams& p : component_params(8)) {
    for_each_tableau(p, [&](const Tableau& t) {
      ++tableaux;
      const EffectiveSeries eff = eh_to_effective(eh_series_from_tableau(t));
      for (int n = 0; n < 3; ++n) {
        const ChainGeometry geom = random_generic_geometry(p.g, rng);
        const TropVanishingTable table = tropical_vanishing_table(geom, divisor_from_tableau(t, geom, n), p.r);
        for (int i = 0; i <= p.g; ++i) {
          const std::vector<int> closed = oracle::closed_form_orders(t.rows(), p.r, i);
          for (int s = 0; s <= p.r; ++s) {
            const int w = i == 0 ? p.r - s : eff.components[i - 1].w_Q[s];
            const bool ok = table.u[i][s] == closed[s] && closed[s] == w;
            tally.check(ok, ok ? std::string() : t.str() + " (i,s) = (" + std::to_string(i) + "," + std::to_string(s) + ")");
          }
        }
      }
      return true;
    });
  }
  return tally.outcome(std::to_string(tableaux) + " tableaux x 3 geometries, every (i, s) agrees");
}

Outcome round_trips() {
  Tally tally;
  std::mt19937_64 rng(1);
  long tableaux = 0;
  for (const BNParams& p : component_params(8)) {
    for_each_tableau(p, [&](const Tableau& t) {
      ++tableaux;
      const EHSeries s = eh_series_from_tableau(t);
      const EffectiveSeries eff = eh_to_effective(s);
      tally.check(effective_to_eh(eff) == s, t.str() + " conversion");
      tally.check(tableau_from_json(Json::parse(tableau_to_json(t).dump())) == t, t.str() + " tableau json");
      tally.check(eh_series_from_json(Json::parse(eh_series_to_json(s).dump())) == s, t.str() + " series json");
      tally.check(effective_series_from_json(Json::parse(effective_series_to_json(eff).dump())) == eff,
                  t.str() + " effective json");
      if (tableaux % 16 == 0) {
        const ChainGeometry geom = random_generic_geometry(p.g, rng);
        const TropicalDivisor D = divisor_from_tableau(t, geom);
        const TropVanishingTable table = tropical_vanishing_table(geom, D, p.r);
        tally.check(geometry_from_json(Json::parse(geometry_to_json(geom).dump())) == geom, "geometry json");
        tally.check(divisor_from_json(Json::parse(divisor_to_json(D).dump()), &geom) == D, "divisor json");
        tally.check(vanishing_table_from_json(Json::parse(vanishing_table_to_json(table).dump())) == table,
                    "table json");
      }
      return true;
    });
  }
  return tally.outcome(std::to_string(tableaux) + " tableaux, " + std::to_string(tally.checks()) + " round trips");
}

Outcome oracle_cross_validation() {
  Tally tally;
  std::mt19937_64 rng(2026);
  int winnable = 0, ranks = 0;
  while (winnable < 240) {
    const int g = 1 + static_cast<int>(rng() % 4);
    const ChainGeometry geom = random_generic_geometry(g, rng);
    const TropicalDivisor D = random_divisor(geom, -6, 6, rng);
    const DiscreteGraph gph = subdivide_for(geom, D);
    tally.check(is_equivalent_to_effective(geom, D) == is_winnable(gph, to_chips(gph, D), gph.node_vertex(0)),
                "winnability of " + D.str());
    ++winnable;
  }
  while (ranks < 60) {
    const int g = 1 + static_cast<int>(rng() % 4);
    const ChainGeometry geom = random_generic_geometry(g, rng);
    const TropicalDivisor D = random_divisor(geom, 1, 4, rng);
    TropicalDivisor E;
    for (const auto& [p, m] : D.support()) E.add(p, m < 0 ? -m : m);
    if (E.degree() > 8) continue;
    const DiscreteGraph gph = subdivide_for(geom, E);
    // Rank is at most deg - g off the special range and deg / 2 inside it.
    const int rank_bound = E.degree() > 2 * g - 2 ? E.degree() - g : E.degree() / 2;
    if (binomial(gph.vertex_count() + rank_bound, rank_bound + 1) > 300000) continue;
    const int trop = tropical_rank(geom, E);
    const int bn = baker_norine_rank(gph, to_chips(gph, E));
    tally.check(trop == bn, E.str() + ": tropical " + std::to_string(trop) + ", graph " + std::to_string(bn));
    ++ranks;
  }
  return tally.outcome(std::to_string(winnable) + " winnability and " + std::to_string(ranks) + " rank comparisons agree");
}

Outcome property_suite() {
  Tally tally;
  std::mt19937_64 rng(9);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  auto vanishing = [&](int r, int top) {
    std::vector<int> v(r + 1);
    v[r] = draw(0, top - r);
    for (int t = r - 1; t >= 0; --t) v[t] = draw(v[t + 1] + 1, top - t);
    return VanishingSequence(v);
  };

  for (int n = 0; n < 2000; ++n) {
    const int r = draw(0, 3), d = draw(r, 8);
    const auto vp = vanishing(r, d), vq = vanishing(r, d);
    int equal = 0, above = 0;
    for (int t = 0; t <= r; ++t) {
      equal += vp[t] + vq[r - t] == d;
      above += vp[t] + vq[r - t] > d;
    }
    tally.check(check_vanishing_pair(d, vp, vq).ok == (equal <= 1 && above == 0), "pair " + vp.str() + vq.str());

    const auto u = vanishing(r, d);
    const int t0 = draw(0, r);
    tally.check((component_series_from_vanishing(d, u).kind == ComponentConstruction::Kind::Family) == (u.bottom() > 0),
                "family " + u.str());
    const bool blocked = t0 > 0 && u[t0] + 1 == u[t0 - 1];
    tally.check((component_series_from_vanishing(d, u, t0).kind == ComponentConstruction::Kind::Unique) ==
                    (!blocked && (t0 == r || u.bottom() > 0)),
                "unique " + u.str());
  }

  for (const BNParams& p : component_params(6)) {
    for (const Tableau& t : enumerate_tableaux(p)) {
      const ChainGeometry geom = random_generic_geometry(p.g, rng);
      const TropVanishingTable table = tropical_vanishing_table(geom, divisor_from_tableau(t, geom), p.r);
      for (int i = 1; i <= p.g; ++i) {
        const char tag = table.case_tags[i - 1];
        for (int s = 0; s <= p.r; ++s) {
          int expected = table.u[i - 1][s];
          if (tag == 'a' || (tag == 'b' && s < p.r)) --expected;
          if (tag == 'd' && s == *table.special_index[i - 1]) ++expected;
          tally.check(table.u[i][s] == expected, t.str() + " loop " + std::to_string(i) + " case " + tag);
        }
      }
    }
  }

  for (int n = 0; n < 300; ++n) {
    const ChainGeometry geom = random_generic_geometry(draw(1, 3), rng);
    const DiscreteGraph gph = subdivide_chain(geom);
    ChipConfig D{std::vector<std::int64_t>(gph.vertex_count(), 0)};
    for (int j = 0; j < 5; ++j) D.chips[draw(0, gph.vertex_count() - 1)] += draw(-3, 4);
    const int q = draw(0, gph.vertex_count() - 1);
    const ChipConfig once = dhar_reduce(gph, D, q).reduced;
    tally.check(dhar_reduce(gph, once, q).reduced == once && is_q_reduced(gph, once, q), "dhar idempotence");
  }

  std::vector<LoopLengths> loops(6, {Rational(13), Rational(1)});
  loops[3] = {Rational(1), Rational(3)};
  const GenericityReport report = check_genericity(ChainGeometry(loops));
  tally.check(!report.generic && report.failing_loops == std::vector<int>{4}, "1/3 at g = 6");
  return tally.outcome(std::to_string(tally.checks()) + " property checks");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Figure 1 limit series", figure_one},
      {"Figure 2 effective series", figure_two},
      {"concentrated bundle column", concentrated_column},
      {"component counts", counting},
      {"rank certification at (6,6,2)", rank_certification},
      {"closed form = divisor table = effective series", remark_agreement},
      {"round trips", round_trips},
      {"oracle cross-validation", oracle_cross_validation},
      {"property suite", property_suite},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[n].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !out.pass;
    std::printf("%s  %zu  %-48s %8.2fs  %s\n", out.pass ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(), secs,
                out.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
