#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bnchain/discrete_oracle.hpp"
#include "bnchain/effective_series.hpp"
#include "bnchain/serialization.hpp"

namespace bnchain {

/// Integer loop lengths whose ratios pass check_genericity; loop lengths
/// stay below 2g + 10 so oracle models remain small.
ChainGeometry random_generic_geometry(int g, std::mt19937_64& rng);

/// Every (g, d, r) with g in 1..g_max, 0 <= r <= g, kbar >= 0 and rho >= 0.
std::vector<BNParams> component_params(int g_max);

using ClosedForm = std::function<VanishingSequence(const Tableau&, int)>;

struct VerifyOptions {
  int g_max = 6;
  std::uint64_t seed = 0;
  int geometries_per_params = 3;
  /// Node-by-node orders predicted for a tableau; replaceable to test the suite itself.
  ClosedForm closed_form = effective_vanishing_from_tableau;
  /// Extra geometries to try; non-generic ones are skipped with a notice.
  std::vector<ChainGeometry> injected_geometries;
  /// Random divisors per genus (g <= 4) for the winnability comparison.
  int random_divisors = 20;
  /// Models above this size are not used for the rank comparison.
  int rank_model_vertices = 120;
  /// Largest number of degree-r test divisors the graph rank search may
  /// visit; bigger searches are skipped with a notice.
  std::uint64_t rank_search_budget = 50000;
  OracleLimits limits;
};

struct VerifyReport {
  bool passed = true;
  std::int64_t checks = 0;
  std::vector<std::string> notices;
  std::string failure;
  /// Smallest failing input, ready to be fed back to the CLI.
  Json reproducer;
};

/// Agreement suite: closed form vs effective series vs divisor tables, round
/// trips through both conversions and JSON, tropical vs graph winnability
/// and rank. Stops at the first disagreement.
VerifyReport run_verify(const VerifyOptions& options);

/// Pseudorandom divisor for cross-validation: degree in [min_degree,
/// max_degree], points at nodes or at coordinates with denominators <= 3.
TropicalDivisor random_divisor(const ChainGeometry& geom, int min_degree, int max_degree, std::mt19937_64& rng);

}  // namespace bnchain
