#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnchain/elliptic_chain.hpp"
#include "bnchain/tableaux.hpp"
#include "bnchain/tropical_chain.hpp"

namespace bnchain {

/// Restricted bundle L_{i,i} of degree d_i with the orders of its section
/// space W_i at P_i and Q_i.
struct EffectiveComponent {
  int degree = 0;
  EllipticBundleClass bundle;
  VanishingSequence w_P;
  VanishingSequence w_Q;
  friend bool operator==(const EffectiveComponent&, const EffectiveComponent&) = default;
};

/// Effective limit linear series on a chain; node_values[alpha-1] is the
/// integer attached to the node Q_alpha = P_{alpha+1}.
struct EffectiveSeries {
  BNParams params;
  std::vector<EffectiveComponent> components;
  std::vector<int> node_values;
  friend bool operator==(const EffectiveSeries&, const EffectiveSeries&) = default;
};

struct EffectiveCheck {
  bool valid = true;
  bool refined = true;
  /// 'a' degree balance, 'b' node sums and bounds, 'c' section through the node, 's' shape.
  std::optional<char> condition;
  std::optional<int> node;
  std::string diagnostic;
};

/// Node conditions are checked left to right first, then the degree balance.
EffectiveCheck check_effective(const EffectiveSeries& series);

/// Shifts each vanishing sequence down by its last entry. Throws
/// std::invalid_argument naming the node when `series` is not refined.
EffectiveSeries eh_to_effective(const EHSeries& series);

/// Degree carried by the sub-chains left and right of component j (1-based).
struct SideDegrees {
  int left = 0;
  int right = 0;
};
SideDegrees side_degrees(const EffectiveSeries& series, int j);

/// Inverse of eh_to_effective. Throws std::invalid_argument for invalid or
/// non-refined input and when a side degree is negative.
EHSeries effective_to_eh(const EffectiveSeries& series);

/// w_s(i) = r - s + beta(i, s) - beta(i, r); i = 0 gives (r, ..., 0).
VanishingSequence effective_vanishing_from_tableau(const Tableau& t, int i);

/// Restriction of the bundle concentrated on component 1 to each C_i.
struct ConcentratedPiece {
  enum class Kind { Concentration, Trivial, PointBundle, GenericPoint };
  Kind kind = Kind::Trivial;
  int component = 1;
  /// For PointBundle: x_i + c_P P_i is equivalent to c_Q Q_i, with c_Q = c_P + 1.
  int c_P = 0;
  int c_Q = 0;
  EllipticBundleClass bundle;

  int degree() const { return bundle.degree(); }
  std::string str() const;
};

/// Component 1 carries the full degree d_1 = r + 1 - beta(1, r); every
/// other component carries degree 0 or 1.
std::vector<ConcentratedPiece> describe_concentrated_bundle(const Tableau& t);
/// Same, reusing the generic classes of an already built series for t.
std::vector<ConcentratedPiece> describe_concentrated_bundle(const Tableau& t, const EHSeries& series);

/// grid[j-1][i-1] is the restriction to C_j of the bundle concentrated on
/// C_i, computed from the vanishing data of `series`.
std::vector<std::vector<EllipticBundleClass>> concentration_grid(const EHSeries& series);

struct VanishingAgreement {
  bool agree = true;
  std::optional<int> i;
  std::optional<int> s;
  std::string diagnostic;
};

/// Compares, at every node Q_i and index s, the closed form above, the
/// Q-side orders of eh_to_effective(eh_series_from_tableau(t)) and the
/// node-by-node table of the tableau divisor on `geom`.
VanishingAgreement compare_vanishing(const Tableau& t, const ChainGeometry& geom, std::uint64_t seed = 0);

}  // namespace bnchain
