#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bnchain/elliptic_chain.hpp"
#include "bnchain/rational.hpp"
#include "bnchain/tableaux.hpp"

namespace bnchain {

struct LoopLengths {
  Rational l;
  Rational m;
  Rational circumference() const { return l + m; }
  friend bool operator==(const LoopLengths&, const LoopLengths&) = default;
};

/// Chain of g loops. Loop k runs from Q_{k-1} (coordinate 0) along the
/// l-arc to Q_k (coordinate l_k), then back along the m-arc.
class ChainGeometry {
 public:
  /// Throws std::invalid_argument unless there are g >= 1 loops with positive lengths.
  explicit ChainGeometry(std::vector<LoopLengths> loops);

  int g() const { return static_cast<int>(loops_.size()); }
  const std::vector<LoopLengths>& loops() const { return loops_; }
  /// Loop k is 1-based.
  const LoopLengths& loop(int k) const;
  Rational circumference(int k) const { return loop(k).circumference(); }

  friend bool operator==(const ChainGeometry&, const ChainGeometry&) = default;

 private:
  std::vector<LoopLengths> loops_;
};

struct GenericityReport {
  bool generic = true;
  std::vector<int> failing_loops;
};

/// Loop k passes when l_k/m_k = p/q in lowest terms has max(p, q) >= 2g-2.
GenericityReport check_genericity(const ChainGeometry& geom);

/// A point of the chain: a node Q_i or an interior point of loop k given by
/// its coordinate in (0, c_k) other than l_k.
class ChainPoint {
 public:
  static ChainPoint node(int i);
  /// Unchecked interior point; use point_on_loop to canonicalize.
  static ChainPoint interior(int loop, Rational coord);

  bool is_node() const { return is_node_; }
  /// Node index, or loop index for interior points.
  int index() const { return index_; }
  const Rational& coord() const { return coord_; }

  /// "Q_3" or "x_2(11/1)".
  std::string str() const;

  friend bool operator==(const ChainPoint&, const ChainPoint&) = default;
  /// Order along the chain: Q_0 < loop 1 interior (by coordinate) < Q_1 < ...
  friend std::strong_ordering operator<=>(const ChainPoint& a, const ChainPoint& b);

 private:
  bool is_node_ = true;
  int index_ = 0;
  Rational coord_;
};

/// Point of loop k at `coord` reduced mod c_k; 0 maps to Q_{k-1} and l_k to Q_k.
ChainPoint point_on_loop(const ChainGeometry& geom, int k, const Rational& coord);

/// Throws std::invalid_argument when `p` does not lie on the chain in canonical form.
void check_point(const ChainGeometry& geom, const ChainPoint& p);

class TropicalDivisor {
 public:
  TropicalDivisor() = default;

  /// Adds `mult` at `p`, dropping the entry if it cancels to zero.
  TropicalDivisor& add(const ChainPoint& p, int mult);
  int mult(const ChainPoint& p) const;
  int degree() const;
  bool is_effective() const;
  const std::map<ChainPoint, int>& support() const { return support_; }

  friend TropicalDivisor operator+(TropicalDivisor a, const TropicalDivisor& b);
  friend TropicalDivisor operator-(TropicalDivisor a, const TropicalDivisor& b);

  /// Notation such as "2Q_0+x_1+x_2-Q_3"; interior points are named by loop.
  std::string str() const;

  friend bool operator==(const TropicalDivisor&, const TropicalDivisor&) = default;

 private:
  std::map<ChainPoint, int> support_;
};

/// Throws std::invalid_argument unless every support point is canonical on `geom`.
void check_divisor(const ChainGeometry& geom, const TropicalDivisor& D);

/// (coordinate on loop k, multiplicity)
using LoopPoints = std::vector<std::pair<Rational, int>>;

/// Sum of mult * coord mod c_k: the class of a divisor on loop k relative
/// to the same degree at Q_{k-1}.
Rational loop_class(const ChainGeometry& geom, int k, const LoopPoints& pts);

struct LoopReduction {
  int moved = 0;
  std::optional<ChainPoint> leftover;
};

/// Pushes a loop-k divisor toward Q_{k-1}: everything moves when its class
/// is trivial, otherwise all but one chip, which stays at the point whose
/// coordinate is the class.
LoopReduction loop_reduce(const ChainGeometry& geom, int k, const LoopPoints& pts);

/// Representative u Q_0 + sum eps_k x_k with x_k in loop k minus Q_{k-1}.
struct BaseReduction {
  int u = 0;
  std::vector<int> epsilon;                    // loops 1..g at [k-1]
  std::vector<std::optional<ChainPoint>> x;  // loops 1..g at [k-1]
};

BaseReduction reduce_to_base(const ChainGeometry& geom, const TropicalDivisor& D);

bool is_equivalent_to_effective(const ChainGeometry& geom, const TropicalDivisor& D);

/// The x on loop k with u Q_{k-1} + x equivalent to (u+1) Q_k.
ChainPoint solve_special_point(const ChainGeometry& geom, int k, int u);

class RankDeficiencyError : public std::runtime_error {
 public:
  RankDeficiencyError(int loop, const std::string& what) : std::runtime_error(what), loop_(loop) {}
  int loop() const { return loop_; }

 private:
  int loop_;
};

/// Node-by-node vanishing orders of a divisor of rank >= r.
struct TropVanishingTable {
  std::vector<VanishingSequence> u;              // u[i] at Q_i, i = 0..g
  std::vector<int> epsilon;                      // [k-1]
  std::vector<std::optional<ChainPoint>> x;      // [k-1]
  std::vector<char> case_tags;                   // 'a'..'e' per loop, [k-1]
  std::vector<std::optional<int>> special_index; // t0 for cases c and d
  friend bool operator==(const TropVanishingTable&, const TropVanishingTable&) = default;
};

/// Starts from (u, u-1, ..., u-r) at Q_0 and walks the loops. Throws
/// RankDeficiencyError when the orders stop being strictly decreasing and
/// non-negative.
TropVanishingTable tropical_vanishing_table(const ChainGeometry& geom, const TropicalDivisor& D, int r);

/// Tableau divisor r Q_0 + sum eps_i x_i. Free indices get generic points
/// drawn from a stream seeded by `seed` and the loop index, so each loop's
/// draw is reproducible on its own. Throws std::runtime_error if sampling
/// keeps hitting special positions.
TropicalDivisor divisor_from_tableau(const Tableau& t, const ChainGeometry& geom, std::uint64_t seed = 0);

/// Generic interior point of loop k avoiding the special positions for
/// every u in 0..max_u.
ChainPoint sample_generic_point(const ChainGeometry& geom, int k, int max_u, std::uint64_t seed);

/// True when D - E is equivalent to an effective divisor for every
/// effective E of degree r supported on the nodes.
bool rank_at_least(const ChainGeometry& geom, const TropicalDivisor& D, int r);

/// -1 if D is not equivalent to an effective divisor, else the largest r with rank_at_least.
int tropical_rank(const ChainGeometry& geom, const TropicalDivisor& D);

std::vector<BNComponent> tropical_components(const BNParams& p);

}  // namespace bnchain
