#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnchain/tropical_chain.hpp"

namespace bnchain {

struct OracleLimits {
  std::int64_t max_vertices = 100000;
  int max_rank_degree = 8;
};

/// Raised when a model or a rank search would exceed OracleLimits.
class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unit-edge model of a chain of loops. Loop k becomes a cycle of N * c_k
/// vertices; consecutive cycles share the vertex of their common node.
class DiscreteGraph {
 public:
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  /// Neighbours with repetition, so parallel edges appear twice.
  const std::vector<int>& neighbours(int v) const { return adjacency_.at(v); }
  std::int64_t scale() const { return scale_; }
  int node_vertex(int i) const { return node_vertex_.at(i); }
  /// Vertex carrying `p`; throws std::invalid_argument if `p` is not at an
  /// integer multiple of 1/N.
  int vertex_of(const ChainPoint& p) const;
  /// Chain point sitting at vertex v.
  ChainPoint point_of(int v) const;

 private:
  friend DiscreteGraph subdivide_chain(const ChainGeometry&, const std::vector<ChainPoint>&, const OracleLimits&);
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> node_vertex_;
  std::vector<std::vector<int>> loop_vertices_;  // [k-1][position]
  std::vector<ChainPoint> points_;
  std::int64_t scale_ = 1;
};

/// N is the lcm of every length and extra-point denominator. The model has
/// N * sum(c_k) - (g - 1) vertices; larger models throw OracleTooLarge.
DiscreteGraph subdivide_chain(const ChainGeometry& geom, const std::vector<ChainPoint>& extra_points = {},
                              const OracleLimits& limits = {});

/// Model fine enough to carry every point of `D`.
DiscreteGraph subdivide_for(const ChainGeometry& geom, const TropicalDivisor& D, const OracleLimits& limits = {});

struct ChipConfig {
  std::vector<std::int64_t> chips;
  std::int64_t degree() const;
  friend bool operator==(const ChipConfig&, const ChipConfig&) = default;
};

ChipConfig to_chips(const DiscreteGraph& gph, const TropicalDivisor& D);

struct DharResult {
  ChipConfig reduced;
  /// Times each vertex fired; reduced = input - Laplacian * script.
  std::vector<std::int64_t> script;
};

/// Unique q-reduced configuration equivalent to D.
DharResult dhar_reduce(const DiscreteGraph& gph, const ChipConfig& D, int q);

/// D - Laplacian * script.
ChipConfig apply_firing(const DiscreteGraph& gph, const ChipConfig& D, const std::vector<std::int64_t>& script);

/// Non-negative away from q and every set avoiding q burns.
bool is_q_reduced(const DiscreteGraph& gph, const ChipConfig& D, int q);

bool is_winnable(const DiscreteGraph& gph, const ChipConfig& D, int q);

/// Baker-Norine rank by exhaustive search over vertex-supported effective
/// divisors. Throws OracleTooLarge above limits.max_rank_degree.
int baker_norine_rank(const DiscreteGraph& gph, const ChipConfig& D, const OracleLimits& limits = {});

}  // namespace bnchain
