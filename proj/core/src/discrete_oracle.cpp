#include "bnchain/discrete_oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>

namespace bnchain {

namespace {

std::int64_t to_position(const Rational& coord, std::int64_t scale) {
  const Rational x = coord * Rational(scale);
  if (!x.is_integer()) throw std::invalid_argument("point " + coord.str() + " is not on the model");
  return x.num();
}

// Edges from each vertex to the burnt region, or the region reached from q.
std::vector<bool> burn(const DiscreteGraph& gph, const std::vector<std::int64_t>& chips, int q,
                       std::vector<std::int64_t>& burnt_edges) {
  const int n = gph.vertex_count();
  std::vector<bool> burnt(n, false);
  burnt_edges.assign(n, 0);
  std::deque<int> queue{q};
  burnt[q] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : gph.neighbours(u)) {
      if (burnt[w]) continue;
      if (++burnt_edges[w] > chips[w]) {
        burnt[w] = true;
        queue.push_back(w);
      }
    }
  }
  return burnt;
}

}  // namespace

int DiscreteGraph::vertex_of(const ChainPoint& p) const {
  if (p.is_node()) return node_vertex(p.index());
  const int k = p.index();
  if (k < 1 || k > static_cast<int>(loop_vertices_.size())) throw std::invalid_argument("loop outside the model");
  const std::int64_t pos = to_position(p.coord(), scale_);
  const auto& ring = loop_vertices_[k - 1];
  if (pos <= 0 || pos >= static_cast<std::int64_t>(ring.size())) throw std::invalid_argument("coordinate off loop");
  return ring[pos];
}

ChainPoint DiscreteGraph::point_of(int v) const { return points_.at(v); }

DiscreteGraph subdivide_chain(const ChainGeometry& geom, const std::vector<ChainPoint>& extra_points,
                              const OracleLimits& limits) {
  std::int64_t scale = 1;
  std::int64_t count = 0;
  try {
    for (const auto& loop : geom.loops()) scale = lcm64(lcm64(scale, loop.l.den()), loop.m.den());
    for (const auto& p : extra_points) {
      check_point(geom, p);
      if (!p.is_node()) scale = lcm64(scale, p.coord().den());
    }
    Rational total;
    for (const auto& loop : geom.loops()) total += loop.circumference();
    count = (total * Rational(scale)).num() - (geom.g() - 1);
  } catch (const std::overflow_error&) {
    throw OracleTooLarge("model size overflows 64-bit arithmetic");
  }
  if (count > limits.max_vertices) {
    throw OracleTooLarge("model needs " + std::to_string(count) + " vertices, cap is " +
                         std::to_string(limits.max_vertices));
  }

  DiscreteGraph gph;
  gph.scale_ = scale;
  gph.adjacency_.reserve(count);
  gph.points_.reserve(count);
  auto new_vertex = [&](const ChainPoint& p) {
    gph.adjacency_.emplace_back();
    gph.points_.push_back(p);
    return static_cast<int>(gph.adjacency_.size()) - 1;
  };
  gph.node_vertex_.push_back(new_vertex(ChainPoint::node(0)));
  for (int k = 1; k <= geom.g(); ++k) {
    const std::int64_t length = to_position(geom.circumference(k), scale);
    const std::int64_t node_at = to_position(geom.loop(k).l, scale);
    std::vector<int> ring(length);
    ring[0] = gph.node_vertex_[k - 1];
    for (std::int64_t pos = 1; pos < length; ++pos) {
      if (pos == node_at) {
        ring[pos] = new_vertex(ChainPoint::node(k));
        gph.node_vertex_.push_back(ring[pos]);
      } else {
        ring[pos] = new_vertex(ChainPoint::interior(k, Rational(pos, scale)));
      }
    }
    for (std::int64_t pos = 0; pos < length; ++pos) {
      const int a = ring[pos];
      const int b = ring[(pos + 1) % length];
      gph.adjacency_[a].push_back(b);
      gph.adjacency_[b].push_back(a);
    }
    gph.loop_vertices_.push_back(std::move(ring));
  }
  return gph;
}

DiscreteGraph subdivide_for(const ChainGeometry& geom, const TropicalDivisor& D, const OracleLimits& limits) {
  std::vector<ChainPoint> points;
  for (const auto& [p, m] : D.support()) points.push_back(p);
  return subdivide_chain(geom, points, limits);
}

std::int64_t ChipConfig::degree() const { return std::accumulate(chips.begin(), chips.end(), std::int64_t{0}); }

ChipConfig to_chips(const DiscreteGraph& gph, const TropicalDivisor& D) {
  ChipConfig c;
  c.chips.assign(gph.vertex_count(), 0);
  for (const auto& [p, m] : D.support()) c.chips[gph.vertex_of(p)] += m;
  return c;
}

DharResult dhar_reduce(const DiscreteGraph& gph, const ChipConfig& D, int q) {
  const int n = gph.vertex_count();
  if (static_cast<int>(D.chips.size()) != n) throw std::invalid_argument("configuration size differs from graph");
  if (q < 0 || q >= n) throw std::out_of_range("base vertex outside the graph");
  DharResult out{D, std::vector<std::int64_t>(n, 0)};
  auto& chips = out.reduced.chips;

  // Clear debt layer by layer from the outside in: firing the ball of
  // radius k-1 around q feeds every vertex at distance k at least once.
  std::vector<int> dist(n, -1);
  std::vector<int> order{q};
  dist[q] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int w : gph.neighbours(order[head])) {
      if (dist[w] < 0) {
        dist[w] = dist[order[head]] + 1;
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("graph is disconnected");
  const int depth = dist[order.back()];
  std::vector<std::vector<int>> layers(depth + 1);
  for (int v : order) layers[dist[v]].push_back(v);
  std::vector<std::int64_t> fired_from(depth + 2, 0);
  for (int k = depth; k >= 1; --k) {
    std::int64_t need = 0;
    for (int v : layers[k]) need = std::max(need, -chips[v]);
    fired_from[k] = need;
    if (need == 0) continue;
    for (int v : layers[k]) {
      for (int w : gph.neighbours(v)) {
        if (dist[w] == k - 1) {
          chips[v] += need;
          chips[w] -= need;
        }
      }
    }
  }
  // A vertex at distance j lies in every ball fired for k > j.
  for (int k = depth - 1; k >= 0; --k) fired_from[k] += fired_from[k + 1];
  for (int v = 0; v < n; ++v) out.script[v] = fired_from[dist[v] + 1];

  std::vector<std::int64_t> burnt_edges;
  while (true) {
    const std::vector<bool> burnt = burn(gph, chips, q, burnt_edges);
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (int v = 0; v < n; ++v) {
      if (!burnt[v] && burnt_edges[v] > 0) times = std::min(times, chips[v] / burnt_edges[v]);
    }
    if (times == std::numeric_limits<std::int64_t>::max()) break;  // everything burnt
    // The unburnt set can fire `times` times in a row without going negative.
    for (int v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      out.script[v] += times;
      chips[v] -= times * burnt_edges[v];
      for (int w : gph.neighbours(v))
        if (burnt[w]) chips[w] += times;
    }
  }
  return out;
}

ChipConfig apply_firing(const DiscreteGraph& gph, const ChipConfig& D, const std::vector<std::int64_t>& script) {
  ChipConfig out = D;
  for (int v = 0; v < gph.vertex_count(); ++v) {
    for (int w : gph.neighbours(v)) {
      out.chips[v] -= script[v];
      out.chips[w] += script[v];
    }
  }
  return out;
}

bool is_q_reduced(const DiscreteGraph& gph, const ChipConfig& D, int q) {
  for (int v = 0; v < gph.vertex_count(); ++v)
    if (v != q && D.chips[v] < 0) return false;
  std::vector<std::int64_t> burnt_edges;
  const std::vector<bool> burnt = burn(gph, D.chips, q, burnt_edges);
  return std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; });
}

bool is_winnable(const DiscreteGraph& gph, const ChipConfig& D, int q) {
  return dhar_reduce(gph, D, q).reduced.chips[q] >= 0;
}

int baker_norine_rank(const DiscreteGraph& gph, const ChipConfig& D, const OracleLimits& limits) {
  const int q = gph.node_vertex(0);
  if (!is_winnable(gph, D, q)) return -1;
  const std::int64_t degree = D.degree();
  if (degree > limits.max_rank_degree) {
    throw OracleTooLarge("rank search needs degree <= " + std::to_string(limits.max_rank_degree) + ", got " +
                         std::to_string(degree));
  }
  const int n = gph.vertex_count();
  ChipConfig rest = D;
  // Removes r more chips at vertices >= first, in non-decreasing order.
  std::function<bool(int, int)> all_winnable = [&](int r, int first) -> bool {
    if (r == 0) return is_winnable(gph, rest, q);
    for (int v = first; v < n; ++v) {
      --rest.chips[v];
      const bool ok = all_winnable(r - 1, v);
      ++rest.chips[v];
      if (!ok) return false;
    }
    return true;
  };
  int r = 0;
  while (r < degree && all_winnable(r + 1, 0)) ++r;
  return r;
}

}  // namespace bnchain
