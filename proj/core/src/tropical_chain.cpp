#include "bnchain/tropical_chain.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace bnchain {

ChainGeometry::ChainGeometry(std::vector<LoopLengths> loops) : loops_(std::move(loops)) {
  if (loops_.empty()) throw std::invalid_argument("a chain needs at least one loop");
  for (std::size_t k = 0; k < loops_.size(); ++k) {
    if (loops_[k].l.sign() <= 0 || loops_[k].m.sign() <= 0) {
      throw std::invalid_argument("loop " + std::to_string(k + 1) + " has a non-positive length");
    }
  }
}

const LoopLengths& ChainGeometry::loop(int k) const {
  if (k < 1 || k > g()) throw std::out_of_range("loop index " + std::to_string(k) + " outside 1..g");
  return loops_[k - 1];
}

GenericityReport check_genericity(const ChainGeometry& geom) {
  GenericityReport report;
  const std::int64_t bound = 2 * static_cast<std::int64_t>(geom.g()) - 2;
  for (int k = 1; k <= geom.g(); ++k) {
    const Rational ratio = geom.loop(k).l / geom.loop(k).m;
    if (std::max(ratio.num(), ratio.den()) < bound) {
      report.generic = false;
      report.failing_loops.push_back(k);
    }
  }
  return report;
}

ChainPoint ChainPoint::node(int i) {
  ChainPoint p;
  p.is_node_ = true;
  p.index_ = i;
  return p;
}

ChainPoint ChainPoint::interior(int loop, Rational coord) {
  ChainPoint p;
  p.is_node_ = false;
  p.index_ = loop;
  p.coord_ = coord;
  return p;
}

std::string ChainPoint::str() const {
  if (is_node_) return "Q_" + std::to_string(index_);
  return "x_" + std::to_string(index_) + "(" + coord_.str() + ")";
}

std::strong_ordering operator<=>(const ChainPoint& a, const ChainPoint& b) {
  auto major = [](const ChainPoint& p) { return p.is_node_ ? 2 * p.index_ : 2 * p.index_ - 1; };
  if (auto c = major(a) <=> major(b); c != 0) return c;
  return a.coord_ <=> b.coord_;
}

ChainPoint point_on_loop(const ChainGeometry& geom, int k, const Rational& coord) {
  const Rational x = mod(coord, geom.circumference(k));
  if (x.is_zero()) return ChainPoint::node(k - 1);
  if (x == geom.loop(k).l) return ChainPoint::node(k);
  return ChainPoint::interior(k, x);
}

void check_point(const ChainGeometry& geom, const ChainPoint& p) {
  if (p.is_node()) {
    if (p.index() < 0 || p.index() > geom.g()) {
      throw std::invalid_argument("node Q_" + std::to_string(p.index()) + " outside Q_0..Q_g");
    }
    return;
  }
  const int k = p.index();
  if (k < 1 || k > geom.g()) throw std::invalid_argument("loop " + std::to_string(k) + " outside 1..g");
  const Rational& x = p.coord();
  if (x.sign() <= 0 || x >= geom.circumference(k) || x == geom.loop(k).l) {
    throw std::invalid_argument("coordinate " + x.str() + " is not an interior position of loop " + std::to_string(k));
  }
}

TropicalDivisor& TropicalDivisor::add(const ChainPoint& p, int mult) {
  if (mult == 0) return *this;
  auto it = support_.find(p);
  if (it == support_.end()) {
    support_.emplace(p, mult);
  } else if ((it->second += mult) == 0) {
    support_.erase(it);
  }
  return *this;
}

int TropicalDivisor::mult(const ChainPoint& p) const {
  auto it = support_.find(p);
  return it == support_.end() ? 0 : it->second;
}

int TropicalDivisor::degree() const {
  int total = 0;
  for (const auto& [p, m] : support_) total += m;
  return total;
}

bool TropicalDivisor::is_effective() const {
  return std::all_of(support_.begin(), support_.end(), [](const auto& e) { return e.second > 0; });
}

TropicalDivisor operator+(TropicalDivisor a, const TropicalDivisor& b) {
  for (const auto& [p, m] : b.support_) a.add(p, m);
  return a;
}

TropicalDivisor operator-(TropicalDivisor a, const TropicalDivisor& b) {
  for (const auto& [p, m] : b.support_) a.add(p, -m);
  return a;
}

std::string TropicalDivisor::str() const {
  if (support_.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : support_) {
    if (m > 0 && !out.empty()) out += '+';
    if (m < 0) out += '-';
    const int mag = m < 0 ? -m : m;
    if (mag != 1) out += std::to_string(mag);
    out += p.str();
  }
  return out;
}

void check_divisor(const ChainGeometry& geom, const TropicalDivisor& D) {
  for (const auto& [p, m] : D.support()) check_point(geom, p);
}

Rational loop_class(const ChainGeometry& geom, int k, const LoopPoints& pts) {
  Rational sum;
  for (const auto& [coord, m] : pts) sum += coord * Rational(m);
  return mod(sum, geom.circumference(k));
}

LoopReduction loop_reduce(const ChainGeometry& geom, int k, const LoopPoints& pts) {
  int degree = 0;
  for (const auto& [coord, m] : pts) degree += m;
  const Rational sigma = loop_class(geom, k, pts);
  if (sigma.is_zero()) return {degree, std::nullopt};
  return {degree - 1, point_on_loop(geom, k, sigma)};
}

BaseReduction reduce_to_base(const ChainGeometry& geom, const TropicalDivisor& D) {
  check_divisor(geom, D);
  const int g = geom.g();
  std::vector<LoopPoints> interior(g + 1);
  std::vector<int> at_node(g + 1, 0);
  for (const auto& [p, m] : D.support()) {
    if (p.is_node()) {
      at_node[p.index()] += m;
    } else {
      interior[p.index()].emplace_back(p.coord(), m);
    }
  }

  BaseReduction out;
  out.epsilon.assign(g, 0);
  out.x.assign(g, std::nullopt);
  int carry = 0;
  for (int k = g; k >= 1; --k) {
    LoopPoints pts = interior[k];
    pts.emplace_back(geom.loop(k).l, at_node[k] + carry);
    LoopReduction step = loop_reduce(geom, k, pts);
    carry = step.moved;
    if (step.leftover) {
      out.epsilon[k - 1] = 1;
      out.x[k - 1] = step.leftover;
    }
  }
  out.u = carry + at_node[0];
  return out;
}

bool is_equivalent_to_effective(const ChainGeometry& geom, const TropicalDivisor& D) {
  return reduce_to_base(geom, D).u >= 0;
}

ChainPoint solve_special_point(const ChainGeometry& geom, int k, int u) {
  if (u < 0) throw std::invalid_argument("special point needs u >= 0");
  return point_on_loop(geom, k, Rational(u + 1) * geom.loop(k).l);
}

namespace {

[[noreturn]] void deficiency(int loop, const std::vector<int>& orders) {
  std::ostringstream os;
  os << "rank deficiency at loop " << loop << ": orders (";
  for (std::size_t t = 0; t < orders.size(); ++t) os << (t ? "," : "") << orders[t];
  os << ") are not strictly decreasing and non-negative";
  throw RankDeficiencyError(loop, os.str());
}

VanishingSequence checked_orders(int loop, const std::vector<int>& orders) {
  for (std::size_t t = 0; t < orders.size(); ++t) {
    if (orders[t] < 0 || (t > 0 && orders[t - 1] <= orders[t])) deficiency(loop, orders);
  }
  return VanishingSequence(orders);
}

}  // namespace

TropVanishingTable tropical_vanishing_table(const ChainGeometry& geom, const TropicalDivisor& D, int r) {
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  const int g = geom.g();
  BaseReduction base = reduce_to_base(geom, D);

  TropVanishingTable table;
  table.epsilon = base.epsilon;
  table.x = base.x;
  std::vector<int> current(r + 1);
  for (int t = 0; t <= r; ++t) current[t] = base.u - t;
  table.u.push_back(checked_orders(0, current));

  for (int i = 1; i <= g; ++i) {
    const std::vector<int> prev = current;
    char tag = 'e';
    std::optional<int> t0;
    if (base.epsilon[i - 1] == 0) {
      tag = prev[r] > 0 ? 'a' : 'b';
      for (int t = 0; t <= r; ++t)
        if (tag == 'a' || t < r) --current[t];
    } else {
      const ChainPoint& x = *base.x[i - 1];
      for (int t = 0; t <= r && !t0; ++t) {
        if (prev[t] >= 0 && solve_special_point(geom, i, prev[t]) == x) t0 = t;
      }
      if (t0) {
        if (*t0 > 0 && prev[*t0] + 1 == prev[*t0 - 1]) {
          tag = 'c';
        } else {
          tag = 'd';
          ++current[*t0];
        }
      }
    }
    table.case_tags.push_back(tag);
    table.special_index.push_back(t0);
    table.u.push_back(checked_orders(i, current));
  }
  return table;
}

ChainPoint sample_generic_point(const ChainGeometry& geom, int k, int max_u, std::uint64_t seed) {
  const Rational c = geom.circumference(k);
  const Rational l = geom.loop(k).l;
  std::vector<Rational> forbidden{Rational(0), l};
  for (int u = 0; u <= max_u; ++u) forbidden.push_back(mod(Rational(u + 1) * l, c));

  std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(k)};
  std::mt19937_64 engine(sequence);
  // Candidates are the multiples of c / steps; more steps than forbidden spots.
  const std::int64_t steps = 2 * (static_cast<std::int64_t>(max_u) + 3) + 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto n = static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(steps - 1)) + 1;
    const Rational coord = c * Rational(n, steps);
    if (std::find(forbidden.begin(), forbidden.end(), coord) == forbidden.end()) {
      return ChainPoint::interior(k, coord);
    }
  }
  throw std::runtime_error("could not sample a generic point on loop " + std::to_string(k));
}

TropicalDivisor divisor_from_tableau(const Tableau& t, const ChainGeometry& geom, std::uint64_t seed) {
  require_valid(t);
  const BNParams& p = t.params();
  if (geom.g() != p.g) throw std::invalid_argument("geometry genus differs from tableau genus");
  TropicalDivisor D;
  D.add(ChainPoint::node(0), p.r);
  for (int i = 1; i <= p.g; ++i) {
    auto col = t.column_of(i);
    if (!col) {
      D.add(sample_generic_point(geom, i, p.d, seed), 1);
    } else if (*col < p.r) {
      const int u = p.r - *col + beta(t, i, *col) - beta(t, i, p.r) - 1;
      D.add(solve_special_point(geom, i, u), 1);
    }
  }
  return D;
}

bool rank_at_least(const ChainGeometry& geom, const TropicalDivisor& D, int r) {
  if (r < 0) return true;
  const int nodes = geom.g() + 1;
  std::vector<int> parts(nodes, 0);
  // Visits every composition of r into `nodes` parts; stops at the first failure.
  std::function<bool(int, int)> visit = [&](int slot, int remaining) -> bool {
    if (slot == nodes - 1) {
      parts[slot] = remaining;
      TropicalDivisor rest = D;
      for (int j = 0; j < nodes; ++j) rest.add(ChainPoint::node(j), -parts[j]);
      return is_equivalent_to_effective(geom, rest);
    }
    for (int a = remaining; a >= 0; --a) {
      parts[slot] = a;
      if (!visit(slot + 1, remaining - a)) return false;
    }
    return true;
  };
  return visit(0, r);
}

int tropical_rank(const ChainGeometry& geom, const TropicalDivisor& D) {
  if (!is_equivalent_to_effective(geom, D)) return -1;
  int r = 0;
  while (r + 1 <= D.degree() && rank_at_least(geom, D, r + 1)) ++r;
  return r;
}

std::vector<BNComponent> tropical_components(const BNParams& p) {
  std::vector<BNComponent> out;
  for_each_tableau(p, [&](const Tableau& t) {
    out.push_back({t, World::Tropical});
    return true;
  });
  return out;
}

}  // namespace bnchain
