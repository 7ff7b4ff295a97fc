#include "bnchain/effective_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnchain {

namespace {

VanishingSequence shifted(const VanishingSequence& v, int by) {
  std::vector<int> out = v.orders();
  for (int& x : out) x += by;
  return VanishingSequence(std::move(out));
}

EffectiveCheck failure(char condition, std::optional<int> node, std::string diagnostic) {
  EffectiveCheck c;
  c.valid = false;
  c.refined = false;
  c.condition = condition;
  c.node = node;
  c.diagnostic = std::move(diagnostic);
  return c;
}

}  // namespace

EffectiveCheck check_effective(const EffectiveSeries& series) {
  const BNParams& p = series.params;
  const int g = p.g;
  const int r = p.r;
  if (static_cast<int>(series.components.size()) != g) {
    return failure('s', std::nullopt, "expected " + std::to_string(g) + " components");
  }
  if (static_cast<int>(series.node_values.size()) != g - 1) {
    return failure('s', std::nullopt, "expected " + std::to_string(g - 1) + " node values");
  }
  for (int i = 1; i <= g; ++i) {
    const auto& c = series.components[i - 1];
    if (c.w_P.size() != r + 1 || c.w_Q.size() != r + 1) {
      return failure('s', std::nullopt, "component " + std::to_string(i) + " has vanishing of the wrong length");
    }
    if (c.bundle.degree() != c.degree || c.degree < 0) {
      return failure('s', std::nullopt, "component " + std::to_string(i) + " bundle degree differs from d_i");
    }
  }

  EffectiveCheck out;
  for (int alpha = 1; alpha < g; ++alpha) {
    const int a = series.node_values[alpha - 1];
    const auto& left = series.components[alpha - 1];
    const auto& right = series.components[alpha];
    const std::string where = "node Q_" + std::to_string(alpha);
    for (int t = 0; t <= r; ++t) {
      const int sum = left.w_Q[t] + right.w_P[r - t];
      if (sum < a) {
        return failure('b', alpha,
                       where + ", t = " + std::to_string(t) + ": " + std::to_string(left.w_Q[t]) + " + " +
                           std::to_string(right.w_P[r - t]) + " < " + std::to_string(a));
      }
      if (sum > a) out.refined = false;
    }
    if (a < r || a > std::min(left.degree, right.degree)) {
      return failure('b', alpha,
                     where + ": node value " + std::to_string(a) + " outside [" + std::to_string(r) + ", " +
                         std::to_string(std::min(left.degree, right.degree)) + "]");
    }
    if (left.w_Q.top() < a || right.w_P.top() < a) {
      return failure('c', alpha, where + ": no section vanishes to order " + std::to_string(a) + " at the node");
    }
  }

  int balance = 0;
  for (const auto& c : series.components) balance += c.degree;
  for (int a : series.node_values) balance -= a;
  if (balance != p.d) {
    return failure('a', std::nullopt,
                   "degrees minus node values give " + std::to_string(balance) + ", expected " + std::to_string(p.d));
  }
  return out;
}

EffectiveSeries eh_to_effective(const EHSeries& series) {
  const SeriesCheck check = check_limit_series(series);
  if (!check.valid || !check.refined) {
    throw std::invalid_argument("eh_to_effective needs a refined series: " + check.diagnostic);
  }
  const BNParams& p = series.params;
  const int r = p.r;
  EffectiveSeries out;
  out.params = p;
  for (const EHComponent& c : series.components) {
    const int low_P = c.vanish_P[r];
    const int low_Q = c.vanish_Q[r];
    out.components.push_back({p.d - low_P - low_Q, c.bundle.twisted(-low_P, -low_Q), shifted(c.vanish_P, -low_P),
                              shifted(c.vanish_Q, -low_Q)});
  }
  for (std::size_t alpha = 1; alpha < series.components.size(); ++alpha) {
    out.node_values.push_back(p.d - series.components[alpha - 1].vanish_Q[r] - series.components[alpha].vanish_P[r]);
  }
  return out;
}

SideDegrees side_degrees(const EffectiveSeries& series, int j) {
  const int g = static_cast<int>(series.components.size());
  if (j < 1 || j > g) throw std::out_of_range("component index outside 1..g");
  SideDegrees s;
  for (int m = 1; m < j; ++m) s.left += series.components[m - 1].degree;
  for (int alpha = 1; alpha <= j - 1; ++alpha) s.left -= series.node_values[alpha - 1];
  for (int m = j + 1; m <= g; ++m) s.right += series.components[m - 1].degree;
  for (int alpha = j; alpha <= g - 1; ++alpha) s.right -= series.node_values[alpha - 1];
  return s;
}

EHSeries effective_to_eh(const EffectiveSeries& series) {
  const EffectiveCheck check = check_effective(series);
  if (!check.valid) throw std::invalid_argument("invalid effective series: " + check.diagnostic);
  if (!check.refined) throw std::invalid_argument("effective_to_eh needs a refined series");
  EHSeries out;
  out.params = series.params;
  for (int j = 1; j <= series.params.g; ++j) {
    const SideDegrees side = side_degrees(series, j);
    if (side.left < 0 || side.right < 0) {
      throw std::invalid_argument("component " + std::to_string(j) + " has a negative side degree");
    }
    const EffectiveComponent& c = series.components[j - 1];
    out.components.push_back(
        {c.bundle.twisted(side.left, side.right), shifted(c.w_P, side.left), shifted(c.w_Q, side.right)});
  }
  return out;
}

VanishingSequence effective_vanishing_from_tableau(const Tableau& t, int i) {
  const int r = t.params().r;
  std::vector<int> w(r + 1);
  for (int s = 0; s <= r; ++s) w[s] = r - s + beta(t, i, s) - beta(t, i, r);
  return VanishingSequence(std::move(w));
}

std::string ConcentratedPiece::str() const {
  switch (kind) {
    case Kind::Concentration:
      return "concentration component, degree " + std::to_string(degree()) + ", " + bundle.str();
    case Kind::Trivial:
      return "O";
    case Kind::PointBundle:
      return bundle.str();
    case Kind::GenericPoint:
      return "O(x_" + std::to_string(component) + "), x_" + std::to_string(component) + " generic";
  }
  return {};
}

std::vector<ConcentratedPiece> describe_concentrated_bundle(const Tableau& t) {
  require_valid(t);
  return describe_concentrated_bundle(t, eh_series_from_tableau(t));
}

std::vector<ConcentratedPiece> describe_concentrated_bundle(const Tableau& t, const EHSeries& series) {
  const BNParams& p = t.params();
  if (!(series.params == p) || static_cast<int>(series.components.size()) != p.g) {
    throw std::invalid_argument("series does not belong to the tableau");
  }
  const int r = p.r;
  std::vector<ConcentratedPiece> out;

  ConcentratedPiece first;
  first.kind = ConcentratedPiece::Kind::Concentration;
  first.component = 1;
  first.bundle = series.components[0].bundle.twisted(0, -series.components[0].vanish_Q[r]);
  out.push_back(first);

  for (int i = 2; i <= p.g; ++i) {
    ConcentratedPiece piece;
    piece.component = i;
    const auto col = t.column_of(i);
    if (!col) {
      piece.kind = ConcentratedPiece::Kind::GenericPoint;
      piece.bundle = EllipticBundleClass::generic(i, 1, series.components[i - 1].bundle.tag());
    } else if (*col == r) {
      piece.kind = ConcentratedPiece::Kind::Trivial;
      piece.bundle = EllipticBundleClass::special(i, 0, 0);
    } else {
      piece.kind = ConcentratedPiece::Kind::PointBundle;
      piece.c_P = r + beta(t, i, *col) - *col - beta(t, i, r) - 1;
      piece.c_Q = piece.c_P + 1;
      piece.bundle = EllipticBundleClass::special(i, 1, -piece.c_P);
    }
    out.push_back(piece);
  }
  return out;
}

std::vector<std::vector<EllipticBundleClass>> concentration_grid(const EHSeries& series) {
  const int g = static_cast<int>(series.components.size());
  const int r = series.params.r;
  std::vector<std::vector<EllipticBundleClass>> grid(g);
  for (int j = 1; j <= g; ++j) {
    const EHComponent& c = series.components[j - 1];
    for (int i = 1; i <= g; ++i) {
      // Toward C_i the top order is removed at that side, the bottom order elsewhere.
      const int at_P = j > i ? c.vanish_P[0] : c.vanish_P[r];
      const int at_Q = j < i ? c.vanish_Q[0] : c.vanish_Q[r];
      grid[j - 1].push_back(c.bundle.twisted(-at_P, -at_Q));
    }
  }
  return grid;
}

VanishingAgreement compare_vanishing(const Tableau& t, const ChainGeometry& geom, std::uint64_t seed) {
  const BNParams& p = t.params();
  VanishingAgreement out;
  TropVanishingTable table;
  try {
    table = tropical_vanishing_table(geom, divisor_from_tableau(t, geom, seed), p.r);
  } catch (const RankDeficiencyError& e) {
    out.agree = false;
    out.i = e.loop();
    out.diagnostic = e.what();
    return out;
  }
  const EffectiveSeries eff = eh_to_effective(eh_series_from_tableau(t));
  for (int i = 0; i <= p.g; ++i) {
    const VanishingSequence closed = effective_vanishing_from_tableau(t, i);
    for (int s = 0; s <= p.r; ++s) {
      const int from_series = i == 0 ? p.r - s : eff.components[i - 1].w_Q[s];
      const int dynamic = table.u[i][s];
      if (closed[s] != from_series || closed[s] != dynamic) {
        out.agree = false;
        out.i = i;
        out.s = s;
        out.diagnostic = "at (i, s) = (" + std::to_string(i) + ", " + std::to_string(s) + "): closed form " +
                         std::to_string(closed[s]) + ", effective series " + std::to_string(from_series) +
                         ", divisor table " + std::to_string(dynamic);
        return out;
      }
    }
  }
  return out;
}

}  // namespace bnchain
