#include "bnchain/elliptic_chain.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace bnchain {

EllipticBundleClass EllipticBundleClass::special(int component, int degree, int a) {
  EllipticBundleClass c;
  c.component_ = component;
  c.degree_ = degree;
  c.kind_ = Special{a};
  return c;
}

EllipticBundleClass EllipticBundleClass::generic(int component, int degree, std::string tag) {
  EllipticBundleClass c;
  c.component_ = component;
  c.degree_ = degree;
  c.kind_ = Generic{std::move(tag)};
  return c;
}

EllipticBundleClass EllipticBundleClass::fresh_generic(int component, int degree) {
  return generic(component, degree, fresh_generic_tag());
}

int EllipticBundleClass::a() const {
  if (const auto* s = std::get_if<Special>(&kind_)) return s->a;
  throw std::logic_error("generic bundle class has no P-coefficient");
}

const std::string& EllipticBundleClass::tag() const {
  if (const auto* g = std::get_if<Generic>(&kind_)) return g->tag;
  throw std::logic_error("special bundle class has no tag");
}

EllipticBundleClass EllipticBundleClass::twisted(int c_P, int c_Q) const {
  if (is_special()) return special(component_, degree_ + c_P + c_Q, a() + c_P);
  return generic(component_, degree_ + c_P + c_Q, tag());
}

namespace {

void append_term(std::string& out, int coeff, const std::string& point, bool first) {
  if (coeff > 0 && !first) out += '+';
  if (coeff < 0) out += '-';
  const int mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) out += std::to_string(mag);
  out += point;
}

}  // namespace

std::string EllipticBundleClass::str() const {
  if (!is_special()) return "generic<" + tag() + ">(deg " + std::to_string(degree_) + ")";
  const std::string p = "P_" + std::to_string(component_);
  const std::string q = "Q_" + std::to_string(component_);
  const int ca = a();
  const int cb = b();
  if (ca == 0 && cb == 0) return "O";
  // Positive terms first (P before Q), then negative ones, as in O(2Q_2-P_2).
  std::string body;
  bool first = true;
  for (int pass = 0; pass < 2; ++pass) {
    for (auto [coeff, name] : {std::pair{ca, p}, std::pair{cb, q}}) {
      if (coeff == 0 || (pass == 0) != (coeff > 0)) continue;
      append_term(body, coeff, name, first);
      first = false;
    }
  }
  return "O(" + body + ")";
}

std::string fresh_generic_tag() {
  static std::atomic<unsigned long long> counter{0};
  return "g" + std::to_string(counter.fetch_add(1, std::memory_order_relaxed) + 1);
}

VanishingSequence::VanishingSequence(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw std::invalid_argument("vanishing sequence must be non-empty");
  for (std::size_t t = 1; t < orders_.size(); ++t) {
    if (orders_[t - 1] <= orders_[t]) {
      throw std::invalid_argument("vanishing sequence " + str() + " is not strictly decreasing at index " +
                                  std::to_string(t));
    }
  }
  if (orders_.back() < 0) throw std::invalid_argument("vanishing sequence " + str() + " has a negative order");
}

std::string VanishingSequence::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t t = 0; t < orders_.size(); ++t) os << (t ? "," : "") << orders_[t];
  os << ')';
  return os.str();
}

int riemann_roch_h0(const EllipticBundleClass& bundle) {
  if (bundle.degree() < 0) return 0;
  if (bundle.degree() > 0) return bundle.degree();
  return bundle.is_trivial() ? 1 : 0;
}

VanishingPairCheck check_vanishing_pair(int d, const VanishingSequence& vp, const VanishingSequence& vq) {
  if (vp.size() != vq.size()) throw std::invalid_argument("vanishing sequences of different lengths");
  const int r = vp.size() - 1;
  VanishingPairCheck out;
  for (int t = 0; t <= r; ++t) {
    const int sum = vp[t] + vq[r - t];
    if (sum > d) {
      out.ok = false;
      out.diagnostic = "u_" + std::to_string(t) + "(P) + u_" + std::to_string(r - t) + "(Q) = " + std::to_string(sum) +
                       " exceeds d = " + std::to_string(d);
      return out;
    }
    if (sum == d) {
      if (out.equality_index) {
        out.ok = false;
        out.diagnostic = "two equalities, at t = " + std::to_string(*out.equality_index) + " and t = " +
                         std::to_string(t);
        return out;
      }
      out.equality_index = t;
    }
  }
  return out;
}

ComponentConstruction component_series_from_vanishing(int d, const VanishingSequence& u, std::optional<int> t0) {
  const int r = u.size() - 1;
  if (u.top() > d) throw std::invalid_argument("vanishing order " + std::to_string(u.top()) + " exceeds degree");
  if (t0 && (*t0 < 0 || *t0 > r)) throw std::invalid_argument("t0 outside 0..r");

  ComponentConstruction out;
  if (!t0) {
    if (u.bottom() <= 0) return out;
    std::vector<int> p, q;
    for (int t = r; t >= 0; --t) p.push_back(d - u[t]);
    for (int t = 0; t <= r; ++t) q.push_back(u[t] - 1);
    out.kind = ComponentConstruction::Kind::Family;
    out.vanish_P = VanishingSequence(std::move(p));
    out.vanish_Q = VanishingSequence(std::move(q));
    return out;
  }

  const int s = *t0;
  if (s != 0 && !(u[s] + 1 < u[s - 1])) return out;
  if (s != r && u.bottom() <= 0) return out;
  std::vector<int> p, q;
  for (int t = r; t >= 0; --t) p.push_back(d - u[t]);
  for (int t = 0; t <= r; ++t) q.push_back(t == s ? u[t] : u[t] - 1);
  out.kind = ComponentConstruction::Kind::Unique;
  out.special_a = d - u[s];
  out.vanish_P = VanishingSequence(std::move(p));
  out.vanish_Q = VanishingSequence(std::move(q));
  return out;
}

SeriesCheck check_limit_series(const EHSeries& series) {
  const int d = series.params.d;
  const int r = series.params.r;
  SeriesCheck out;
  for (std::size_t i = 0; i + 1 < series.components.size(); ++i) {
    const auto& q = series.components[i].vanish_Q;
    const auto& p = series.components[i + 1].vanish_P;
    if (q.size() != r + 1 || p.size() != r + 1) throw std::invalid_argument("vanishing sequence length != r+1");
    for (int t = 0; t <= r; ++t) {
      const int sum = q[t] + p[r - t];
      if (sum < d) {
        out.valid = false;
        out.refined = false;
        out.node = static_cast<int>(i) + 1;
        out.t = t;
        out.diagnostic = "node Q_" + std::to_string(i + 1) + ", t = " + std::to_string(t) + ": " + std::to_string(q[t]) +
                         " + " + std::to_string(p[r - t]) + " < " + std::to_string(d);
        return out;
      }
      if (sum > d && out.refined) {
        out.refined = false;
        out.node = static_cast<int>(i) + 1;
        out.t = t;
        out.diagnostic = "not refined at node Q_" + std::to_string(i + 1) + ", t = " + std::to_string(t);
      }
    }
  }
  return out;
}

VanishingSequence vanishing_from_tableau(const Tableau& t, int i) {
  const BNParams& p = t.params();
  std::vector<int> u(p.r + 1);
  for (int s = 0; s <= p.r; ++s) u[s] = p.d - s - i + beta(t, i, s);
  return VanishingSequence(std::move(u));
}

EllipticBundleClass bundle_from_tableau(const Tableau& t, int i) {
  const BNParams& p = t.params();
  if (i < 1 || i > p.g) throw std::out_of_range("component index outside 1..g");
  if (auto col = t.column_of(i)) return EllipticBundleClass::special(i, p.d, *col + i - beta(t, i, *col));
  return EllipticBundleClass::fresh_generic(i, p.d);
}

EHSeries eh_series_from_tableau(const Tableau& t) {
  require_valid(t);
  const BNParams& p = t.params();
  EHSeries series;
  series.params = p;
  VanishingSequence previous = vanishing_from_tableau(t, 0);
  for (int i = 1; i <= p.g; ++i) {
    std::vector<int> at_p;
    for (int s = p.r; s >= 0; --s) at_p.push_back(p.d - previous[s]);
    VanishingSequence at_q = vanishing_from_tableau(t, i);
    series.components.push_back({bundle_from_tableau(t, i), VanishingSequence(std::move(at_p)), at_q});
    previous = std::move(at_q);
  }
  return series;
}

std::vector<BNComponent> elliptic_components(const BNParams& p) {
  std::vector<BNComponent> out;
  for_each_tableau(p, [&](const Tableau& t) {
    out.push_back({t, World::Elliptic});
    return true;
  });
  return out;
}

IntersectionResult component_intersection(const Tableau& t1, const Tableau& t2) {
  if (!(t1.params() == t2.params())) throw std::invalid_argument("tableaux have different parameters");
  const int g = t1.params().g;
  int untouched = 0;
  for (int i = 1; i <= g; ++i) {
    auto c1 = t1.cell_of(i);
    auto c2 = t2.cell_of(i);
    if (c1 && c2 && c1->column - c1->row != c2->column - c2->row) return {};
    if (!c1 && !c2) ++untouched;
  }
  return {true, untouched};
}

}  // namespace bnchain
