#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bnchain/tableaux.hpp"

namespace bnchain {

/// Line-bundle class on one elliptic component C_i of a general chain.
///
/// Special classes are O(a P_i + (degree - a) Q_i). Because P_i - Q_i is
/// not torsion, two special classes of equal degree coincide exactly when
/// their a-coefficients do, so equality is structural. Generic classes are
/// compared by tag only.
class EllipticBundleClass {
 public:
  struct Special {
    int a = 0;
    friend bool operator==(const Special&, const Special&) = default;
  };
  struct Generic {
    std::string tag;
    friend bool operator==(const Generic&, const Generic&) = default;
  };

  static EllipticBundleClass special(int component, int degree, int a);
  static EllipticBundleClass generic(int component, int degree, std::string tag);
  /// Generic class with a process-unique tag.
  static EllipticBundleClass fresh_generic(int component, int degree);

  int component() const { return component_; }
  int degree() const { return degree_; }
  bool is_special() const { return std::holds_alternative<Special>(kind_); }
  /// Coefficient of P_i; throws std::logic_error for generic classes.
  int a() const;
  /// Coefficient of Q_i, degree - a.
  int b() const { return degree_ - a(); }
  const std::string& tag() const;
  bool is_trivial() const { return is_special() && degree_ == 0 && a() == 0; }

  /// Same class twisted by c_P * P_i + c_Q * Q_i. Generic classes keep their tag.
  EllipticBundleClass twisted(int c_P, int c_Q) const;

  /// Notation such as "O(2P_2+4Q_2)", "O(2Q_2-P_2)", "O" or "generic<tag>(deg 6)".
  std::string str() const;

  friend bool operator==(const EllipticBundleClass&, const EllipticBundleClass&) = default;

 private:
  int component_ = 1;
  int degree_ = 0;
  std::variant<Special, Generic> kind_{Special{}};
};

/// Monotone unique tag source; safe to call from several threads.
std::string fresh_generic_tag();

/// Orders of vanishing of an (r+1)-dimensional space of sections at a
/// point, stored strictly decreasing and non-negative.
class VanishingSequence {
 public:
  VanishingSequence() = default;
  /// Throws std::invalid_argument unless strictly decreasing with last entry >= 0.
  explicit VanishingSequence(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  int size() const { return static_cast<int>(orders_.size()); }
  int operator[](int t) const { return orders_.at(t); }
  int top() const { return orders_.front(); }
  int bottom() const { return orders_.back(); }
  std::vector<int> ascending() const { return {orders_.rbegin(), orders_.rend()}; }
  std::string str() const;

  friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;

 private:
  std::vector<int> orders_;
};

/// h^0 on an elliptic curve.
int riemann_roch_h0(const EllipticBundleClass& bundle);

struct VanishingPairCheck {
  bool ok = true;
  std::optional<int> equality_index;
  std::string diagnostic;
};

/// Bounds for the vanishing at the two marked points of one component:
/// vp[t] + vq[r-t] <= d for all t, with equality for at most one t.
VanishingPairCheck check_vanishing_pair(int d, const VanishingSequence& vp, const VanishingSequence& vq);

/// Outcome of asking for a series on one component whose vanishing at P is
/// (d-u_r, ..., d-u_0).
struct ComponentConstruction {
  enum class Kind { NoFamily, Family, Unique };
  Kind kind = Kind::NoFamily;
  /// a-coefficient of the forced class O(aP + (d-a)Q); Unique only.
  std::optional<int> special_a;
  std::optional<VanishingSequence> vanish_P;
  std::optional<VanishingSequence> vanish_Q;
};

/// With no `t0`: the one-parameter family of generic bundles, whose
/// Q-vanishing is (u_0-1, ..., u_r-1), exists iff u_r > 0.
/// With `t0`: the unique special bundle that keeps u_{t0} at Q, which
/// exists iff (t0 == 0 or u_{t0}+1 < u_{t0-1}) and (t0 == r or u_r > 0).
/// Throws std::invalid_argument if u_0 > d or t0 is out of range.
ComponentConstruction component_series_from_vanishing(int d, const VanishingSequence& u,
                                                      std::optional<int> t0 = std::nullopt);

struct EHComponent {
  EllipticBundleClass bundle;
  VanishingSequence vanish_P;
  VanishingSequence vanish_Q;
  friend bool operator==(const EHComponent&, const EHComponent&) = default;
};

/// Eisenbud-Harris limit linear series on a chain; components[i-1] is C_i.
struct EHSeries {
  BNParams params;
  std::vector<EHComponent> components;
  friend bool operator==(const EHSeries&, const EHSeries&) = default;
};

struct SeriesCheck {
  bool valid = true;
  bool refined = true;
  /// First failing node (Q_node glued to P_{node+1}) and index t.
  std::optional<int> node;
  std::optional<int> t;
  std::string diagnostic;
};

/// Node condition vanish_Q(i)[t] + vanish_P(i+1)[r-t] >= d at each node;
/// refined when every such sum equals d.
SeriesCheck check_limit_series(const EHSeries& series);

/// u_s(i) = d - s - i + beta(i, s), the vanishing at Q_i (i = 0 gives (d, ..., d-r)).
VanishingSequence vanishing_from_tableau(const Tableau& t, int i);

/// O((t(i)+i-beta(i,t(i))) P_i + (d - ...) Q_i) for placed i, a fresh generic class otherwise.
EllipticBundleClass bundle_from_tableau(const Tableau& t, int i);

/// The refined series attached to a general point of the tableau's component.
EHSeries eh_series_from_tableau(const Tableau& t);

enum class World { Elliptic, Tropical };

/// A component of the Brill-Noether locus, indexed by its tableau.
struct BNComponent {
  Tableau tableau;
  World world = World::Elliptic;
  /// Number of free indices, i.e. rho.
  int dimension() const { return static_cast<int>(tableau.free_indices().size()); }
};

std::vector<BNComponent> elliptic_components(const BNParams& p);

struct IntersectionResult {
  bool intersects = false;
  std::optional<int> dimension;
};

/// Two components meet iff every index placed in both sits in boxes with
/// equal column - row; the intersection then has one dimension per index
/// absent from both tableaux.
IntersectionResult component_intersection(const Tableau& t1, const Tableau& t2);

}  // namespace bnchain
