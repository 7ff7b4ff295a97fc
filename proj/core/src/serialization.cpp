#include "bnchain/serialization.hpp"

#include <stdexcept>
#include <string>

namespace bnchain {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
  }
}

BNParams params_from(const Json& j) { return {j.at("g").get<int>(), j.at("d").get<int>(), j.at("r").get<int>()}; }

void params_into(Json& j, const BNParams& p) {
  j["g"] = p.g;
  j["d"] = p.d;
  j["r"] = p.r;
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return Rational::parse(j.get<std::string>());
}

}  // namespace

Json tableau_to_json(const Tableau& t) {
  Json j;
  params_into(j, t.params());
  j["rows"] = t.rows();
  return j;
}

Tableau tableau_from_json(const Json& j) {
  return guarded("tableau", [&] {
    return Tableau::from_rows(params_from(j), j.at("rows").get<std::vector<std::vector<int>>>());
  });
}

Json bundle_to_json(const EllipticBundleClass& b) {
  if (b.is_special()) return {{"aP", b.a()}, {"bQ", b.b()}};
  return {{"generic", b.tag()}};
}

EllipticBundleClass bundle_from_json(const Json& j, int component, int degree) {
  return guarded("bundle", [&] {
    if (j.contains("generic")) return EllipticBundleClass::generic(component, degree, j.at("generic").get<std::string>());
    const int a = j.at("aP").get<int>();
    const int b = j.at("bQ").get<int>();
    if (a + b != degree) {
      throw std::invalid_argument("bundle on C_" + std::to_string(component) + " has degree " + std::to_string(a + b) +
                                  ", expected " + std::to_string(degree));
    }
    return EllipticBundleClass::special(component, degree, a);
  });
}

Json eh_series_to_json(const EHSeries& s) {
  Json j;
  params_into(j, s.params);
  j["components"] = Json::array();
  for (const auto& c : s.components) {
    j["components"].push_back(
        {{"bundle", bundle_to_json(c.bundle)}, {"vanish_P", c.vanish_P.orders()}, {"vanish_Q", c.vanish_Q.orders()}});
  }
  return j;
}

EHSeries eh_series_from_json(const Json& j) {
  return guarded("limit linear series", [&] {
    EHSeries s;
    s.params = params_from(j);
    check_params(s.params);
    const Json& comps = j.at("components");
    if (static_cast<int>(comps.size()) != s.params.g) throw std::invalid_argument("expected g components");
    int i = 0;
    for (const Json& c : comps) {
      ++i;
      s.components.push_back({bundle_from_json(c.at("bundle"), i, s.params.d),
                              VanishingSequence(c.at("vanish_P").get<std::vector<int>>()),
                              VanishingSequence(c.at("vanish_Q").get<std::vector<int>>())});
    }
    return s;
  });
}

Json effective_series_to_json(const EffectiveSeries& s) {
  Json j;
  params_into(j, s.params);
  j["components"] = Json::array();
  for (const auto& c : s.components) {
    j["components"].push_back({{"degree", c.degree},
                               {"bundle", bundle_to_json(c.bundle)},
                               {"vanish_P", c.w_P.orders()},
                               {"vanish_Q", c.w_Q.orders()}});
  }
  j["a"] = s.node_values;
  return j;
}

EffectiveSeries effective_series_from_json(const Json& j) {
  return guarded("effective series", [&] {
    EffectiveSeries s;
    s.params = params_from(j);
    check_params(s.params);
    const Json& comps = j.at("components");
    if (static_cast<int>(comps.size()) != s.params.g) throw std::invalid_argument("expected g components");
    int i = 0;
    for (const Json& c : comps) {
      ++i;
      const int degree = c.at("degree").get<int>();
      s.components.push_back({degree, bundle_from_json(c.at("bundle"), i, degree),
                              VanishingSequence(c.at("vanish_P").get<std::vector<int>>()),
                              VanishingSequence(c.at("vanish_Q").get<std::vector<int>>())});
    }
    s.node_values = j.at("a").get<std::vector<int>>();
    return s;
  });
}

Json geometry_to_json(const ChainGeometry& geom) {
  Json loops = Json::array();
  for (const auto& loop : geom.loops()) loops.push_back({{"l", loop.l.str()}, {"m", loop.m.str()}});
  return {{"g", geom.g()}, {"loops", loops}};
}

ChainGeometry geometry_from_json(const Json& j) {
  return guarded("geometry", [&] {
    std::vector<LoopLengths> loops;
    for (const Json& loop : j.at("loops")) loops.push_back({rational_from(loop.at("l")), rational_from(loop.at("m"))});
    if (j.contains("g") && j.at("g").get<int>() != static_cast<int>(loops.size())) {
      throw std::invalid_argument("geometry lists " + std::to_string(loops.size()) + " loops but g = " +
                                  std::to_string(j.at("g").get<int>()));
    }
    return ChainGeometry(std::move(loops));
  });
}

Json point_to_json(const ChainPoint& p, int mult) {
  if (p.is_node()) return {{"node", p.index()}, {"mult", mult}};
  return {{"loop", p.index()}, {"coord", p.coord().str()}, {"mult", mult}};
}

Json divisor_to_json(const TropicalDivisor& D) {
  Json points = Json::array();
  for (const auto& [p, m] : D.support()) points.push_back(point_to_json(p, m));
  return {{"points", points}};
}

TropicalDivisor divisor_from_json(const Json& j, const ChainGeometry* geom) {
  return guarded("divisor", [&] {
    TropicalDivisor D;
    for (const Json& e : j.at("points")) {
      const int mult = e.at("mult").get<int>();
      if (e.contains("node")) {
        D.add(ChainPoint::node(e.at("node").get<int>()), mult);
      } else {
        const int k = e.at("loop").get<int>();
        const Rational coord = rational_from(e.at("coord"));
        if (!geom) {
          D.add(ChainPoint::interior(k, coord), mult);
          continue;
        }
        if (k < 1 || k > geom->g() || coord.sign() < 0 || coord >= geom->circumference(k)) {
          throw std::invalid_argument("coordinate " + coord.str() + " is outside loop " + std::to_string(k));
        }
        D.add(point_on_loop(*geom, k, coord), mult);
      }
    }
    if (geom) check_divisor(*geom, D);
    return D;
  });
}

Json vanishing_table_to_json(const TropVanishingTable& table) {
  Json loops = Json::array();
  for (std::size_t k = 0; k < table.case_tags.size(); ++k) {
    Json loop{{"loop", k + 1}, {"epsilon", table.epsilon[k]}, {"case", std::string(1, table.case_tags[k])}};
    if (table.x[k]) loop["x"] = point_to_json(*table.x[k], 1);
    if (table.special_index[k]) loop["t0"] = *table.special_index[k];
    loops.push_back(loop);
  }
  Json orders = Json::array();
  for (const auto& u : table.u) orders.push_back(u.orders());
  return {{"u", orders}, {"loops", loops}};
}

TropVanishingTable vanishing_table_from_json(const Json& j) {
  return guarded("vanishing table", [&] {
    TropVanishingTable table;
    for (const Json& u : j.at("u")) table.u.emplace_back(u.get<std::vector<int>>());
    for (const Json& loop : j.at("loops")) {
      table.epsilon.push_back(loop.at("epsilon").get<int>());
      const std::string tag = loop.at("case").get<std::string>();
      if (tag.size() != 1 || tag[0] < 'a' || tag[0] > 'e') throw std::invalid_argument("unknown case tag " + tag);
      table.case_tags.push_back(tag[0]);
      if (loop.contains("x")) {
        const Json& x = loop.at("x");
        table.x.push_back(x.contains("node") ? ChainPoint::node(x.at("node").get<int>())
                                             : ChainPoint::interior(x.at("loop").get<int>(), rational_from(x.at("coord"))));
      } else {
        table.x.push_back(std::nullopt);
      }
      table.special_index.push_back(loop.contains("t0") ? std::optional<int>(loop.at("t0").get<int>()) : std::nullopt);
    }
    return table;
  });
}

}  // namespace bnchain
