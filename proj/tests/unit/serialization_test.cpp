#include <gtest/gtest.h>

#include "bnchain/serialization.hpp"
#include "figures.hpp"

using namespace bnchain;

TEST(Json, TableauRoundTrip) {
  const Tableau t = figures::example_tableau();
  const Json j = tableau_to_json(t);
  EXPECT_EQ(j.at("rows"), Json::parse("[[1,2,4],[3,5,6]]"));
  EXPECT_EQ(tableau_from_json(j), t);
  EXPECT_EQ(tableau_from_json(Json::parse(j.dump())), t);
}

TEST(Json, MalformedInputIsInvalidArgument) {
  EXPECT_THROW(tableau_from_json(Json::parse(R"({"g":6,"d":6})")), std::invalid_argument);
  EXPECT_THROW(tableau_from_json(Json::parse(R"({"g":"six","d":6,"r":2,"rows":[]})")), std::invalid_argument);
  EXPECT_THROW(geometry_from_json(Json::parse(R"({"g":1,"loops":[{"l":"x","m":"1/1"}]})")), std::invalid_argument);
  EXPECT_THROW(geometry_from_json(Json::parse(R"({"g":2,"loops":[{"l":"1/1","m":"1/1"}]})")), std::invalid_argument);
}

TEST(Json, SeriesRoundTrips) {
  const EHSeries eh = eh_series_from_tableau(figures::example_tableau());
  EXPECT_EQ(eh_series_from_json(eh_series_to_json(eh)), eh);
  const EffectiveSeries eff = eh_to_effective(eh);
  const Json je = effective_series_to_json(eff);
  EXPECT_EQ(je.at("a"), Json::parse("[3,3,4,3,3]"));
  EXPECT_EQ(effective_series_from_json(je), eff);

  const EHSeries with_free = eh_series_from_tableau(Tableau::from_rows({5, 4, 1}, {{1, 2}, {3, 4}}));
  EXPECT_EQ(eh_series_from_json(eh_series_to_json(with_free)), with_free);
}

TEST(Json, GeometryAndDivisor) {
  const ChainGeometry geom = figures::example_geometry();
  const Json jg = geometry_to_json(geom);
  EXPECT_EQ(jg.at("loops").at(0).at("l"), "13/1");
  EXPECT_EQ(geometry_from_json(jg), geom);

  const TropicalDivisor D = divisor_from_tableau(figures::example_tableau(), geom);
  const Json jd = divisor_to_json(D);
  EXPECT_EQ(jd.at("points").at(0), Json::parse(R"({"node":0,"mult":2})"));
  EXPECT_EQ(divisor_from_json(jd, &geom), D);

  const Json off_chain = Json::parse(R"({"points":[{"loop":1,"coord":"14/1","mult":1}]})");
  EXPECT_THROW(divisor_from_json(off_chain, &geom), std::invalid_argument);
  const Json on_node = Json::parse(R"({"points":[{"loop":1,"coord":"13/1","mult":1}]})");
  EXPECT_EQ(divisor_from_json(on_node, &geom).mult(ChainPoint::node(1)), 1);
}

TEST(Json, VanishingTable) {
  const ChainGeometry geom = figures::example_geometry();
  const TropicalDivisor D = divisor_from_tableau(figures::example_tableau(), geom);
  const TropVanishingTable table = tropical_vanishing_table(geom, D, 2);
  const Json j = vanishing_table_to_json(table);
  EXPECT_EQ(j.at("loops").at(0).at("case"), "d");
  EXPECT_EQ(vanishing_table_from_json(j), table);
}
