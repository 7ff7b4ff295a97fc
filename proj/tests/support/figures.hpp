#pragma once

// Worked example at (g, d, r) = (6, 6, 2) and the tables it produces.

#include <string>
#include <vector>

#include "bnchain/tropical_chain.hpp"

namespace figures {

inline const bnchain::BNParams kParams{6, 6, 2};
inline const std::vector<std::vector<int>> kRows{{1, 2, 4}, {3, 5, 6}};

inline bnchain::Tableau example_tableau() { return bnchain::Tableau::from_rows(kParams, kRows); }

// Limit series: bundle, orders at P_i ascending, orders at Q_i descending.
inline const std::vector<std::string> kEHBundles{"O(6Q_1)",      "O(2P_2+4Q_2)", "O(P_3+5Q_3)",
                                                 "O(5P_4+Q_4)",  "O(4P_5+2Q_5)", "O(6P_6)"};
inline const std::vector<std::vector<int>> kEHAtP{{0, 1, 2}, {0, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 6}};
inline const std::vector<std::vector<int>> kEHAtQ{{6, 4, 3}, {5, 4, 2}, {5, 3, 1}, {4, 2, 1}, {3, 2, 0}, {2, 1, 0}};

// Effective series.
inline const std::vector<int> kEffDegrees{3, 4, 4, 4, 4, 3};
inline const std::vector<std::string> kEffBundles{"O(3Q_1)", "O(2P_2+2Q_2)", "O(4Q_3)",
                                                  "O(4P_4)", "O(2P_5+2Q_5)", "O(3P_6)"};
inline const std::vector<std::vector<int>> kEffAtP{{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 2, 4}, {0, 2, 3}, {0, 1, 3}};
inline const std::vector<std::vector<int>> kEffAtQ{{3, 1, 0}, {3, 2, 0}, {4, 2, 0}, {3, 1, 0}, {3, 2, 0}, {2, 1, 0}};

// Column L_{j,1} of the concentrated bundle, j = 2..6.
inline const std::vector<std::string> kConcentratedColumn{"O(2Q_2-P_2)", "O(4Q_3-3P_3)", "O", "O(2Q_5-P_5)", "O"};

// Orders at Q_0..Q_6 for the tableau divisor.
inline const std::vector<std::vector<int>> kNodeOrders{{2, 1, 0}, {3, 1, 0}, {3, 2, 0}, {4, 2, 0},
                                                       {3, 1, 0}, {3, 2, 0}, {2, 1, 0}};

// Integer loops; every ratio has numerator >= 2g - 2 = 10.
inline bnchain::ChainGeometry example_geometry() {
  using bnchain::Rational;
  return bnchain::ChainGeometry({{Rational(13), Rational(1)},
                                 {Rational(11), Rational(1)},
                                 {Rational(10), Rational(3)},
                                 {Rational(11), Rational(2)},
                                 {Rational(12), Rational(1)},
                                 {Rational(10), Rational(1)}});
}

}  // namespace figures
