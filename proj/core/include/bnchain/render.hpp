#pragma once

#include <string>
#include <vector>

#include "bnchain/effective_series.hpp"
#include "bnchain/elliptic_chain.hpp"
#include "bnchain/tropical_chain.hpp"

namespace bnchain {

// Plain-text tables in the layout of the worked example: one row per
// component, orders at P_i ascending and at Q_i descending so that column t
// lists the two orders of the same section.

std::string render_tableau(const Tableau& t);
std::string render_eh_series(const EHSeries& s);
std::string render_effective_series(const EffectiveSeries& s);
std::string render_concentrated(const std::vector<ConcentratedPiece>& pieces);
std::string render_grid(const std::vector<std::vector<EllipticBundleClass>>& grid);

/// "2Q_0+x_1+x_2+x_3+x_5" on the first line, then one line per interior point
/// with its loop and coordinate.
std::string render_divisor(const TropicalDivisor& D);

std::string render_vanishing_table(const TropVanishingTable& table);

}  // namespace bnchain
