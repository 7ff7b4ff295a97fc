#include "bnchain/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bnchain {

namespace {

std::string joined(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

// Left-aligned columns separated by two spaces; trailing blanks trimmed.
std::string layout(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string component_label(int i) { return "C_" + std::to_string(i); }

}  // namespace

std::string render_tableau(const Tableau& t) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : t.rows()) {
    std::vector<std::string> cells;
    for (int v : row) cells.push_back(std::to_string(v));
    rows.push_back(cells);
  }
  std::string out = layout(rows);
  if (!t.free_indices().empty()) out += "free: " + joined(t.free_indices()) + '\n';
  return out;
}

std::string render_eh_series(const EHSeries& s) {
  std::vector<std::vector<std::string>> rows{{"", "bundle", "at P_i", "at Q_i"}};
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    const auto& c = s.components[i];
    rows.push_back({component_label(static_cast<int>(i) + 1), c.bundle.str(), joined(c.vanish_P.ascending()),
                    joined(c.vanish_Q.orders())});
  }
  return layout(rows);
}

std::string render_effective_series(const EffectiveSeries& s) {
  std::vector<std::vector<std::string>> rows{{"", "degree", "bundle", "at P_i", "at Q_i"}};
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    const auto& c = s.components[i];
    rows.push_back({component_label(static_cast<int>(i) + 1), std::to_string(c.degree), c.bundle.str(),
                    joined(c.w_P.ascending()), joined(c.w_Q.orders())});
  }
  std::string out = layout(rows);
  out += "node values a: " + (s.node_values.empty() ? std::string("none") : joined(s.node_values)) + '\n';
  return out;
}

std::string render_concentrated(const std::vector<ConcentratedPiece>& pieces) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& piece : pieces) rows.push_back({component_label(piece.component), piece.str()});
  return layout(rows);
}

std::string render_grid(const std::vector<std::vector<EllipticBundleClass>>& grid) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"j \\ i"};
  for (std::size_t i = 0; i < grid.size(); ++i) header.push_back(std::to_string(i + 1));
  rows.push_back(header);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    std::vector<std::string> row{std::to_string(j + 1)};
    for (const auto& cell : grid[j]) row.push_back(cell.str());
    rows.push_back(row);
  }
  return layout(rows);
}

std::string render_divisor(const TropicalDivisor& D) {
  if (D.support().empty()) return "0\n";
  std::map<int, int> seen_on_loop;
  std::string head;
  std::vector<std::vector<std::string>> details;
  for (const auto& [p, m] : D.support()) {
    std::string name;
    if (p.is_node()) {
      name = "Q_" + std::to_string(p.index());
    } else {
      const int nth = seen_on_loop[p.index()]++;
      name = "x_" + std::to_string(p.index()) + std::string(nth, '\'');
      details.push_back({name, "loop " + std::to_string(p.index()), "coord " + p.coord().str()});
    }
    if (m > 0 && !head.empty()) head += '+';
    if (m < 0) head += '-';
    const int mag = m < 0 ? -m : m;
    if (mag != 1) head += std::to_string(mag);
    head += name;
  }
  return head + '\n' + layout(details);
}

std::string render_vanishing_table(const TropVanishingTable& table) {
  std::vector<std::vector<std::string>> rows{{"node", "orders", "loop", "eps", "case", "t0", "x"}};
  for (std::size_t i = 0; i < table.u.size(); ++i) {
    std::vector<std::string> row{"Q_" + std::to_string(i), table.u[i].str()};
    if (i > 0) {
      const std::size_t k = i - 1;
      row.push_back(std::to_string(i));
      row.push_back(std::to_string(table.epsilon[k]));
      row.push_back(std::string(1, table.case_tags[k]));
      row.push_back(table.special_index[k] ? std::to_string(*table.special_index[k]) : "-");
      row.push_back(table.x[k] ? table.x[k]->str() : "-");
    }
    rows.push_back(row);
  }
  return layout(rows);
}

}  // namespace bnchain
