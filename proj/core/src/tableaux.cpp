#include "bnchain/tableaux.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bnchain {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

void check_params(const BNParams& p) {
  if (p.g < 1) throw std::invalid_argument("genus must be at least 1");
  if (p.d < 0) throw std::invalid_argument("degree must be non-negative");
  if (p.r < 0) throw std::invalid_argument("dimension r must be non-negative");
}

int rho(const BNParams& p) { return p.g - p.k() * p.kbar(); }

LocusKind classify_locus(const BNParams& p) {
  if (p.kbar() < 0) return LocusKind::WholeJacobian;
  if (rho(p) < 0) return LocusKind::Empty;
  return LocusKind::Components;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 acc = 1;
  for (int i = 0; i < k; ++i) {
    acc = acc * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    if (acc > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t hook_count(int k, int kbar) {
  if (k < 1 || kbar < 1) throw std::invalid_argument("hook_count needs k >= 1 and kbar >= 1");
  const int n = k * kbar;
  // Prime exponents of n! divided by the product of hooks (row + column - 1).
  std::vector<int> exponent(n + 1, 0);
  auto accumulate = [&](int value, int sign) {
    for (int p = 2; value > 1; ++p) {
      while (value % p == 0) {
        exponent[p] += sign;
        value /= p;
      }
    }
  };
  for (int v = 2; v <= n; ++v) accumulate(v, +1);
  for (int row = 1; row <= kbar; ++row)
    for (int col = 1; col <= k; ++col) accumulate(row + col - 1, -1);

  u128 result = 1;
  for (int p = 2; p <= n; ++p) {
    if (exponent[p] < 0) throw std::logic_error("hook product does not divide factorial");
    for (int e = 0; e < exponent[p]; ++e) {
      result *= static_cast<unsigned>(p);
      if (result > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("hook_count overflow");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t expected_component_count(const BNParams& p) {
  if (classify_locus(p) != LocusKind::Components) return 0;
  const std::uint64_t fillings = p.kbar() == 0 ? 1 : hook_count(p.k(), p.kbar());
  const u128 total = static_cast<u128>(binomial(p.g, rho(p))) * fillings;
  if (total > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("component count overflow");
  return static_cast<std::uint64_t>(total);
}

Tableau Tableau::from_rows(const BNParams& params, std::vector<std::vector<int>> rows) {
  check_params(params);
  const int k = params.k();
  const int kbar = params.kbar();
  if (kbar < 0) throw std::invalid_argument("no tableau exists when g - d + r < 0");
  if (static_cast<int>(rows.size()) != kbar) {
    throw std::invalid_argument("expected " + std::to_string(kbar) + " rows, got " + std::to_string(rows.size()));
  }
  Tableau t;
  t.params_ = params;
  t.cells_.assign(params.g + 1, std::nullopt);
  for (int m = 0; m < kbar; ++m) {
    if (static_cast<int>(rows[m].size()) != k) {
      throw std::invalid_argument("row " + std::to_string(m + 1) + " has " + std::to_string(rows[m].size()) +
                                  " entries, expected " + std::to_string(k));
    }
    for (int col = 0; col < k; ++col) {
      const int index = rows[m][col];
      if (index < 1 || index > params.g) {
        throw std::invalid_argument("entry " + std::to_string(index) + " outside 1.." + std::to_string(params.g));
      }
      if (t.cells_[index]) throw std::invalid_argument("entry " + std::to_string(index) + " appears twice");
      t.cells_[index] = Cell{col, m + 1};
    }
  }
  for (int i = 1; i <= params.g; ++i)
    if (!t.cells_[i]) t.free_.push_back(i);
  t.rows_ = std::move(rows);
  return t;
}

std::vector<int> Tableau::placed_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= params_.g; ++i)
    if (cells_[i]) out.push_back(i);
  return out;
}

bool Tableau::is_placed(int index) const {
  return index >= 1 && index <= params_.g && cells_[index].has_value();
}

std::optional<int> Tableau::column_of(int index) const {
  if (!is_placed(index)) return std::nullopt;
  return cells_[index]->column;
}

std::optional<Cell> Tableau::cell_of(int index) const {
  if (!is_placed(index)) return std::nullopt;
  return cells_[index];
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string Tableau::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t m = 0; m < rows_.size(); ++m) {
    if (m) os << ',';
    os << '[';
    for (std::size_t c = 0; c < rows_[m].size(); ++c) os << (c ? "," : "") << rows_[m][c];
    os << ']';
  }
  os << ']';
  return os.str();
}

TableauCheck validate_tableau(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t m = 0; m < rows.size(); ++m) {
    for (std::size_t c = 0; c < rows[m].size(); ++c) {
      if (c > 0 && rows[m][c - 1] >= rows[m][c]) {
        std::ostringstream os;
        os << "row " << m + 1 << ": entries " << rows[m][c - 1] << " (column " << c - 1 << ") and " << rows[m][c]
           << " (column " << c << ") not increasing";
        return {false, os.str()};
      }
      if (m > 0 && rows[m - 1][c] >= rows[m][c]) {
        std::ostringstream os;
        os << "column " << c << ": entries " << rows[m - 1][c] << " (row " << m << ") and " << rows[m][c] << " (row "
           << m + 1 << ") not increasing";
        return {false, os.str()};
      }
    }
  }
  return {};
}

void require_valid(const Tableau& t) {
  if (auto check = validate_tableau(t); !check) throw std::invalid_argument("invalid tableau: " + check.diagnostic);
}

int beta(const Tableau& t, int i, int s) {
  const BNParams& p = t.params();
  if (i < 0 || i > p.g) throw std::out_of_range("beta: index " + std::to_string(i) + " outside 0..g");
  if (s < 0 || s > p.r) throw std::out_of_range("beta: column " + std::to_string(s) + " outside 0..r");
  int count = 0;
  for (int j = 1; j <= i; ++j)
    if (t.column_of(j) == s) ++count;
  return count;
}

namespace {

void fill_recursive(int k, int kbar, int next, int total, std::vector<int>& height,
                    std::vector<std::vector<int>>& grid, std::vector<std::vector<std::vector<int>>>& out) {
  if (next > total) {
    out.push_back(grid);
    return;
  }
  for (int col = 0; col < k; ++col) {
    // A column may grow only while it stays shorter than the one to its left.
    if (height[col] >= kbar) continue;
    if (col > 0 && height[col - 1] <= height[col]) continue;
    grid[height[col]][col] = next;
    ++height[col];
    fill_recursive(k, kbar, next + 1, total, height, grid, out);
    --height[col];
  }
}

std::vector<int> reading_word_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> w;
  for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
  return w;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> standard_fillings(int k, int kbar) {
  if (k < 1 || kbar < 0) throw std::invalid_argument("standard_fillings needs k >= 1 and kbar >= 0");
  std::vector<std::vector<std::vector<int>>> out;
  if (kbar == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> height(k, 0);
  std::vector<std::vector<int>> grid(kbar, std::vector<int>(k, 0));
  fill_recursive(k, kbar, 1, k * kbar, height, grid, out);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return reading_word_of(a) < reading_word_of(b); });
  return out;
}

void for_each_tableau(const BNParams& p, const std::function<bool(const Tableau&)>& visit) {
  check_params(p);
  if (classify_locus(p) != LocusKind::Components) return;
  const int free_count = rho(p);
  const auto fillings = standard_fillings(p.k(), p.kbar());

  // Lexicographic free subsets of {1..g} of size rho.
  std::vector<int> subset(free_count);
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    std::vector<int> placed;
    placed.reserve(p.g - free_count);
    for (int i = 1, s = 0; i <= p.g; ++i) {
      if (s < free_count && subset[s] == i) {
        ++s;
      } else {
        placed.push_back(i);
      }
    }
    for (const auto& filling : fillings) {
      auto rows = filling;
      for (auto& row : rows)
        for (int& entry : row) entry = placed[entry - 1];
      if (!visit(Tableau::from_rows(p, std::move(rows)))) return;
    }

    int pos = free_count - 1;
    while (pos >= 0 && subset[pos] == p.g - free_count + pos + 1) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int j = pos + 1; j < free_count; ++j) subset[j] = subset[j - 1] + 1;
  }
}

std::vector<Tableau> enumerate_tableaux(const BNParams& p) {
  std::vector<Tableau> out;
  for_each_tableau(p, [&](const Tableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace bnchain
