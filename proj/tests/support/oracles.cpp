#include "oracles.hpp"

#include <functional>
#include <map>
#include <numeric>

namespace oracle {

std::uint64_t pascal_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> row(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    row[a][0] = 1;
    for (int b = 1; b <= a; ++b) row[a][b] = row[a - 1][b - 1] + row[a - 1][b];
  }
  return row[n][k];
}

namespace {

// heights[s] = cells filled in column s; a cell may go in column s when the
// column is short of kbar and (s == 0 or the column to its left is taller).
void fill(int k, int kbar, int next, std::vector<int>& heights, std::vector<std::vector<int>>& rows,
          const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (next > k * kbar) {
    emit(rows);
    return;
  }
  for (int s = 0; s < k; ++s) {
    if (heights[s] == kbar) continue;
    if (s > 0 && heights[s - 1] <= heights[s]) continue;
    rows[heights[s]][s] = next;
    ++heights[s];
    fill(k, kbar, next + 1, heights, rows, emit);
    --heights[s];
    rows[heights[s]][s] = 0;
  }
}

}  // namespace

std::uint64_t count_standard_fillings(int k, int kbar) {
  std::uint64_t n = 0;
  std::vector<int> heights(k, 0);
  std::vector<std::vector<int>> rows(kbar, std::vector<int>(k, 0));
  fill(k, kbar, 1, heights, rows, [&](const auto&) { ++n; });
  return n;
}

std::vector<std::vector<std::vector<int>>> list_standard_fillings(int k, int kbar) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> heights(k, 0);
  std::vector<std::vector<int>> rows(kbar, std::vector<int>(k, 0));
  fill(k, kbar, 1, heights, rows, [&](const auto& rs) { out.push_back(rs); });
  return out;
}

std::uint64_t count_tableaux(int g, int d, int r) {
  const int k = r + 1;
  const int kbar = g - d + r;
  const int rho = g - k * kbar;
  if (kbar < 0 || rho < 0) return 0;
  std::map<std::pair<int, std::vector<int>>, std::uint64_t> memo;
  std::function<std::uint64_t(int, std::vector<int>&, int)> go = [&](int i, std::vector<int>& h, int skipped) {
    if (i > g) return std::uint64_t{skipped == rho};
    auto key = std::make_pair(i, h);
    key.second.push_back(skipped);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    if (skipped < rho) total += go(i + 1, h, skipped + 1);
    for (int s = 0; s < k; ++s) {
      if (h[s] == kbar || (s > 0 && h[s - 1] <= h[s])) continue;
      ++h[s];
      total += go(i + 1, h, skipped);
      --h[s];
    }
    memo[key] = total;
    return total;
  };
  std::vector<int> h(k, 0);
  return go(1, h, 0);
}

int naive_beta(const std::vector<std::vector<int>>& rows, int i, int s) {
  int n = 0;
  for (const auto& row : rows)
    if (row[s] <= i) ++n;
  return n;
}

std::vector<int> closed_form_orders(const std::vector<std::vector<int>>& rows, int r, int i) {
  std::vector<int> out;
  for (int s = 0; s <= r; ++s) out.push_back(r - s + naive_beta(rows, i, s) - naive_beta(rows, i, r));
  return out;
}

bool cycle_winnable(const std::vector<std::int64_t>& chips) {
  const auto n = static_cast<std::int64_t>(chips.size());
  const std::int64_t deg = std::accumulate(chips.begin(), chips.end(), std::int64_t{0});
  if (deg > 0) return true;
  if (deg < 0) return false;
  std::int64_t moment = 0;
  for (std::int64_t v = 0; v < n; ++v) moment += chips[v] * v;
  return ((moment % n) + n) % n == 0;
}

int cycle_rank(const std::vector<std::int64_t>& chips) {
  const std::int64_t deg = std::accumulate(chips.begin(), chips.end(), std::int64_t{0});
  if (!cycle_winnable(chips)) return -1;
  return deg == 0 ? 0 : static_cast<int>(deg - 1);
}

}  // namespace oracle
