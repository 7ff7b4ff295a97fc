#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bnchain {

/// Genus, degree and projective dimension of a Brill-Noether problem.
struct BNParams {
  int g = 1;
  int d = 0;
  int r = 0;

  /// Number of tableau columns, r + 1.
  int k() const { return r + 1; }
  /// Number of tableau rows, g - d + r. May be zero or negative.
  int kbar() const { return g - d + r; }

  friend bool operator==(const BNParams&, const BNParams&) = default;
};

/// Throws std::invalid_argument unless g >= 1, d >= 0 and r >= 0.
void check_params(const BNParams& p);

/// Brill-Noether number g - k * kbar.
int rho(const BNParams& p);

enum class LocusKind {
  Empty,          ///< rho < 0
  Components,     ///< kbar >= 0 and rho >= 0: a union of tableau components
  WholeJacobian,  ///< kbar < 0: every class qualifies; no tableau indexing
};

LocusKind classify_locus(const BNParams& p);

std::uint64_t binomial(int n, int k);

/// Number of standard fillings of a rectangle with `k` columns and `kbar`
/// rows, by the hook-length product. Throws std::invalid_argument if either
/// side is < 1 and std::overflow_error if the count exceeds 64 bits.
std::uint64_t hook_count(int k, int kbar);

/// binomial(g, rho) * c(k, kbar) for the Components regime, 0 otherwise.
std::uint64_t expected_component_count(const BNParams& p);

/// Position of a placed index: column in 0..r, row in 1..kbar.
struct Cell {
  int column = 0;
  int row = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A filling of the k x kbar rectangle with distinct indices from 1..g.
///
/// Construction only checks the structure (shape, range, distinctness);
/// monotonicity is the job of validate_tableau so that malformed fillings
/// can still be represented and diagnosed.
class Tableau {
 public:
  /// `rows` lists rows top to bottom, each of length k. For kbar == 0 it
  /// must be empty. Throws std::invalid_argument on structural errors.
  static Tableau from_rows(const BNParams& params, std::vector<std::vector<int>> rows);

  const BNParams& params() const { return params_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& free_indices() const { return free_; }
  std::vector<int> placed_indices() const;

  bool is_placed(int index) const;
  /// Column of a placed index; nullopt for free indices.
  std::optional<int> column_of(int index) const;
  std::optional<Cell> cell_of(int index) const;

  /// Rows concatenated top to bottom.
  std::vector<int> reading_word() const;

  std::string str() const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.params_ == b.params_ && a.rows_ == b.rows_;
  }

 private:
  BNParams params_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::optional<Cell>> cells_;  // indexed 0..g, slot 0 unused
  std::vector<int> free_;
};

struct TableauCheck {
  bool ok = true;
  /// First violated pair, e.g. "row 1: entries 2 (column 0) and 1 (column 1) not increasing".
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// True iff rows increase to the right and columns increase downwards.
TableauCheck validate_tableau(const Tableau& t);

/// Throws std::invalid_argument carrying the diagnostic when `t` is not valid.
void require_valid(const Tableau& t);

/// Number of placed indices j <= i lying in column s. Throws
/// std::out_of_range unless 0 <= i <= g and 0 <= s <= r.
int beta(const Tableau& t, int i, int s);

/// All standard fillings of the k x kbar rectangle with 1..k*kbar, as row
/// lists, sorted lexicographically by reading word. kbar == 0 gives one
/// empty filling.
std::vector<std::vector<std::vector<int>>> standard_fillings(int k, int kbar);

/// Visits every tableau for `p` in the fixed order: free-index subsets in
/// lexicographic order, then standard fillings by reading word. Visits
/// nothing when the locus is not in the Components regime. The visitor
/// returns false to stop early.
void for_each_tableau(const BNParams& p, const std::function<bool(const Tableau&)>& visit);

std::vector<Tableau> enumerate_tableaux(const BNParams& p);

}  // namespace bnchain
