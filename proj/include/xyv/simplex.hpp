#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace xyv {

struct SimplexResult {
  std::vector<double> x;
  /// Shadow price of each constraint row.
  std::vector<double> dual;
  double objective = 0.0;
  std::size_t pivots = 0;
};

/// Maximises c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is
/// feasible. Dense tableau with Bland's rule. Throws std::runtime_error if
/// the problem is unbounded and BudgetExceeded if the tableau is too large.
SimplexResult simplex_max(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                          const std::vector<double>& c);

/// A column of the game matrix that no row covers.
class UncoveredError : public std::runtime_error {
 public:
  explicit UncoveredError(std::size_t column)
      : std::runtime_error("error column " + std::to_string(column) + " is detected by no test"), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Optimal mixed strategies of the 0/1 game where the row player maximises
/// and the column player minimises the payoff m[row][col].
struct GameSolution {
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
  double value = 0.0;
  /// max_row (m y)_row - min_col (p m)_col for the returned strategies.
  double gap = 0.0;
};

/// Every column must contain a 1, otherwise UncoveredError is thrown.
GameSolution solve_matrix_game(const std::vector<std::vector<std::uint8_t>>& m);

}  // namespace xyv
