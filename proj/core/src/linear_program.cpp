#include "newton_osc/linear_program.hpp"

#include "newton_osc/errors.hpp"
#include "newton_osc/linear_algebra.hpp"

namespace newton_osc {

namespace {

// Tableau rows hold [coefficients | rhs]; basis[r] names the basic column of row r.
class Simplex {
 public:
  Simplex(RationalMatrix rows, std::vector<std::size_t> basis, std::size_t columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), columns_(columns) {}

  // Maximizes cost over allowed columns. Returns false if unbounded.
  bool optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    while (true) {
      // Reduced costs: cost_j - sum_r cost_{basis r} * a_rj.
      std::size_t entering = columns_;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t r = 0; r < rows_.size(); ++r) {
          if (rows_[r][j] != 0) reduced -= cost[basis_[r]] * rows_[r][j];
        }
        if (reduced > 0) {
          entering = j;
          break;  // Bland: smallest improving index
        }
      }
      if (entering == columns_) return true;

      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][entering] <= 0) continue;
        Rational ratio = rows_[r][columns_] / rows_[r][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_.size()) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / rows_[row][col];
    for (auto& x : rows_[row]) x *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == row || rows_[r][col] == 0) continue;
      const Rational factor = rows_[r][col];
      for (std::size_t c = 0; c <= columns_; ++c) rows_[r][c] -= factor * rows_[row][c];
    }
    basis_[row] = col;
  }

  bool is_basic(std::size_t col) const {
    for (auto b : basis_) {
      if (b == col) return true;
    }
    return false;
  }

  RationalVector values() const {
    RationalVector x(columns_, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) x[basis_[r]] = rows_[r][columns_];
    return x;
  }

  RationalMatrix& rows() { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }

 private:
  RationalMatrix rows_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
};

}  // namespace

LpResult maximize(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables;
  const std::size_t m = lp.constraints.size();

  // Column layout: [original n | one slack/surplus per inequality | one artificial per row].
  std::size_t num_slack = 0;
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != n) {
      throw Error(ErrorKind::kInternal, "lp_shape", "constraint length does not match variable count");
    }
    if (c.relation != Relation::kEqual) ++num_slack;
  }
  const std::size_t artificial_start = n + num_slack;
  const std::size_t columns = artificial_start + m;

  RationalMatrix rows(m, RationalVector(columns + 1, 0));
  std::vector<std::size_t> basis(m);
  std::size_t slack = n;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    for (std::size_t j = 0; j < n; ++j) rows[r][j] = c.coefficients[j];
    rows[r][columns] = c.rhs;
    if (c.relation == Relation::kLessEqual) rows[r][slack++] = 1;
    if (c.relation == Relation::kGreaterEqual) rows[r][slack++] = -1;
    if (rows[r][columns] < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    rows[r][artificial_start + r] = 1;
    basis[r] = artificial_start + r;
  }

  Simplex simplex(std::move(rows), std::move(basis), columns);

  // Phase 1: maximize -sum(artificials).
  RationalVector phase1(columns, 0);
  for (std::size_t r = 0; r < m; ++r) phase1[artificial_start + r] = -1;
  std::vector<bool> allowed(columns, true);
  simplex.optimize(phase1, allowed);
  {
    auto x = simplex.values();
    for (std::size_t r = 0; r < m; ++r) {
      if (x[artificial_start + r] != 0) return {LpStatus::kInfeasible, 0, {}};
    }
  }

  // Drive zero-valued artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    if (simplex.basis()[r] < artificial_start) continue;
    for (std::size_t j = 0; j < artificial_start; ++j) {
      if (simplex.rows()[r][j] != 0 && !simplex.is_basic(j)) {
        simplex.pivot(r, j);
        break;
      }
    }
  }
  for (std::size_t j = artificial_start; j < columns; ++j) allowed[j] = false;

  RationalVector cost(columns, 0);
  for (std::size_t j = 0; j < n && j < lp.objective.size(); ++j) cost[j] = lp.objective[j];
  if (!simplex.optimize(cost, allowed)) return {LpStatus::kUnbounded, 0, {}};

  auto x = simplex.values();
  LpResult result;
  result.status = LpStatus::kOptimal;
  result.solution.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
  result.value = 0;
  for (std::size_t j = 0; j < n && j < lp.objective.size(); ++j) result.value += lp.objective[j] * result.solution[j];
  return result;
}

bool is_feasible(const LinearProgram& lp) {
  LinearProgram copy = lp;
  copy.objective.clear();
  return maximize(copy).status == LpStatus::kOptimal;
}

}  // namespace newton_osc
