#include "gainflow/lp.hpp"

#include <stdexcept>

namespace gainflow::lp {

std::size_t Problem::add_variable(Rational lower, std::optional<Rational> upper) {
  lower_.push_back(std::move(lower));
  upper_.push_back(std::move(upper));
  return lower_.size() - 1;
}

void Problem::add_constraint(std::vector<Term> terms, Sense sense, Rational rhs) {
  for (const auto& t : terms)
    if (t.variable >= lower_.size()) throw std::out_of_range("constraint references unknown LP variable");
  rows_.push_back({std::move(terms), sense, std::move(rhs)});
}

void Problem::set_objective(std::vector<Term> terms, Rational constant) {
  for (const auto& t : terms)
    if (t.variable >= lower_.size()) throw std::out_of_range("objective references unknown LP variable");
  objective_ = std::move(terms);
  objective_constant_ = std::move(constant);
}

// Dense tableau over shifted variables y = x - lower, 0 <= y <= upper - lower.
// Nonbasic columns sit at one of their bounds; basic values live in beta_.
struct Solver {
  explicit Solver(const Problem& p) : problem(p) {}

  const Problem& problem;
  std::size_t structural = 0;
  std::size_t artificial_begin = 0;
  std::vector<std::vector<Rational>> tableau;
  std::vector<Rational> beta;
  std::vector<std::size_t> basis;
  std::vector<std::optional<Rational>> upper;
  std::vector<bool> at_upper;
  std::vector<bool> is_basic;
  std::vector<bool> frozen;
  std::vector<Rational> reduced;
  std::size_t pivots = 0;

  bool setup() {
    structural = problem.lower_.size();
    const std::size_t m = problem.rows_.size();
    std::size_t slack_count = 0;
    for (const auto& row : problem.rows_)
      if (row.sense != Sense::Equal) ++slack_count;

    upper.assign(structural + slack_count, std::nullopt);
    for (std::size_t j = 0; j < structural; ++j) {
      if (problem.upper_[j]) {
        Rational width = *problem.upper_[j] - problem.lower_[j];
        if (width.sign() < 0) return false;
        upper[j] = std::move(width);
      }
    }

    // Build rows with slack columns; artificials are appended afterwards.
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(structural + slack_count));
    std::vector<Rational> rhs(m);
    std::vector<std::optional<std::size_t>> unit_column(m);
    std::size_t slack = structural;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = problem.rows_[i];
      Rational b = row.rhs;
      for (const auto& t : row.terms) {
        rows[i][t.variable] += t.coefficient;
        b -= t.coefficient * problem.lower_[t.variable];
      }
      std::optional<std::size_t> slack_column;
      if (row.sense != Sense::Equal) {
        rows[i][slack] = row.sense == Sense::LessEqual ? Rational(1) : Rational(-1);
        slack_column = slack++;
      }
      if (b.sign() < 0) {
        for (auto& a : rows[i]) a = -a;
        b = -b;
      }
      if (slack_column && rows[i][*slack_column] == Rational(1)) unit_column[i] = slack_column;
      rhs[i] = std::move(b);
    }

    artificial_begin = structural + slack_count;
    std::size_t artificial_count = 0;
    for (const auto& u : unit_column)
      if (!u) ++artificial_count;
    const std::size_t columns = artificial_begin + artificial_count;
    upper.resize(columns, std::nullopt);
    at_upper.assign(columns, false);
    is_basic.assign(columns, false);
    frozen.assign(columns, false);
    basis.resize(m);
    std::size_t artificial = artificial_begin;
    for (std::size_t i = 0; i < m; ++i) {
      rows[i].resize(columns);
      if (unit_column[i]) {
        basis[i] = *unit_column[i];
      } else {
        rows[i][artificial] = Rational(1);
        basis[i] = artificial++;
      }
      is_basic[basis[i]] = true;
    }
    tableau = std::move(rows);
    beta = std::move(rhs);
    return true;
  }

  void price(const std::vector<Rational>& cost) {
    reduced = cost;
    for (std::size_t i = 0; i < tableau.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < reduced.size(); ++j)
        if (!tableau[i][j].is_zero()) reduced[j] -= cb * tableau[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    ++pivots;
    auto& pivot_row = tableau[r];
    const Rational inverse = Rational(1) / pivot_row[col];
    for (auto& a : pivot_row)
      if (!a.is_zero()) a *= inverse;
    for (std::size_t i = 0; i < tableau.size(); ++i) {
      if (i == r) continue;
      const Rational factor = tableau[i][col];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < pivot_row.size(); ++j)
        if (!pivot_row[j].is_zero()) tableau[i][j] -= factor * pivot_row[j];
    }
    const Rational factor = reduced[col];
    if (!factor.is_zero())
      for (std::size_t j = 0; j < pivot_row.size(); ++j)
        if (!pivot_row[j].is_zero()) reduced[j] -= factor * pivot_row[j];
  }

  // Runs simplex iterations on the current reduced costs. Returns false when
  // the objective is unbounded.
  bool iterate() {
    const std::size_t columns = reduced.size();
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns; ++j) {
        if (is_basic[j] || frozen[j]) continue;
        const int s = reduced[j].sign();
        if ((s > 0 && !at_upper[j] && !(upper[j] && upper[j]->is_zero())) || (s < 0 && at_upper[j])) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t col = *entering;
      const int direction = at_upper[col] ? -1 : 1;

      std::optional<Rational> step = upper[col];
      std::optional<std::size_t> leaving_row;
      bool leaves_at_upper = false;
      for (std::size_t i = 0; i < tableau.size(); ++i) {
        const Rational& alpha = tableau[i][col];
        if (alpha.is_zero()) continue;
        const bool decreasing = (alpha.sign() > 0) == (direction > 0);
        std::optional<Rational> limit;
        if (decreasing) {
          limit = beta[i] / abs(alpha);
        } else if (upper[basis[i]]) {
          limit = (*upper[basis[i]] - beta[i]) / abs(alpha);
        }
        if (!limit) continue;
        const bool better = !step || *limit < *step ||
                            (*limit == *step && leaving_row && basis[i] < basis[*leaving_row]);
        if (better) {
          step = std::move(limit);
          leaving_row = i;
          leaves_at_upper = !decreasing;
        }
      }
      if (!step) return false;

      const Rational signed_step = direction > 0 ? *step : -*step;
      for (std::size_t i = 0; i < tableau.size(); ++i)
        if (!tableau[i][col].is_zero()) beta[i] -= tableau[i][col] * signed_step;

      if (!leaving_row) {
        at_upper[col] = !at_upper[col];
        continue;
      }
      const std::size_t r = *leaving_row;
      const std::size_t leaving = basis[r];
      const Rational start = at_upper[col] ? *upper[col] : Rational();
      is_basic[leaving] = false;
      at_upper[leaving] = leaves_at_upper;
      is_basic[col] = true;
      at_upper[col] = false;
      basis[r] = col;
      beta[r] = start + signed_step;
      pivot(r, col);
    }
  }

  Rational value(std::size_t j) const {
    if (at_upper[j]) return *upper[j];
    return {};
  }

  Solution run() {
    Solution solution;
    if (!setup()) return solution;
    const std::size_t columns = upper.size();

    std::vector<Rational> phase_one(columns);
    for (std::size_t j = artificial_begin; j < columns; ++j) phase_one[j] = Rational(-1);
    price(phase_one);
    iterate();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] >= artificial_begin && beta[i].sign() > 0) {
        solution.pivots = pivots;
        return solution;
      }
    for (std::size_t j = artificial_begin; j < columns; ++j) {
      upper[j] = Rational();
      frozen[j] = true;
    }

    std::vector<Rational> cost(columns);
    for (const auto& t : problem.objective_) cost[t.variable] += t.coefficient;
    price(cost);
    if (!iterate()) {
      solution.status = Status::Unbounded;
      solution.pivots = pivots;
      return solution;
    }

    std::vector<Rational> shifted(columns);
    for (std::size_t j = 0; j < columns; ++j) shifted[j] = value(j);
    for (std::size_t i = 0; i < basis.size(); ++i) shifted[basis[i]] = beta[i];

    solution.status = Status::Optimal;
    solution.values.resize(structural);
    for (std::size_t j = 0; j < structural; ++j) solution.values[j] = shifted[j] + problem.lower_[j];
    solution.objective = problem.objective_constant_;
    for (const auto& t : problem.objective_) solution.objective += t.coefficient * solution.values[t.variable];
    solution.pivots = pivots;
    return solution;
  }
};

Solution maximize(const Problem& problem) { return Solver(problem).run(); }

}  // namespace gainflow::lp
