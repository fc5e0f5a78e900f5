#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gainflow/rational.hpp"

// Exact rational linear programming for small dense problems.
namespace gainflow::lp {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct Term {
  std::size_t variable;
  Rational coefficient;
};

class Problem {
 public:
  // Variables are bounded below; an upper bound is optional.
  std::size_t add_variable(Rational lower = {}, std::optional<Rational> upper = std::nullopt);
  void add_constraint(std::vector<Term> terms, Sense sense, Rational rhs);
  // Objective to maximize; constant offset is added to the optimum.
  void set_objective(std::vector<Term> terms, Rational constant = {});

  std::size_t variable_count() const { return lower_.size(); }
  std::size_t constraint_count() const { return rows_.size(); }

 private:
  friend struct Solver;

  struct Row {
    std::vector<Term> terms;
    Sense sense;
    Rational rhs;
  };

  std::vector<Rational> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Row> rows_;
  std::vector<Term> objective_;
  Rational objective_constant_;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational objective;
  std::vector<Rational> values;
  std::size_t pivots = 0;
};

// Two-phase bounded-variable simplex with Bland's rule; every intermediate
// value is exact, so the returned optimum and point are exact.
Solution maximize(const Problem& problem);

}  // namespace gainflow::lp
