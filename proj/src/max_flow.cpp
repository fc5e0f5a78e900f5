#include "gainflow/max_flow.hpp"

#include <vector>

#include "gainflow/lp.hpp"

namespace gainflow {
namespace {

enum class EdgeState { Fixed0, Continuous, Unassigned, Unused, Absorbing, Delivering };

// Linear expression over LP variables plus a constant.
struct Affine {
  std::vector<lp::Term> terms;
  Rational constant;

  void add(const Affine& other, int sign = 1) {
    for (const auto& t : other.terms) terms.push_back({t.variable, sign > 0 ? t.coefficient : -t.coefficient});
    constant += sign > 0 ? other.constant : -other.constant;
  }
};

struct BuiltLp {
  lp::Problem problem;
  std::vector<std::optional<std::size_t>> flow_var;  // per edge position
  Affine objective;
  std::vector<std::size_t> strict;  // variables that must stay > 0
};

class LabelingSearch {
 public:
  LabelingSearch(const AdditiveNetwork& network, FlowObjective objective, const MaxFlowOptions& options)
      : network_(network), objective_(objective), states_(network.edge_count()) {
    const auto edges = network.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (e.capacity.is_zero()) {
        states_[i] = EdgeState::Fixed0;
      } else if (e.gain.is_zero()) {
        states_[i] = EdgeState::Continuous;
      } else {
        states_[i] = EdgeState::Unassigned;
        candidates_.push_back(i);
      }
    }
    diagnostics_.candidates = candidates_.size();
    if (candidates_.size() > options.candidate_budget)
      throw BudgetExceeded("max_flow: " + std::to_string(candidates_.size()) +
                           " nonzero-gain edges exceed the enumeration budget of " +
                           std::to_string(options.candidate_budget));
  }

  MaxFlowResult run() {
    explore(0);
    MaxFlowResult result;
    result.objective = objective_;
    // The all-unused labeling is always feasible, so a best value exists.
    result.value = *best_value_;
    result.flow = best_flow_;
    result.labeling = labeling_of(network_, best_flow_);
    if (supremum_ && *supremum_ > *best_value_) {
      diagnostics_.unattained_supremum = supremum_;
      result.attained = false;
    }
    result.diagnostics = diagnostics_;
    return result;
  }

 private:
  BuiltLp build() const {
    BuiltLp built;
    const auto edges = network_.edges();
    built.flow_var.resize(edges.size());
    std::vector<Affine> delivered(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      switch (states_[i]) {
        case EdgeState::Fixed0:
        case EdgeState::Unused:
          break;
        case EdgeState::Continuous: {
          auto f = built.problem.add_variable(Rational(), e.capacity);
          built.flow_var[i] = f;
          delivered[i].terms.push_back({f, 1});
          break;
        }
        case EdgeState::Absorbing: {
          auto f = built.problem.add_variable(Rational(), min(e.capacity, -e.gain));
          built.flow_var[i] = f;
          built.strict.push_back(f);
          break;
        }
        case EdgeState::Delivering: {
          const bool lossy = e.gain.sign() < 0;
          auto f = built.problem.add_variable(lossy ? -e.gain : Rational(), e.capacity);
          built.flow_var[i] = f;
          if (!lossy) built.strict.push_back(f);
          delivered[i].terms.push_back({f, 1});
          delivered[i].constant = e.gain;
          break;
        }
        case EdgeState::Unassigned: {
          // Convex hull of {(0,0)} and the used branch of (f, delivered).
          auto f = built.problem.add_variable(Rational(), e.capacity);
          built.flow_var[i] = f;
          const Rational full = e.capacity + e.gain;  // delivered at f = u
          if (full.sign() <= 0) break;
          auto d = built.problem.add_variable();
          delivered[i].terms.push_back({d, 1});
          const Rational slope = full / e.capacity;
          if (e.gain.sign() > 0) {
            built.problem.add_constraint({{d, 1}, {f, -1}}, lp::Sense::LessEqual, e.gain);
            built.problem.add_constraint({{d, 1}, {f, -slope}}, lp::Sense::GreaterEqual, Rational());
          } else {
            built.problem.add_constraint({{d, 1}, {f, -1}}, lp::Sense::GreaterEqual, e.gain);
            built.problem.add_constraint({{d, 1}, {f, -slope}}, lp::Sense::LessEqual, Rational());
          }
          break;
        }
      }
    }

    const auto vertices = network_.vertices();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (network_.is_terminal(vertices[v])) continue;
      Affine balance;
      for (auto i : network_.in_edges(v)) balance.add(delivered[i]);
      for (auto i : network_.out_edges(v))
        if (built.flow_var[i]) balance.terms.push_back({*built.flow_var[i], -1});
      if (balance.terms.empty()) {
        if (!balance.constant.is_zero()) built.problem.add_constraint({}, lp::Sense::Equal, -balance.constant);
        continue;
      }
      built.problem.add_constraint(std::move(balance.terms), lp::Sense::Equal, -balance.constant);
    }

    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (objective_ == FlowObjective::InFlow && network_.is_sink(edges[i].head)) built.objective.add(delivered[i]);
      if (objective_ == FlowObjective::OutFlow && network_.is_source(edges[i].tail) && built.flow_var[i])
        built.objective.terms.push_back({*built.flow_var[i], 1});
    }
    built.problem.set_objective(built.objective.terms, built.objective.constant);
    return built;
  }

  lp::Solution solve(const lp::Problem& problem) {
    ++diagnostics_.lp_calls;
    auto solution = lp::maximize(problem);
    if (solution.status == lp::Status::Unbounded) throw DegenerateLp("max_flow: unbounded LP relaxation");
    return solution;
  }

  // Largest epsilon <= 1 with every strict variable >= epsilon, optionally
  // pinning the objective to `level`.
  lp::Solution strict_interior(BuiltLp built, const std::optional<Rational>& level) {
    auto eps = built.problem.add_variable(Rational(), Rational(1));
    for (auto f : built.strict) built.problem.add_constraint({{f, 1}, {eps, -1}}, lp::Sense::GreaterEqual, Rational());
    if (level) built.problem.add_constraint(built.objective.terms, lp::Sense::Equal, *level - built.objective.constant);
    built.problem.set_objective({{eps, 1}});
    return solve(built.problem);
  }

  GeneralFlow flow_from(const BuiltLp& built, const std::vector<Rational>& values) const {
    GeneralFlow flow;
    const auto edges = network_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (built.flow_var[i]) flow.set(edges[i].id, values[*built.flow_var[i]]);
    return flow;
  }

  void leaf() {
    ++diagnostics_.labelings_solved;
    BuiltLp built = build();
    const auto closure = solve(built.problem);
    if (closure.status != lp::Status::Optimal) return;
    if (best_value_ && closure.objective <= *best_value_) return;

    if (built.strict.empty()) {
      accept(built, closure);
      return;
    }
    const auto pinned = strict_interior(built, closure.objective);
    if (pinned.status == lp::Status::Optimal && pinned.objective.sign() > 0) {
      accept(built, pinned);
      return;
    }
    // Optimum only on the boundary; record the supremum if the labeling is
    // realizable at all.
    const auto interior = strict_interior(built, std::nullopt);
    if (interior.status == lp::Status::Optimal && interior.objective.sign() > 0)
      if (!supremum_ || closure.objective > *supremum_) supremum_ = closure.objective;
  }

  void accept(const BuiltLp& built, const lp::Solution& solution) {
    best_flow_ = flow_from(built, solution.values);
    best_value_ = flow_value(network_, best_flow_, objective_);
  }

  void explore(std::size_t depth) {
    if (depth == candidates_.size()) {
      leaf();
      return;
    }
    if (best_value_) {
      const BuiltLp relaxed = build();
      const auto bound = solve(relaxed.problem);
      if (bound.status != lp::Status::Optimal || bound.objective <= *best_value_) return;
    }
    const auto i = candidates_[depth];
    const auto& e = network_.edges()[i];
    std::vector<EdgeState> order{EdgeState::Delivering};
    if (e.gain.sign() < 0) {
      if (e.capacity < -e.gain) order.clear();
      order.push_back(EdgeState::Absorbing);
    }
    order.push_back(EdgeState::Unused);
    for (auto state : order) {
      states_[i] = state;
      explore(depth + 1);
    }
    states_[i] = EdgeState::Unassigned;
  }

  const AdditiveNetwork& network_;
  FlowObjective objective_;
  std::vector<EdgeState> states_;
  std::vector<std::size_t> candidates_;
  std::optional<Rational> best_value_;
  GeneralFlow best_flow_;
  std::optional<Rational> supremum_;
  MaxFlowDiagnostics diagnostics_;
};

}  // namespace

SupportLabeling labeling_of(const AdditiveNetwork& network, const GeneralFlow& flow) {
  SupportLabeling labeling;
  for (const auto& [id, value] : flow.assignment()) {
    labeling.used.insert(id);
    if ((value + network.edge(id).gain).sign() <= 0) labeling.absorbed.insert(id);
  }
  return labeling;
}

MaxFlowResult max_flow(const AdditiveNetwork& network, FlowObjective objective, MaxFlowOptions options) {
  return LabelingSearch(network, objective, options).run();
}

}  // namespace gainflow
