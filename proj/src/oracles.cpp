#include "gainflow/oracles.hpp"

#include <set>

namespace gainflow {
namespace {

class PaftSearch {
 public:
  explicit PaftSearch(const PaftInstance& instance) : instance_(instance) {}

  std::optional<std::vector<EdgeId>> run() {
    visited_.insert(instance_.s());
    if (walk(instance_.s())) return path_;
    return std::nullopt;
  }

 private:
  bool walk(const VertexId& v) {
    if (v == instance_.t()) return true;
    for (auto id : instance_.incident(v)) {
      if (!path_.empty() && instance_.forbids(path_.back(), id)) continue;
      const VertexId next = instance_.edge(id).other(v);
      if (visited_.contains(next)) continue;
      visited_.insert(next);
      path_.push_back(id);
      if (walk(next)) return true;
      path_.pop_back();
      visited_.erase(next);
    }
    return false;
  }

  const PaftInstance& instance_;
  std::set<VertexId> visited_;
  std::vector<EdgeId> path_;
};

}  // namespace

std::optional<std::vector<EdgeId>> paft_oracle(const PaftInstance& instance) { return PaftSearch(instance).run(); }

bool is_valid_paft_path(const PaftInstance& instance, const std::vector<EdgeId>& path) {
  if (path.empty()) return false;
  VertexId at = instance.s();
  std::set<VertexId> visited{at};
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& e = instance.edge(path[i]);
    if (!e.touches(at)) return false;
    if (i > 0 && instance.forbids(path[i - 1], path[i])) return false;
    at = e.other(at);
    if (!visited.insert(at).second) return false;
  }
  return at == instance.t();
}

std::optional<Assignment> sat_oracle(const CnfFormula& formula) {
  const int n = formula.variable_count();
  if (n > sat_oracle_variable_limit)
    throw std::length_error("sat_oracle: " + std::to_string(n) + " variables exceed the limit of " +
                            std::to_string(sat_oracle_variable_limit));
  Assignment assignment(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (int i = 0; i < n; ++i) assignment[static_cast<std::size_t>(i)] = (code >> i) & 1U;
    if (one_in_three(formula, assignment)) return assignment;
  }
  return std::nullopt;
}

}  // namespace gainflow
