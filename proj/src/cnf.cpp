#include "gainflow/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace gainflow {

CnfFormula::CnfFormula(int variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses)) {
  if (variable_count_ < 0) throw NetworkError("negative variable count");
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    std::set<int> seen;
    for (auto literal : clauses_[i]) {
      if (literal == 0 || std::abs(literal) > variable_count_)
        throw NetworkError("clause " + std::to_string(i + 1) + " has literal " + std::to_string(literal) +
                           " outside the variable range");
      if (!seen.insert(std::abs(literal)).second)
        throw NetworkError("clause " + std::to_string(i + 1) + " repeats variable " + std::to_string(std::abs(literal)));
    }
  }
}

int CnfFormula::occurrences(Literal literal) const {
  int count = 0;
  for (const auto& c : clauses_) count += static_cast<int>(std::count(c.begin(), c.end(), literal));
  return count;
}

bool literal_value(const Assignment& assignment, Literal literal) {
  const bool value = assignment.at(static_cast<std::size_t>(std::abs(literal) - 1));
  return literal > 0 ? value : !value;
}

bool one_in_three(const CnfFormula& formula, const Assignment& assignment) {
  for (const auto& c : formula.clauses()) {
    int true_count = 0;
    for (auto literal : c) true_count += literal_value(assignment, literal) ? 1 : 0;
    if (true_count != 1) return false;
  }
  return true;
}

std::string literal_vertex(Literal literal) {
  return std::string(literal > 0 ? "lit:x" : "lit:~x") + std::to_string(std::abs(literal));
}

std::string clause_vertex(std::size_t clause_index) { return "clause:C" + std::to_string(clause_index + 1); }

UndirectedGraph cnf_graph(const CnfFormula& formula) {
  UndirectedGraph g;
  std::uint32_t id = 1;
  for (int x = 1; x <= formula.variable_count(); ++x) {
    g.vertices.push_back(literal_vertex(x));
    g.vertices.push_back(literal_vertex(-x));
    g.edges.push_back({EdgeId{id++}, literal_vertex(x), literal_vertex(-x)});
  }
  for (std::size_t i = 0; i < formula.clauses().size(); ++i) {
    g.vertices.push_back(clause_vertex(i));
    for (auto literal : formula.clauses()[i]) g.edges.push_back({EdgeId{id++}, literal_vertex(literal), clause_vertex(i)});
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  return g;
}

}  // namespace gainflow
