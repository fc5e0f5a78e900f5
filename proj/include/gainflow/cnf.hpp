#pragma once

#include <array>
#include <string>
#include <vector>

#include "gainflow/undirected.hpp"

namespace gainflow {

// Literal +i is variable x_i, -i its negation; variables are 1-based.
using Literal = int;
using Clause = std::array<Literal, 3>;

// 3CNF formula. Construction rejects literals outside 1..variable_count and
// clauses mentioning a variable twice (x with x, or x with its negation).
class CnfFormula {
 public:
  CnfFormula(int variable_count, std::vector<Clause> clauses);

  int variable_count() const { return variable_count_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  // Number of clauses containing the literal.
  int occurrences(Literal literal) const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int variable_count_;
  std::vector<Clause> clauses_;
};

// Truth value per variable, index 0 holding x_1.
using Assignment = std::vector<bool>;

bool literal_value(const Assignment& assignment, Literal literal);
// Exactly one true literal in every clause.
bool one_in_three(const CnfFormula& formula, const Assignment& assignment);

std::string literal_vertex(Literal literal);  // "lit:x3" or "lit:~x3"
std::string clause_vertex(std::size_t clause_index);  // "clause:C1", 1-based

// Literal/clause incidence graph: one vertex per literal and per clause; edge
// ids 1..|X| join x_i with its negation, then one edge per literal occurrence
// in clause order.
UndirectedGraph cnf_graph(const CnfFormula& formula);

}  // namespace gainflow
