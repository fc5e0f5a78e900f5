#pragma once

#include <stdexcept>
#include <string>

#include "gainflow/cnf.hpp"
#include "gainflow/flow.hpp"
#include "gainflow/paft.hpp"

namespace gainflow {

// Line and column are 1-based; 0 means the problem is not tied to one place
// (for example a missing terminal).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Network text:
//   v <id>
//   e <id> <tail> <head> <capacity> <cost> <gain>
//   source <id> / sink <id>
//   rot <vertex> <edge> <edge> ...
// '#' starts a comment. Rationals are integers or p/q. Lines may come in any
// order; serialization writes vertices, edges by id, sources, sinks, then
// rotations, which is the canonical form.
AdditiveNetwork parse_network(const std::string& text);
std::string serialize_network(const AdditiveNetwork& network);

// PAFT text: v <id>, ue <id> <a> <b>, forbid <edge> <edge>, s <id>, t <id>,
// rot <vertex> <edge> ...
PaftInstance parse_paft(const std::string& text);
std::string serialize_paft(const PaftInstance& instance);

// DIMACS-style: "p cnf3 <vars> <clauses>" then one clause per line, three
// nonzero literals and a terminating 0. Lines starting with 'c' or '#' are
// comments.
CnfFormula parse_cnf(const std::string& text);
std::string serialize_cnf(const CnfFormula& formula);

// Flow text: f <edge> <value>. Zero values may be listed and are dropped.
GeneralFlow parse_flow(const std::string& text);
std::string serialize_flow(const GeneralFlow& flow);

std::string read_file(const std::string& path);

}  // namespace gainflow
