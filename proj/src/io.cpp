#include "gainflow/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gainflow {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                         message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;

  const Token& at(std::size_t i) const { return tokens[i]; }
  [[noreturn]] void fail(std::size_t token, const std::string& message) const {
    throw ParseError(number, token < tokens.size() ? tokens[token].column : 1, message);
  }
  void expect_count(std::size_t count) const {
    if (tokens.size() != count)
      fail(std::min(count, tokens.size() - 1),
           "'" + tokens[0].text + "' expects " + std::to_string(count - 1) + " fields, got " +
               std::to_string(tokens.size() - 1));
  }
  void expect_at_least(std::size_t count) const {
    if (tokens.size() < count)
      fail(tokens.size() - 1, "'" + tokens[0].text + "' expects at least " + std::to_string(count - 1) + " fields");
  }
};

// Non-empty lines with comments removed. Comment markers are '#' anywhere and,
// when `dimacs_comments` is set, a leading 'c' token.
std::vector<Line> tokenize(const std::string& text, bool dimacs_comments = false) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++number;
    std::string_view raw(text.data() + start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    const bool comment = dimacs_comments && !line.tokens.empty() && line.tokens[0].text == "c";
    if (!line.tokens.empty() && !comment) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

Rational rational_at(const Line& line, std::size_t i) {
  try {
    return Rational::parse(line.at(i).text);
  } catch (const std::invalid_argument&) {
    line.fail(i, "malformed rational '" + line.at(i).text + "'");
  }
}

long long integer_at(const Line& line, std::size_t i) {
  const auto& text = line.at(i).text;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) line.fail(i, "malformed integer '" + text + "'");
  return value;
}

EdgeId edge_id_at(const Line& line, std::size_t i) {
  const auto value = integer_at(line, i);
  if (value < 0 || value > 0xffffffffLL) line.fail(i, "edge id out of range");
  return EdgeId{static_cast<std::uint32_t>(value)};
}

// Vertex and edge declarations shared by the network and PAFT readers.
struct Declarations {
  std::map<VertexId, std::size_t> vertex_lines;
  std::map<EdgeId, std::size_t> edge_lines;

  void vertex(const Line& line) {
    line.expect_count(2);
    if (!vertex_lines.emplace(line.at(1).text, line.number).second)
      line.fail(1, "duplicate vertex '" + line.at(1).text + "'");
  }
  void edge(const Line& line, EdgeId id) {
    if (!edge_lines.emplace(id, line.number).second) line.fail(1, "duplicate edge id " + to_string(id));
  }
  void require_vertex(const Line& line, std::size_t i) const {
    if (!vertex_lines.contains(line.at(i).text)) line.fail(i, "unknown vertex '" + line.at(i).text + "'");
  }
};

// Reports a validation failure from a constructor without a specific place.
template <typename F>
auto construct(F&& make) {
  try {
    return make();
  } catch (const NetworkError& e) {
    throw ParseError(0, 0, e.what());
  }
}

std::string join_rotation(const VertexId& v, const std::vector<EdgeId>& order) {
  std::string out = "rot " + v;
  for (auto e : order) out += " " + to_string(e);
  return out + "\n";
}

}  // namespace

AdditiveNetwork parse_network(const std::string& text) {
  const auto lines = tokenize(text);
  Declarations decl;
  std::vector<const Line*> edge_lines;
  std::vector<const Line*> terminal_lines;
  std::vector<const Line*> rotation_lines;
  for (const auto& line : lines) {
    const auto& kind = line.at(0).text;
    if (kind == "v") {
      decl.vertex(line);
    } else if (kind == "e") {
      line.expect_count(7);
      decl.edge(line, edge_id_at(line, 1));
      edge_lines.push_back(&line);
    } else if (kind == "source" || kind == "sink") {
      line.expect_count(2);
      terminal_lines.push_back(&line);
    } else if (kind == "rot") {
      line.expect_at_least(2);
      rotation_lines.push_back(&line);
    } else {
      line.fail(0, "unknown record '" + kind + "'");
    }
  }

  std::vector<VertexId> vertices;
  for (const auto& [v, _] : decl.vertex_lines) vertices.push_back(v);
  std::vector<DirectedEdge> edges;
  for (const Line* line : edge_lines) {
    decl.require_vertex(*line, 2);
    decl.require_vertex(*line, 3);
    const Rational capacity = rational_at(*line, 4);
    if (capacity.sign() < 0) line->fail(4, "negative capacity");
    edges.push_back({edge_id_at(*line, 1), line->at(2).text, line->at(3).text, capacity, rational_at(*line, 5),
                     rational_at(*line, 6)});
  }
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  std::set<VertexId> seen_sources;
  std::set<VertexId> seen_sinks;
  for (const Line* line : terminal_lines) {
    decl.require_vertex(*line, 1);
    const bool source = line->at(0).text == "source";
    auto& seen = source ? seen_sources : seen_sinks;
    if (!seen.insert(line->at(1).text).second) line->fail(1, "duplicate " + line->at(0).text);
    (source ? sources : sinks).push_back(line->at(1).text);
  }
  std::optional<Rotation> rotation;
  for (const Line* line : rotation_lines) {
    decl.require_vertex(*line, 1);
    if (!rotation) rotation.emplace();
    if (rotation->contains(line->at(1).text)) line->fail(1, "duplicate rotation for '" + line->at(1).text + "'");
    auto& order = (*rotation)[line->at(1).text];
    for (std::size_t i = 2; i < line->tokens.size(); ++i) {
      const auto id = edge_id_at(*line, i);
      if (!decl.edge_lines.contains(id)) line->fail(i, "unknown edge " + to_string(id));
      order.push_back(id);
    }
  }
  return construct([&] {
    return AdditiveNetwork(std::move(vertices), std::move(edges), std::move(sources), std::move(sinks),
                           std::move(rotation));
  });
}

std::string serialize_network(const AdditiveNetwork& network) {
  std::ostringstream out;
  for (const auto& v : network.vertices()) out << "v " << v << "\n";
  for (const auto& e : network.edges())
    out << "e " << e.id << " " << e.tail << " " << e.head << " " << e.capacity.str() << " " << e.cost.str() << " "
        << e.gain.str() << "\n";
  for (const auto& v : network.sources()) out << "source " << v << "\n";
  for (const auto& v : network.sinks()) out << "sink " << v << "\n";
  if (network.rotation())
    for (const auto& [v, order] : *network.rotation()) out << join_rotation(v, order);
  return out.str();
}

PaftInstance parse_paft(const std::string& text) {
  const auto lines = tokenize(text);
  Declarations decl;
  std::vector<const Line*> edge_lines;
  std::vector<const Line*> forbid_lines;
  std::vector<const Line*> rotation_lines;
  const Line* s_line = nullptr;
  const Line* t_line = nullptr;
  for (const auto& line : lines) {
    const auto& kind = line.at(0).text;
    if (kind == "v") {
      decl.vertex(line);
    } else if (kind == "ue") {
      line.expect_count(4);
      decl.edge(line, edge_id_at(line, 1));
      edge_lines.push_back(&line);
    } else if (kind == "forbid") {
      line.expect_count(3);
      forbid_lines.push_back(&line);
    } else if (kind == "s" || kind == "t") {
      line.expect_count(2);
      auto& slot = kind == "s" ? s_line : t_line;
      if (slot) line.fail(0, "duplicate '" + kind + "' record");
      slot = &line;
    } else if (kind == "rot") {
      line.expect_at_least(2);
      rotation_lines.push_back(&line);
    } else {
      line.fail(0, "unknown record '" + kind + "'");
    }
  }
  if (!s_line) throw ParseError(0, 0, "missing 's' record");
  if (!t_line) throw ParseError(0, 0, "missing 't' record");
  decl.require_vertex(*s_line, 1);
  decl.require_vertex(*t_line, 1);

  std::vector<VertexId> vertices;
  for (const auto& [v, _] : decl.vertex_lines) vertices.push_back(v);
  std::map<EdgeId, UndirectedEdge> edges;
  for (const Line* line : edge_lines) {
    decl.require_vertex(*line, 2);
    decl.require_vertex(*line, 3);
    if (line->at(2).text == line->at(3).text) line->fail(3, "self-loop");
    const auto id = edge_id_at(*line, 1);
    edges.emplace(id, UndirectedEdge{id, line->at(2).text, line->at(3).text});
  }
  std::vector<Transition> forbidden;
  std::set<Transition> seen;
  for (const Line* line : forbid_lines) {
    const auto a = edge_id_at(*line, 1);
    const auto b = edge_id_at(*line, 2);
    if (!edges.contains(a)) line->fail(1, "unknown edge " + to_string(a));
    if (!edges.contains(b)) line->fail(2, "unknown edge " + to_string(b));
    if (a == b) line->fail(2, "forbidden pair repeats edge " + to_string(a));
    const auto& x = edges.at(a);
    const auto& y = edges.at(b);
    const int shared = (y.touches(x.a) ? 1 : 0) + (y.touches(x.b) ? 1 : 0);
    if (shared != 1) line->fail(1, "edges " + to_string(a) + " and " + to_string(b) + " do not share exactly one vertex");
    if (!seen.insert(Transition(a, b)).second) line->fail(1, "duplicate forbidden pair");
    forbidden.emplace_back(a, b);
  }
  std::optional<Rotation> rotation;
  for (const Line* line : rotation_lines) {
    decl.require_vertex(*line, 1);
    if (!rotation) rotation.emplace();
    if (rotation->contains(line->at(1).text)) line->fail(1, "duplicate rotation for '" + line->at(1).text + "'");
    auto& order = (*rotation)[line->at(1).text];
    for (std::size_t i = 2; i < line->tokens.size(); ++i) {
      const auto id = edge_id_at(*line, i);
      if (!edges.contains(id)) line->fail(i, "unknown edge " + to_string(id));
      order.push_back(id);
    }
  }
  std::vector<UndirectedEdge> edge_list;
  for (auto& [_, e] : edges) edge_list.push_back(e);
  return construct([&] {
    return PaftInstance(std::move(vertices), std::move(edge_list), std::move(forbidden), s_line->at(1).text,
                        t_line->at(1).text, std::move(rotation));
  });
}

std::string serialize_paft(const PaftInstance& instance) {
  std::ostringstream out;
  for (const auto& v : instance.vertices()) out << "v " << v << "\n";
  for (const auto& e : instance.edges()) out << "ue " << e.id << " " << e.a << " " << e.b << "\n";
  for (const auto& tr : instance.forbidden()) out << "forbid " << tr.first << " " << tr.second << "\n";
  out << "s " << instance.s() << "\n";
  out << "t " << instance.t() << "\n";
  if (instance.rotation())
    for (const auto& [v, order] : *instance.rotation()) out << join_rotation(v, order);
  return out.str();
}

CnfFormula parse_cnf(const std::string& text) {
  const auto lines = tokenize(text, true);
  std::optional<long long> variables;
  long long declared_clauses = 0;
  std::vector<Clause> clauses;
  for (const auto& line : lines) {
    if (line.at(0).text == "p") {
      if (variables) line.fail(0, "duplicate header");
      line.expect_count(4);
      if (line.at(1).text != "cnf3") line.fail(1, "expected format 'cnf3'");
      variables = integer_at(line, 2);
      declared_clauses = integer_at(line, 3);
      if (*variables < 0 || *variables > 1'000'000) line.fail(2, "variable count out of range");
      if (declared_clauses < 0) line.fail(3, "negative clause count");
      continue;
    }
    if (!variables) line.fail(0, "clause before the 'p cnf3' header");
    if (line.tokens.size() != 4) line.fail(std::min<std::size_t>(3, line.tokens.size() - 1), "clause needs exactly 3 literals and a terminating 0");
    if (integer_at(line, 3) != 0) line.fail(3, "clause must end with 0");
    Clause clause{};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto literal = integer_at(line, i);
      if (literal == 0) line.fail(i, "clause needs exactly 3 literals");
      if (literal > *variables || -literal > *variables) line.fail(i, "literal outside the declared variables");
      clause[i] = static_cast<Literal>(literal);
    }
    const auto v = [&](std::size_t i) { return clause[i] < 0 ? -clause[i] : clause[i]; };
    if (v(0) == v(1) || v(0) == v(2) || v(1) == v(2)) line.fail(0, "clause repeats a variable");
    clauses.push_back(clause);
  }
  if (!variables) throw ParseError(0, 0, "missing 'p cnf3' header");
  if (static_cast<long long>(clauses.size()) != declared_clauses)
    throw ParseError(0, 0, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                               std::to_string(clauses.size()));
  return construct([&] { return CnfFormula(static_cast<int>(*variables), std::move(clauses)); });
}

std::string serialize_cnf(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf3 " << formula.variable_count() << " " << formula.clauses().size() << "\n";
  for (const auto& c : formula.clauses()) out << c[0] << " " << c[1] << " " << c[2] << " 0\n";
  return out.str();
}

GeneralFlow parse_flow(const std::string& text) {
  std::map<EdgeId, Rational> values;
  for (const auto& line : tokenize(text)) {
    if (line.at(0).text != "f") line.fail(0, "unknown record '" + line.at(0).text + "'");
    line.expect_count(3);
    const auto id = edge_id_at(line, 1);
    const auto value = rational_at(line, 2);
    if (value.sign() < 0) line.fail(2, "negative flow");
    if (!values.emplace(id, value).second) line.fail(1, "duplicate flow for edge " + to_string(id));
  }
  GeneralFlow flow;
  for (const auto& [id, value] : values) flow.set(id, value);
  return flow;
}

std::string serialize_flow(const GeneralFlow& flow) {
  std::ostringstream out;
  for (const auto& [id, value] : flow.assignment()) out << "f " << id << " " << value.str() << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace gainflow
