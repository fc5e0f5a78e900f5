#include "gainflow/shortest_path.hpp"

#include <vector>

#include "gainflow/threshold.hpp"

namespace gainflow {
namespace {

class PathSearch {
 public:
  PathSearch(const AdditiveNetwork& network, std::size_t target, const Rational& seed)
      : network_(network), target_(target), seed_(seed), visited_(network.vertex_count(), false) {}

  std::optional<ShortestPathResult> run(std::size_t source) {
    visited_[source] = true;
    extend(source, seed_, Rational());
    if (!best_cost_) return std::nullopt;
    ShortestPathResult result{{}, seed_, *best_cost_};
    for (auto i : best_path_) result.path.edges.push_back(network_.edges()[i].id);
    return result;
  }

 private:
  void extend(std::size_t vertex, const Rational& entering, const Rational& cost) {
    const auto edges = network_.edges();
    for (auto i : network_.out_edges(vertex)) {
      const auto& e = edges[i];
      if (entering > e.capacity) continue;
      Rational arriving = entering + e.gain;
      if (arriving.sign() <= 0) continue;
      const auto head = network_.vertex_index(e.head);
      if (visited_[head]) continue;
      Rational next_cost = cost + e.cost * entering;
      stack_.push_back(i);
      if (head == target_) {
        if (!best_cost_ || next_cost < *best_cost_) {
          best_cost_ = std::move(next_cost);
          best_path_ = stack_;
        }
      } else {
        visited_[head] = true;
        extend(head, arriving, next_cost);
        visited_[head] = false;
      }
      stack_.pop_back();
    }
  }

  const AdditiveNetwork& network_;
  std::size_t target_;
  Rational seed_;
  std::vector<bool> visited_;
  std::vector<std::size_t> stack_;
  std::vector<std::size_t> best_path_;
  std::optional<Rational> best_cost_;
};

}  // namespace

std::optional<ShortestPathResult> shortest_path(const AdditiveNetwork& network, const VertexId& s, const VertexId& t,
                                                const Rational& seed) {
  if (seed.sign() <= 0) throw NetworkError("seed flow must be positive");
  const auto source = network.vertex_index(s);
  const auto target = network.vertex_index(t);
  if (source == target) throw NetworkError("source and target coincide");
  return PathSearch(network, target, seed).run(source);
}

ThresholdSeededPath shortest_path_from_threshold(const AdditiveNetwork& network, const VertexId& s,
                                                 const VertexId& t) {
  ThresholdSeededPath out;
  const auto table = threshold_table(network, t);
  out.threshold = table.at(s);
  if (!out.threshold) {
    out.status = ThresholdSeededPath::Status::Unreachable;
    return out;
  }
  if (*out.threshold >= Rational(1)) {
    out.status = ThresholdSeededPath::Status::ThresholdTooHigh;
    return out;
  }
  out.result = shortest_path(network, s, t, Rational(1));
  out.status = out.result ? ThresholdSeededPath::Status::Solved : ThresholdSeededPath::Status::NoFeasiblePath;
  return out;
}

}  // namespace gainflow
