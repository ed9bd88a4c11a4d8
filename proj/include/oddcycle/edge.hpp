#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace oddcycle {

using Vertex = int;
using EdgeId = int;

/// Number of edges of K_n.
constexpr int edge_count(int n) { return n * (n - 1) / 2; }

/// Lexicographic index of the pair {u, v}, u < v, among all pairs of [0, n).
/// Throws ArgumentError when the pair is out of range or u >= v.
EdgeId edge_index(Vertex u, Vertex v, int n);

/// Same as edge_index but accepts either endpoint order and does not validate.
inline EdgeId edge_between(Vertex a, Vertex b, int n) {
  if (a > b) std::swap(a, b);
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

/// Inverse of edge_index.
std::pair<Vertex, Vertex> edge_endpoints(EdgeId id, int n);

/// Precomputed endpoint table for repeated lookups on a fixed n.
class EdgeTable {
 public:
  explicit EdgeTable(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(ends_.size()); }
  std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return ends_[e]; }
  EdgeId index(Vertex a, Vertex b) const { return edge_between(a, b, n_); }

 private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> ends_;
};

}  // namespace oddcycle
