#include "oddcycle/edge.hpp"

#include <string>

#include "oddcycle/errors.hpp"

namespace oddcycle {

EdgeId edge_index(Vertex u, Vertex v, int n) {
  if (u < 0 || v >= n || u >= v) {
    throw ArgumentError("edge_index: need 0 <= u < v < n, got u=" + std::to_string(u) +
                        " v=" + std::to_string(v) + " n=" + std::to_string(n));
  }
  return edge_between(u, v, n);
}

std::pair<Vertex, Vertex> edge_endpoints(EdgeId id, int n) {
  if (id < 0 || id >= edge_count(n)) {
    throw ArgumentError("edge_endpoints: id " + std::to_string(id) + " out of range for n=" +
                        std::to_string(n));
  }
  // Row u holds n-1-u edges.
  Vertex u = 0;
  int row = n - 1;
  while (id >= row) {
    id -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + id};
}

EdgeTable::EdgeTable(int n) : n_(n) {
  ends_.reserve(edge_count(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) ends_.emplace_back(u, v);
}

}  // namespace oddcycle
