#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "oddcycle/edge.hpp"

namespace oddcycle {

// Union-find where every node stores the parity of its path to its parent.
// Two vertices of one component lie on the same side of the component's
// 2-colouring iff their parities to the root are equal.
class ParityForest {
 public:
  ParityForest() = default;
  explicit ParityForest(int n) : parent_(n), rank_(n, 0), parity_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  // Root of v together with the parity of the v -> root path. Const, so no
  // path compression here; union by rank keeps depth logarithmic.
  std::pair<Vertex, int> find(Vertex v) const {
    int p = 0;
    while (parent_[v] != v) {
      p ^= parity_[v];
      v = parent_[v];
    }
    return {v, p};
  }

  bool connected(Vertex a, Vertex b) const { return find(a).first == find(b).first; }

  // Adding edge ab creates an odd cycle.
  bool closes_odd_cycle(Vertex a, Vertex b) const {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    return ra == rb && pa == pb;
  }

  // Joins a and b by an edge (they must receive different colours). Returns
  // false if they were already in the same component.
  bool unite(Vertex a, Vertex b) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = static_cast<std::uint8_t>(pa ^ pb ^ 1);
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint8_t> parity_;
};

}  // namespace oddcycle
