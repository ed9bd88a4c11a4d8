#include <algorithm>
#include <numeric>
#include <string>

#include "oddcycle/errors.hpp"
#include "oddcycle/optimizer.hpp"

namespace oddcycle {

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

int GnbStructure::a_total() const { return std::accumulate(a.begin(), a.end(), 0); }

void validate_structure(const GnbStructure& g, int n) {
  if (g.s < 0) throw ArgumentError("structure: s must be >= 0");
  if (static_cast<int>(g.a.size()) != g.s + 1)
    throw ArgumentError("structure: expected " + std::to_string(g.s + 1) + " set sizes, got " +
                        std::to_string(g.a.size()));
  for (int x : g.a)
    if (x < 1) throw ArgumentError("structure: every |A_i| must be >= 1");
  if (g.r1 < 0 || g.r2 < 0) throw ArgumentError("structure: negative |R1| or |R2|");
  if (g.s + 1 + g.a_total() + g.r() != n)
    throw ArgumentError("structure: sizes add up to " +
                        std::to_string(g.s + 1 + g.a_total() + g.r()) + ", not n=" +
                        std::to_string(n));
}

long long r2_block_edges(int p, int d) {
  if (p <= 0 || d <= 0) return 0;
  if (d <= p - 1) return (static_cast<long long>(p) * d + 1) / 2;
  return choose2(p) + static_cast<long long>(p) * (d - p + 1);
}

long long min_edges(const GnbStructure& g, int n, int b) {
  validate_structure(g, n);
  if (b < 0) throw ArgumentError("min_edges: b must be >= 0");
  const long long at = g.a_total();
  const long long r = g.r();
  long long e = choose2(g.s + 1) + choose2(at) + (g.s + 1) * r;
  for (int j = 1; j <= g.s; ++j) e += static_cast<long long>(j) * g.a[j];
  e += g.r1 * at;
  e += r2_block_edges(g.r2, static_cast<int>(r) - b - 1);
  return e;
}

Rational f_value(const GnbStructure& g, int n, int b) {
  return Rational(min_edges(g, n, b), g.weight());
}

std::vector<std::pair<Vertex, Vertex>> realize_r2_block(int p, int d) {
  if (d <= 0 || d > p - 1) throw ArgumentError("realize_r2_block: need 0 < d <= p - 1");
  std::vector<std::pair<Vertex, Vertex>> out;
  auto add = [&](int x, int y) { out.emplace_back(std::min(x, y), std::max(x, y)); };
  // Circulant with offsets 1..floor(d/2) gives degree 2 floor(d/2).
  for (int k = 1; k <= d / 2; ++k)
    for (int i = 0; i < p; ++i) add(i, (i + k) % p);
  if (d % 2 == 1) {
    if (p % 2 == 0) {
      for (int i = 0; i < p / 2; ++i) add(i, i + p / 2);
    } else {
      // (p+1)/2 chords of length (p-1)/2 cover every vertex, one twice.
      const int h = (p - 1) / 2;
      for (int i = 0; i <= h; ++i) add(i, i + h);
    }
  }
  return out;
}

LabeledGraph build_min_gnb(const GnbStructure& g, int n, int b) {
  validate_structure(g, n);
  LabeledGraph out;
  out.n = n;
  Vertex next = 0;
  for (int i = 0; i <= g.s; ++i) out.labels.hubs.push_back(next++);
  std::vector<Vertex> a_union;
  for (int i = 0; i <= g.s; ++i) {
    out.labels.sets.emplace_back();
    for (int k = 0; k < g.a[i]; ++k) {
      out.labels.sets.back().push_back(next);
      a_union.push_back(next++);
    }
  }
  std::vector<Vertex> r1, r2;
  for (int k = 0; k < g.r1; ++k) r1.push_back(next++);
  for (int k = 0; k < g.r2; ++k) r2.push_back(next++);

  auto& e = out.edges;
  const auto& hubs = out.labels.hubs;
  for (std::size_t i = 0; i < hubs.size(); ++i)
    for (std::size_t j = i + 1; j < hubs.size(); ++j) e.emplace_back(hubs[i], hubs[j]);
  for (std::size_t i = 0; i < a_union.size(); ++i)
    for (std::size_t j = i + 1; j < a_union.size(); ++j) e.emplace_back(a_union[i], a_union[j]);
  for (Vertex h : hubs) {
    for (Vertex x : r1) e.emplace_back(h, x);
    for (Vertex x : r2) e.emplace_back(h, x);
  }
  for (int i = 0; i <= g.s; ++i)
    for (int j = i + 1; j <= g.s; ++j)
      for (Vertex x : out.labels.sets[j]) e.emplace_back(hubs[i], x);
  for (Vertex x : r1)
    for (Vertex y : a_union) e.emplace_back(std::min(x, y), std::max(x, y));

  const int p = g.r2;
  const int d = g.r() - b - 1;
  if (p > 0 && d > 0) {
    if (d <= p - 1) {
      for (auto [x, y] : realize_r2_block(p, d)) e.emplace_back(r2[x], r2[y]);
    } else {
      if (g.r1 < d - p + 1) throw ArgumentError("build_min_gnb: R1 too small for the R2 degrees");
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) e.emplace_back(r2[i], r2[j]);
      for (Vertex x : r2)
        for (int k = 0; k < d - p + 1; ++k) e.emplace_back(r1[k], x);
    }
  }
  return out;
}

Membership gnb_membership(int n, int b, std::span<const std::pair<Vertex, Vertex>> edges,
                          const GnbLabels& labels) {
  auto fail = [](std::string clause, std::string detail) {
    return Membership{false, std::move(clause), std::move(detail)};
  };
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };

  // (a) distinct hubs.
  std::vector<int> role(n, 0);  // 0 = R, 1 = hub, 2 + i = A_i
  if (labels.hubs.empty()) return fail("a", "no hubs");
  for (Vertex v : labels.hubs) {
    if (!in_range(v)) return fail("a", "hub " + std::to_string(v) + " out of range");
    if (role[v] != 0) return fail("a", "hub " + std::to_string(v) + " repeated");
    role[v] = 1;
  }
  // (b) non-empty, pairwise disjoint sets avoiding the hubs.
  if (labels.sets.size() != labels.hubs.size())
    return fail("b", "need one set per hub");
  for (std::size_t i = 0; i < labels.sets.size(); ++i) {
    if (labels.sets[i].empty()) return fail("b", "A_" + std::to_string(i) + " is empty");
    for (Vertex v : labels.sets[i]) {
      if (!in_range(v)) return fail("b", "vertex " + std::to_string(v) + " out of range");
      if (role[v] != 0)
        return fail("b", "vertex " + std::to_string(v) + " is a hub or lies in two sets");
      role[v] = 2 + static_cast<int>(i);
    }
  }

  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (auto [x, y] : edges) {
    if (!in_range(x) || !in_range(y) || x == y) continue;
    adj[x * n + y] = adj[y * n + x] = 1;
  }
  auto has = [&](Vertex x, Vertex y) { return adj[x * n + y] != 0; };
  auto missing = [](Vertex x, Vertex y, const char* what) {
    return "edge " + std::to_string(x) + "-" + std::to_string(y) + " " + what + " is missing";
  };

  // (c) required edges.
  std::vector<Vertex> r;
  for (Vertex v = 0; v < n; ++v)
    if (role[v] == 0) r.push_back(v);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const int rx = role[x], ry = role[y];
      if (rx == 1 && ry == 1 && !has(x, y)) return fail("c", missing(x, y, "inside the hubs"));
      if (rx >= 2 && ry >= 2 && !has(x, y)) return fail("c", missing(x, y, "inside the sets"));
      if (((rx == 1 && ry == 0) || (rx == 0 && ry == 1)) && !has(x, y))
        return fail("c", missing(x, y, "between a hub and R"));
    }
  }
  for (std::size_t i = 0; i < labels.hubs.size(); ++i)
    for (std::size_t j = i + 1; j < labels.sets.size(); ++j)
      for (Vertex x : labels.sets[j])
        if (!has(labels.hubs[i], x))
          return fail("c", missing(labels.hubs[i], x, "from v_i to a later A_j"));

  // (d) every vertex of R is joined to all of [n] \ R or has enough neighbours in R.
  const int need = static_cast<int>(r.size()) - b - 1;
  for (Vertex v : r) {
    bool full = true;
    int deg_r = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (x == v) continue;
      if (role[x] != 0 && !has(v, x)) full = false;
      if (role[x] == 0 && has(v, x)) ++deg_r;
    }
    if (!full && deg_r < need)
      return fail("d", "vertex " + std::to_string(v) + " has " + std::to_string(deg_r) +
                           " neighbours in R, needs " + std::to_string(need));
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

struct Best {
  Rational m{0};
  bool set = false;
  std::vector<GnbStructure> argmins;
  long long structures = 0;

  void offer(const GnbStructure& g, const Rational& v) {
    ++structures;
    if (!set || v < m) {
      m = v;
      set = true;
      argmins.assign(1, g);
    } else if (v == m) {
      argmins.push_back(g);
    }
  }

  void merge(const Best& o) {
    structures += o.structures;
    if (!o.set) return;
    if (!set || o.m < m) {
      m = o.m;
      set = true;
      argmins = o.argmins;
    } else if (o.m == m) {
      argmins.insert(argmins.end(), o.argmins.begin(), o.argmins.end());
    }
  }
};

// Every shape with this s, in a fixed order: |A_0| ascending, then the
// composition of the other sets lexicographically, then |R1| ascending.
Best scan_s(int n, int b, int s) {
  Best best;
  GnbStructure g;
  g.s = s;
  g.a.assign(s + 1, 1);
  const int budget = n - (s + 1);  // vertices for the sets and R

  auto finish = [&](int used) {
    const int r = budget - used;
    for (int r1 = 0; r1 <= r; ++r1) {
      g.r1 = r1;
      g.r2 = r - r1;
      best.offer(g, f_value(g, n, b));
    }
  };
  // Fill a[j..s]; `used` counts vertices already placed in the sets.
  auto fill = [&](auto&& self, int j, int used) -> void {
    if (j > s) {
      finish(used);
      return;
    }
    const int later = s - j;  // each later set needs one vertex
    for (int x = 1; used + x + later <= budget; ++x) {
      g.a[j] = x;
      self(self, j + 1, used + x);
    }
  };
  fill(fill, 0, 0);
  return best;
}

void check_minimize_args(int n, int b) {
  if (n < 3) throw ArgumentError("minimize_f: n must be >= 3");
  if (b < 1) throw ArgumentError("minimize_f: b must be >= 1");
  if (n > kMinimizeMaxN)
    throw CapacityError("minimize_f: n=" + std::to_string(n) + " exceeds the enumeration guard " +
                        std::to_string(kMinimizeMaxN));
}

int max_s(int n) { return (n - 2) / 2; }  // s+1 hubs and s+1 non-empty sets

MinimizeResult to_result(const Best& b) { return {b.m, b.argmins, b.structures}; }

}  // namespace

MinimizeResult minimize_f_serial(int n, int b) {
  check_minimize_args(n, b);
  Best best;
  for (int s = 0; s <= max_s(n); ++s) best.merge(scan_s(n, b, s));
  return to_result(best);
}

MinimizeResult minimize_f(int n, int b) {
  check_minimize_args(n, b);
  const int top = max_s(n);
  std::vector<Best> per_s(top + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s <= top; ++s) per_s[s] = scan_s(n, b, s);
  Best best;
  for (const Best& part : per_s) best.merge(part);
  return to_result(best);
}

ClaimCheck check_claims(const GnbStructure& g) {
  ClaimCheck c;
  for (int j = 1; j <= g.s; ++j)
    if (g.a[j] != 1) c.singletons = false;
  if (g.s >= 1) c.a0_window = g.r2 + g.s <= g.a[0] && g.a[0] <= g.r2 + g.s + 3;
  return c;
}

}  // namespace oddcycle
