#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "oddcycle/edge.hpp"

namespace oddcycle {

using Rational = boost::rational<long long>;

// ---------------------------------------------------------------------------
// Labelled graphs (G, v_0, A_0, ..., v_s, A_s) and the extremal problem over them.
//
// Vertices of [n] split into hubs v_0..v_s, sets A_0..A_s and the rest R.
// Required edges: inside the hubs, inside A_0 u ... u A_s, hubs to R, and v_i
// to A_j for i < j. Every vertex of R is either joined to all of [n] \ R or
// has at least |R| - b - 1 neighbours inside R.

// Shape of a minimal member: only the sizes matter. R splits into R1 (joined
// to all of [n] \ R) and R2 (meets the degree condition inside R).
struct GnbStructure {
  int s = 0;
  std::vector<int> a;  // |A_0| .. |A_s|
  int r1 = 0;
  int r2 = 0;

  int a_total() const;
  int r() const { return r1 + r2; }
  /// Denominator of f: |A_0| + ... + |A_s| + s.
  int weight() const { return a_total() + s; }
  bool operator==(const GnbStructure&) const = default;
};

/// Throws ArgumentError unless the sizes describe a partition of [n].
void validate_structure(const GnbStructure& g, int n);

/// Fewest edges inside R when p = |R2| vertices need degree >= d inside R and
/// the other |R| - p vertices of R may serve as neighbours.
long long r2_block_edges(int p, int d);

/// Minimal e(G) over members with this shape.
long long min_edges(const GnbStructure& g, int n, int b);

/// min_edges / weight, exact.
Rational f_value(const GnbStructure& g, int n, int b);

/// Graph on p vertices with every degree >= d and exactly r2_block_edges(p, d)
/// edges, for 0 < d <= p - 1.
std::vector<std::pair<Vertex, Vertex>> realize_r2_block(int p, int d);

struct GnbLabels {
  std::vector<Vertex> hubs;               // v_0 .. v_s
  std::vector<std::vector<Vertex>> sets;  // A_0 .. A_s
};

struct LabeledGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  GnbLabels labels;
};

/// An explicit member with min_edges(g, n, b) edges. Vertex order: hubs,
/// A_0..A_s, R1, R2.
LabeledGraph build_min_gnb(const GnbStructure& g, int n, int b);

struct Membership {
  bool member = true;
  std::string clause;  // "a" .. "d" when not a member
  std::string detail;
};

Membership gnb_membership(int n, int b, std::span<const std::pair<Vertex, Vertex>> edges,
                          const GnbLabels& labels);

// ---------------------------------------------------------------------------
// Exhaustive minimisation of f over all shapes.

inline constexpr int kMinimizeMaxN = 15;

struct MinimizeResult {
  Rational m;
  std::vector<GnbStructure> argmins;  // every minimiser, in enumeration order
  long long structures = 0;
  bool operator==(const MinimizeResult&) const = default;
};

/// Parallel over s with an ordered reduction; equal to minimize_f_serial.
/// Throws CapacityError for n > kMinimizeMaxN and ArgumentError for b < 1 or n < 3.
MinimizeResult minimize_f(int n, int b);
MinimizeResult minimize_f_serial(int n, int b);

struct ClaimCheck {
  bool singletons = true;  // |A_j| = 1 for j >= 1
  bool a0_window = true;   // |R2| + s <= |A_0| <= |R2| + s + 3 when s >= 1
};
ClaimCheck check_claims(const GnbStructure& g);

// ---------------------------------------------------------------------------
// Continuous case table.

struct CaseValue {
  std::string name;
  double stated = 0;      // closed form
  double numeric = 0;     // same quantity from 1-D search
  double location = 0;    // rho (or alpha) where it is attained
  double true_min = 0;    // minimum of the case bound itself, from 1-D search
  double true_min_closed = 0;
  std::string note;
};

struct CaseTable {
  std::vector<CaseValue> cases;
  double overall_stated = 0;
  double overall_numeric = 0;
  double prior_lower = 0;  // 1 - 1/sqrt(2)
  double prior_upper = 0;  // 1 / (4 ln 2)
};

CaseTable continuous_case_minimum();

// ---------------------------------------------------------------------------
// Breaker-side inequality audit.

struct AuditLine {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  std::string relation;  // how lhs must compare to rhs
  bool holds = false;
  bool flagged = false;
  std::string note;
};

struct AuditReport {
  double eps = 0;
  std::optional<int> n;
  std::vector<AuditLine> lines;
};

/// floor((eps n^2 - n) / 2) with eps read as a decimal of at most six places.
long long saved_edge_bound(int n, double eps);

/// Leading-order lines always; finite-n lines as well when n is given.
AuditReport breaker_constant_audit(double eps, std::optional<int> n = std::nullopt);

// ---------------------------------------------------------------------------
// Reports.

nlohmann::json structure_to_json(const GnbStructure& g);
nlohmann::json case_table_to_json(const CaseTable& t);
nlohmann::json audit_to_json(const AuditReport& r);
std::string render_case_table(const CaseTable& t);
std::string render_audit(const AuditReport& r);

}  // namespace oddcycle
