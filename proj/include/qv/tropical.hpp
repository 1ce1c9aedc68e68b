#pragma once

// Valuation-level model of representations over a discrete valuation ring.
//
// A representation is reduced to one integer per arrow: the valuation of its
// scalar entry, with infinity standing for a zero arrow.  Path valuations
// add, so "the path is integral" means valuation >= 0 and "invertible" means
// valuation exactly 0.  Diagonal gauge moves shift arrow valuations by the
// difference of their endpoint exponents and leave every cycle untouched.
//
// On this model the integral point search runs the hub-by-hub expansion
// procedure: grow a set from x, then from y (evicting vertices the second
// hub claims), then repair the x side until it covers a member of the given
// family.  Each expansion step gauges the current set so that some boundary
// arrow becomes invertible and absorbs its target.  The search never trusts
// the per-step guarantees: every step's claims are re-verified from scratch
// and recorded, and success is declared only after a full audit of the end
// state (all arrows integral, invertible paths from the hubs to their
// claimed spokes, both claimed sets in their families).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qv/antichain.hpp"
#include "qv/patterns.hpp"
#include "qv/quiver.hpp"

namespace qv {

struct TropicalRep {
  DoubleQuiver dq;
  std::vector<std::optional<std::int64_t>> val;  // per arrow; nullopt = zero arrow

  ArrowMask support() const;
};

TropicalRep make_tropical_rep(const DoubleQuiver& dq,
                              std::vector<std::optional<std::int64_t>> vals);

// Per-vertex exponents acting by val(u -> v) += g(v) - g(u).
struct GaugeShift {
  std::vector<std::int64_t> exponent;
};

TropicalRep apply_gauge(const TropicalRep& r, const GaugeShift& g);

bool has_nonnegative_cycles(const TropicalRep& r);

// Minimum valuation over all paths u -> v; nullopt when no nonzero path
// exists.  The empty path makes path_valuation(v, v) at most 0.
std::optional<std::int64_t> path_valuation(const TropicalRep& r, int u, int v);

// One expansion move: gauge the subset so its cheapest outgoing arrow
// becomes invertible, then absorb that arrow's target (smallest target in
// canonical order among invertible boundary arrows).  The two claims of the
// underlying lemma are re-verified on the result and reported, not assumed;
// they can fail transiently on inputs the full search later repairs.
struct ExpandStep {
  std::int64_t shift = 0;       // applied to every vertex of the subset
  int entered = -1;             // the absorbed vertex
  TropicalRep rep;
  bool post_paths_ok = false;   // all paths starting in subset + entered are >= 0
  bool zero_path_ok = false;    // some invertible path from the subset to entered
};

ExpandStep expand_step(const TropicalRep& r, VertexMask subset);

struct SearchStep {
  char phase = '?';             // 'x' grow from x, 'y' grow from y, 'r' repair
  VertexMask subset = 0;        // expanded set, before the step
  std::int64_t shift = 0;
  int entered = -1;
  bool pre_paths_ok = false;    // paths starting in the subset were >= 0 going in
  bool post_paths_ok = false;
  bool zero_path_ok = false;
};

// End state of the search.  x_side and y_side are spoke position masks; on
// success the gauged rep has every arrow valuation >= 0, invertible paths
// from x to each x_side spoke and from y to each y_side spoke, and the two
// sides lie in the respective families.
struct SearchOutcome {
  bool success = false;
  GaugeShift gauge;             // accumulated over all steps
  VertexMask x_side = 0;
  VertexMask y_side = 0;
  TropicalRep rep;
  std::vector<SearchStep> trace;
  std::string failure;          // first failed audit check, empty on success
};

SearchOutcome integral_point_search(const TropicalRep& r, const Antichain& ifam,
                                    const Antichain& jfam, int x, int y);

}  // namespace qv
