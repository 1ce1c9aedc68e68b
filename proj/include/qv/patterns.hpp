#pragma once

// Support patterns of representations of a double quiver and the open sets
// cut out by them.
//
// Only which arrows are nonzero matters here.  With an all-ones dimension
// vector a path is nonzero exactly when all of its arrows are, subspaces of
// a semistability-test subrepresentation are determined by their support,
// and King's criterion becomes purely combinatorial: a pattern is semistable
// iff no out-closed vertex subset has positive stability weight.
//
// Patterns are arrow bitmasks over a DoubleQuiver (at most 64 arrows);
// vertex subsets are bitmasks (at most 20 vertices).

#include <cstdint>
#include <vector>

#include "qv/antichain.hpp"
#include "qv/classifier.hpp"
#include "qv/quiver.hpp"

namespace qv {

using VertexMask = std::uint32_t;
using ArrowMask = std::uint64_t;

// Parses labels of the form "src>tgt" (base arrow) and "src>tgt*" (reversed
// partner); each label flags the first not-yet-flagged arrow it matches, so
// parallel arrows can be listed repeatedly.
ArrowMask pattern_from_labels(const DoubleQuiver& dq, const std::vector<std::string>& labels);

// Vertices with a nonzero path from v (v itself included: empty path).
VertexMask reachable_from(const DoubleQuiver& dq, ArrowMask pattern, int v);

// Smallest superset of seed closed under nonzero out-arrows.
VertexMask out_closure(const DoubleQuiver& dq, ArrowMask pattern, VertexMask seed);

// Precomputed King test for one (theta, alpha = all ones): keeps, for every
// vertex subset with positive weight, the mask of arrows leaving it.  A
// pattern is semistable iff each such subset leaks through a nonzero arrow.
struct KingTester {
  std::vector<ArrowMask> positive_crossings;
  std::vector<ArrowMask> flat_crossings;  // weight-zero nontrivial subsets

  bool semistable(ArrowMask pattern) const {
    for (ArrowMask c : positive_crossings)
      if ((pattern & c) == 0) return false;
    return true;
  }
  bool stable(ArrowMask pattern) const {
    if (!semistable(pattern)) return false;
    for (ArrowMask c : flat_crossings)
      if ((pattern & c) == 0) return false;
    return true;
  }
};

KingTester make_king_tester(const DoubleQuiver& dq, const Stability& theta,
                            const DimVector& alpha);

bool is_semistable(const DoubleQuiver& dq, ArrowMask pattern, const Stability& theta,
                   const DimVector& alpha);
bool is_stable(const DoubleQuiver& dq, ArrowMask pattern, const Stability& theta,
               const DimVector& alpha);

// Two hubs, every base arrow from a hub to a spoke.
struct StarShape {
  int x = 0, y = 0;
  std::vector<int> spokes;  // ascending canonical order; spoke bit = position

  VertexMask spoke_mask(VertexMask vertices) const;  // restrict to spoke bits
};

StarShape star_shape(const Quiver& q, int x, int y);

// Instability broken down as in the hub/spoke characterization: a spoke is
// dead when every arrow into it vanishes; a hub is starved when the spokes
// it reaches weigh less than the hub does.  Requires equal negative weights
// on the spokes and positive weights on the hubs; then the pattern is
// unstable iff some spoke is dead or some hub is starved.
struct InstabilityReport {
  bool semistable = true;
  std::vector<int> dead_spokes;          // canonical vertex indices
  bool starved_x = false, starved_y = false;
};

InstabilityReport instability_report(const DoubleQuiver& dq, ArrowMask pattern,
                                     const Stability& theta, int x, int y);

// Membership in the open set labeled by a sign function, arrow-level form:
// semistable, and for each class a nonzero arrow crosses from the support of
// beta to the support of alpha - beta ('+') or back ('-').
struct SignLocusTester {
  KingTester king;
  std::vector<ArrowMask> forward, backward;  // per class

  bool contains(ArrowMask pattern, const SignFunction& s) const {
    if (!king.semistable(pattern)) return false;
    for (int i = 0; i < s.size; ++i)
      if ((pattern & (s.sign(i) > 0 ? forward[i] : backward[i])) == 0) return false;
    return true;
  }
};

SignLocusTester make_sign_locus_tester(const DoubleQuiver& dq, const LeafSet& leaves);

bool in_sign_locus(const DoubleQuiver& dq, ArrowMask pattern, const LeafSet& leaves,
                   const SignFunction& s);

// Path-level form on a two-hub star: a union over classes beta_I of the
// conditions "x reaches all of I, y reaches all of the complementary spokes,
// and the sign points a hub across".  Equivalent to the arrow-level form;
// the equivalence is exercised exhaustively in the tests.
struct PathLocusTester {
  StarShape shape;
  std::vector<VertexMask> spoke_sets;  // per class, mask over spoke positions

  bool contains(const DoubleQuiver& dq, ArrowMask pattern, const SignFunction& s) const;
};

PathLocusTester make_path_locus_tester(const DoubleQuiver& dq, const LeafSet& leaves,
                                       int y);

bool in_sign_locus_by_paths(const DoubleQuiver& dq, ArrowMask pattern, const LeafSet& leaves,
                            const SignFunction& s, int y);

// The good locus attached to a pair of mutually blocking families on the
// spokes: x reaches some member of ifam, y reaches some member of jfam, and
// together they reach every spoke.
bool in_good_locus(const DoubleQuiver& dq, ArrowMask pattern, const StarShape& shape,
                   const Antichain& ifam, const Antichain& jfam);

// The patterns used to pin down stability parameters on the good locus:
// for I in ifam, x feeds exactly I while y feeds everything; for J in jfam,
// x feeds everything while y feeds exactly J.  Reversed arrows stay zero.
std::vector<ArrowMask> star_witness_patterns(const DoubleQuiver& dq, const StarShape& shape,
                                             const Antichain& ifam, const Antichain& jfam);

// Closed cone of stability parameters for which the pattern is semistable:
// theta . alpha = 0 and theta . e_S <= 0 for every nontrivial out-closed S.
struct OrbitCone {
  std::vector<VertexMask> normals;  // the out-closed subsets
};

OrbitCone orbit_cone(const DoubleQuiver& dq, ArrowMask pattern, const DimVector& alpha);

bool cone_contains(const OrbitCone& cone, const Stability& theta, const DimVector& alpha);

// Intersection of the orbit cones of several patterns, with an exact
// decision whether it is the zero cone (checked coordinate by coordinate
// with the rational LP).
struct CommonStabilityCone {
  std::vector<VertexMask> normals;
  bool zero_only = false;
};

CommonStabilityCone common_stability_cone(const DoubleQuiver& dq,
                                          const std::vector<ArrowMask>& patterns,
                                          const DimVector& alpha);

}  // namespace qv
