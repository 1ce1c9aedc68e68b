#pragma once

// Decomposition classes attached to the one-parameter leaves of the singular
// locus, and the local quivers at the corresponding degenerate points.
//
// For fixed (q, alpha, theta) with a distinguished vertex x of multiplicity
// one, the interesting decompositions alpha = beta + (alpha - beta) into two
// positive roots orthogonal to theta are normalized so that beta contains x.
// The number of arrows between the two vertices of the associated local
// quiver decides how many local resolutions exist: two when it exceeds 2,
// one otherwise.

#include <vector>

#include "qv/quiver.hpp"

namespace qv {

struct LeafSet {
  Quiver q;
  DimVector alpha;
  Stability theta;
  int x = 0;                       // distinguished vertex, canonical index
  std::vector<DimVector> classes;  // ascending lexicographic, each contains x
  std::vector<Int> multiplicity;   // arrow_multiplicity of each class
};

struct EnumerateOptions {
  bool require_two_resolutions = true;  // keep only classes with multiplicity > 2
  // Guard against accidental huge products of coordinate ranges.
  std::int64_t candidate_cap = 10'000'000;
};

// Number of arrows joining the two vertices of the local quiver of the
// decomposition {beta, alpha - beta}, i.e. -(beta, alpha - beta).
Int arrow_multiplicity(const Quiver& q, const DimVector& alpha, const DimVector& beta);

// All beta with e_x <= beta <= alpha, beta != alpha, theta . beta == 0 and
// both beta and alpha - beta positive roots, optionally filtered to classes
// with two local resolutions.  Deterministic order as documented on LeafSet.
LeafSet enumerate_leaves(const Quiver& q, const DimVector& alpha, const Stability& theta,
                         int x, const EnumerateOptions& opts = {});

// Local quiver of a polystable point with summand dimensions dims (taken with
// multiplicity mult): one vertex per summand, 2 - 2 q(dim) loops, and
// -(dim_i, dim_j) arrows between distinct vertices.
struct LocalQuiver {
  std::vector<DimVector> summands;
  std::vector<std::int64_t> multiplicity;
  std::vector<Int> loops;                  // per vertex
  std::vector<std::vector<Int>> arrows;    // symmetric, zero diagonal
};

LocalQuiver local_quiver(const Quiver& q, const std::vector<DimVector>& dims,
                         const std::vector<std::int64_t>& mult);

// 2^(number of classes): the count of locally projective crepant resolutions
// labeled by sign functions on the classes.
Int count_locally_projective(const LeafSet& leaves);

}  // namespace qv
