#pragma once

// Quivers, dimension vectors and the attached integral forms.
//
// A quiver is a finite directed multigraph.  Vertices are identified by
// opaque string ids supplied at construction; their declaration order is the
// canonical order used everywhere downstream (lexicographic comparisons of
// dimension vectors, bitmask layouts, report ordering).  Arrows are a
// multiset: parallel arrows are kept as distinct entries and an arrow is
// identified by its index.
//
// The double of a quiver adjoins a reversed partner for every arrow.  Arrow
// indices [0, n) of the double are the base arrows in order, [n, 2n) their
// partners, so partner(i) == i ^ nothing fancy: i < n ? i + n : i - n.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qv/rational.hpp"

namespace qv {

struct Arrow {
  int src = 0;
  int tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;  // canonical order = declaration order
  std::vector<Arrow> arrows;
  std::unordered_map<std::string, int> index;  // vertex id -> position

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }

  // Throws UnknownVertex for ids that were never declared.
  int vertex(const std::string& id) const;
  bool has_loop_at(int v) const;
};

// Per-vertex nonnegative integers, aligned with the canonical vertex order.
using DimVector = std::vector<std::int64_t>;

// Per-vertex exact rational weights, same alignment.
using Stability = std::vector<Rat>;

// Validates ids (DuplicateVertexId) and arrow endpoints (UnknownVertex).
Quiver build_quiver(const std::vector<std::string>& vertices,
                    const std::vector<std::pair<std::string, std::string>>& arrows);

struct DoubleQuiver {
  Quiver base;
  std::vector<Arrow> arrows;  // size 2 * base.num_arrows(), see header comment

  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int partner(int a) const {
    int n = base.num_arrows();
    return a < n ? a + n : a - n;
  }
  bool is_reversed(int a) const { return a >= base.num_arrows(); }
  std::string arrow_label(int a) const;
};

DoubleQuiver double_quiver(const Quiver& q);

// Framed data (q, alpha, framing w) turned into the unframed picture: one new
// vertex is appended after all existing ones, with w_i arrows from it to
// vertex i, and the new coordinate of alpha is 1.
struct Unframed {
  Quiver q;
  DimVector alpha;
  int infinity;  // index of the appended vertex
};

Unframed framed_to_unframed(const Quiver& q, const DimVector& alpha,
                            const std::vector<std::int64_t>& framing,
                            const std::string& new_vertex_id = "inf");

// Extends a framed stability parameter by the unique weight at the new vertex
// that makes it orthogonal to the unframed dimension vector.
Stability unframe_stability(const Unframed& u, const Stability& framed_theta);

// <a,b> = sum_i a_i b_i - sum_{arrows} a_src b_tgt.  Not symmetric.
Int euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

// (a,b) = <a,b> + <b,a>.
Int sym_form(const Quiver& q, const DimVector& a, const DimVector& b);

// q(a) = (a,a)/2 = <a,a>; always an integer.
Int tits_form(const Quiver& q, const DimVector& a);

// Positive-root test by the reflection algorithm: repeatedly reflect at a
// vertex pairing positively with b until reaching a unit vector (real root),
// a fixed point of the reflections (root iff the support is connected), or a
// negative coordinate (not a root).  Throws ZeroVector for b = 0 and
// Unsupported when the support of b touches a loop.
bool is_positive_root(const Quiver& q, const DimVector& b);

// Checks sizes, integrality of alpha >= 0 and theta . alpha == 0; throws
// InvalidStability / InvalidParams with a description otherwise.
void validate_stability(const Quiver& q, const DimVector& alpha, const Stability& theta);

Rat dot(const Stability& theta, const DimVector& v);

// True iff the subgraph induced on {v : b_v != 0} is connected (arrows taken
// as undirected edges).  False for b = 0.
bool has_connected_support(const Quiver& q, const DimVector& b);

std::string format_dim_vector(const Quiver& q, const DimVector& v);

}  // namespace qv
