#include "qv/patterns.hpp"

#include <algorithm>
#include <set>

#include "qv/error.hpp"
#include "qv/lp.hpp"

namespace qv {

namespace {

constexpr int kMaxVertices = 20;

void check_sizes(const DoubleQuiver& dq) {
  require(dq.base.num_vertices() <= kMaxVertices, ErrorKind::TooLarge,
          "pattern operations support at most 20 vertices");
  require(dq.num_arrows() <= 64, ErrorKind::TooLarge,
          "pattern operations support at most 64 arrows in the double quiver");
}

void check_all_ones(const DimVector& alpha) {
  for (std::int64_t a : alpha)
    require(a == 1, ErrorKind::NotAllOnes,
            "combinatorial stability needs an all-ones dimension vector");
}

Rat subset_weight(const Stability& theta, VertexMask s) {
  Rat w = 0;
  for (int v = 0; v < static_cast<int>(theta.size()); ++v)
    if (s >> v & 1u) w += theta[v];
  return w;
}

ArrowMask crossing_arrows(const DoubleQuiver& dq, VertexMask s) {
  ArrowMask out = 0;
  for (int a = 0; a < dq.num_arrows(); ++a) {
    const Arrow& ar = dq.arrows[a];
    if ((s >> ar.src & 1u) && !(s >> ar.tgt & 1u)) out |= ArrowMask{1} << a;
  }
  return out;
}

VertexMask support_mask(const DimVector& v) {
  VertexMask m = 0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] > 0) m |= VertexMask{1} << i;
  return m;
}

}  // namespace

ArrowMask pattern_from_labels(const DoubleQuiver& dq,
                              const std::vector<std::string>& labels) {
  check_sizes(dq);
  ArrowMask pattern = 0;
  for (const std::string& label : labels) {
    bool found = false;
    for (int a = 0; a < dq.num_arrows() && !found; ++a) {
      if (pattern >> a & 1u) continue;
      if (dq.arrow_label(a) == label) {
        pattern |= ArrowMask{1} << a;
        found = true;
      }
    }
    require(found, ErrorKind::UnknownVertex, "no unused arrow matches '" + label + "'");
  }
  return pattern;
}

VertexMask reachable_from(const DoubleQuiver& dq, ArrowMask pattern, int v) {
  require(v >= 0 && v < dq.base.num_vertices(), ErrorKind::UnknownVertex,
          "vertex index out of range");
  return out_closure(dq, pattern, VertexMask{1} << v);
}

VertexMask out_closure(const DoubleQuiver& dq, ArrowMask pattern, VertexMask seed) {
  check_sizes(dq);
  VertexMask closed = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < dq.num_arrows(); ++a) {
      if (!(pattern >> a & 1u)) continue;
      const Arrow& ar = dq.arrows[a];
      if ((closed >> ar.src & 1u) && !(closed >> ar.tgt & 1u)) {
        closed |= VertexMask{1} << ar.tgt;
        grew = true;
      }
    }
  }
  return closed;
}

KingTester make_king_tester(const DoubleQuiver& dq, const Stability& theta,
                            const DimVector& alpha) {
  check_sizes(dq);
  check_all_ones(alpha);
  validate_stability(dq.base, alpha, theta);

  const int n = dq.base.num_vertices();
  KingTester tester;
  const VertexMask full = (VertexMask{1} << n) - 1;
  for (VertexMask s = 1; s < full; ++s) {
    Rat w = subset_weight(theta, s);
    if (w > 0)
      tester.positive_crossings.push_back(crossing_arrows(dq, s));
    else if (w == 0)
      tester.flat_crossings.push_back(crossing_arrows(dq, s));
  }
  return tester;
}

bool is_semistable(const DoubleQuiver& dq, ArrowMask pattern, const Stability& theta,
                   const DimVector& alpha) {
  return make_king_tester(dq, theta, alpha).semistable(pattern);
}

bool is_stable(const DoubleQuiver& dq, ArrowMask pattern, const Stability& theta,
               const DimVector& alpha) {
  return make_king_tester(dq, theta, alpha).stable(pattern);
}

VertexMask StarShape::spoke_mask(VertexMask vertices) const {
  VertexMask m = 0;
  for (int j = 0; j < static_cast<int>(spokes.size()); ++j)
    if (vertices >> spokes[j] & 1u) m |= VertexMask{1} << j;
  return m;
}

StarShape star_shape(const Quiver& q, int x, int y) {
  require(x != y, ErrorKind::ShapeMismatch, "the two hubs must be distinct");
  require(x >= 0 && x < q.num_vertices() && y >= 0 && y < q.num_vertices(),
          ErrorKind::UnknownVertex, "hub index out of range");
  StarShape shape;
  shape.x = x;
  shape.y = y;
  for (const Arrow& a : q.arrows) {
    require(a.src == x || a.src == y, ErrorKind::ShapeMismatch,
            "every arrow must start at a hub");
    require(a.tgt != x && a.tgt != y, ErrorKind::ShapeMismatch,
            "every arrow must end at a spoke");
  }
  for (int v = 0; v < q.num_vertices(); ++v)
    if (v != x && v != y) shape.spokes.push_back(v);
  require(!shape.spokes.empty(), ErrorKind::ShapeMismatch, "a star needs at least one spoke");
  return shape;
}

InstabilityReport instability_report(const DoubleQuiver& dq, ArrowMask pattern,
                                     const Stability& theta, int x, int y) {
  check_sizes(dq);
  StarShape shape = star_shape(dq.base, x, y);
  validate_stability(dq.base, DimVector(dq.base.num_vertices(), 1), theta);
  require(theta[x] > 0 && theta[y] > 0, ErrorKind::InvalidStability,
          "hub weights must be positive");
  const Rat spoke_weight = theta[shape.spokes.front()];
  require(spoke_weight < 0, ErrorKind::InvalidStability, "spoke weights must be negative");
  Rat total = theta[x] + theta[y];
  for (int i : shape.spokes) {
    require(theta[i] == spoke_weight, ErrorKind::InvalidStability,
            "spoke weights must all be equal");
    total += theta[i];
  }
  require(total == 0, ErrorKind::InvalidStability,
          "stability must pair to zero with the all-ones dimension vector");

  InstabilityReport report;
  for (int i : shape.spokes) {
    bool fed = false;
    for (int a = 0; a < dq.num_arrows() && !fed; ++a)
      if ((pattern >> a & 1u) && dq.arrows[a].tgt == i) fed = true;
    if (!fed) report.dead_spokes.push_back(i);
  }
  auto starved = [&](int hub) {
    VertexMask reach = reachable_from(dq, pattern, hub);
    Rat slack = theta[hub];
    for (int i : shape.spokes)
      if (reach >> i & 1u) slack += theta[i];
    return slack > 0;
  };
  report.starved_x = starved(x);
  report.starved_y = starved(y);
  report.semistable =
      report.dead_spokes.empty() && !report.starved_x && !report.starved_y;
  return report;
}

SignLocusTester make_sign_locus_tester(const DoubleQuiver& dq, const LeafSet& leaves) {
  SignLocusTester tester;
  tester.king = make_king_tester(dq, leaves.theta, leaves.alpha);
  for (const DimVector& beta : leaves.classes) {
    DimVector rest(leaves.alpha.size());
    for (std::size_t v = 0; v < rest.size(); ++v) rest[v] = leaves.alpha[v] - beta[v];
    VertexMask b = support_mask(beta);
    VertexMask c = support_mask(rest);
    ArrowMask fwd = 0, bwd = 0;
    for (int a = 0; a < dq.num_arrows(); ++a) {
      const Arrow& ar = dq.arrows[a];
      if ((b >> ar.src & 1u) && (c >> ar.tgt & 1u)) fwd |= ArrowMask{1} << a;
      if ((c >> ar.src & 1u) && (b >> ar.tgt & 1u)) bwd |= ArrowMask{1} << a;
    }
    tester.forward.push_back(fwd);
    tester.backward.push_back(bwd);
  }
  return tester;
}

bool in_sign_locus(const DoubleQuiver& dq, ArrowMask pattern, const LeafSet& leaves,
                   const SignFunction& s) {
  require(s.size == static_cast<int>(leaves.classes.size()), ErrorKind::ShapeMismatch,
          "sign function size must match the number of classes");
  return make_sign_locus_tester(dq, leaves).contains(pattern, s);
}

bool PathLocusTester::contains(const DoubleQuiver& dq, ArrowMask pattern,
                               const SignFunction& s) const {
  const VertexMask all = (VertexMask{1} << shape.spokes.size()) - 1;
  const VertexMask rx = shape.spoke_mask(reachable_from(dq, pattern, shape.x));
  const VertexMask ry = shape.spoke_mask(reachable_from(dq, pattern, shape.y));
  for (int i = 0; i < s.size; ++i) {
    VertexMask inside = spoke_sets[i];
    VertexMask outside = all & ~inside;
    if ((rx & inside) != inside) continue;
    if ((ry & outside) != outside) continue;
    if (s.sign(i) > 0 ? (rx & outside) != 0 : (ry & inside) != 0) return true;
  }
  return false;
}

PathLocusTester make_path_locus_tester(const DoubleQuiver& dq, const LeafSet& leaves,
                                       int y) {
  check_sizes(dq);
  PathLocusTester tester;
  tester.shape = star_shape(dq.base, leaves.x, y);
  for (const DimVector& beta : leaves.classes) {
    require(beta[leaves.x] == 1 && beta[y] == 0, ErrorKind::ShapeMismatch,
            "classes must contain the first hub and avoid the second");
    for (std::int64_t b : beta)
      require(b == 0 || b == 1, ErrorKind::ShapeMismatch, "classes must be zero-one");
    tester.spoke_sets.push_back(tester.shape.spoke_mask(support_mask(beta)));
  }
  return tester;
}

bool in_sign_locus_by_paths(const DoubleQuiver& dq, ArrowMask pattern,
                            const LeafSet& leaves, const SignFunction& s, int y) {
  require(s.size == static_cast<int>(leaves.classes.size()), ErrorKind::ShapeMismatch,
          "sign function size must match the number of classes");
  return make_path_locus_tester(dq, leaves, y).contains(dq, pattern, s);
}

bool in_good_locus(const DoubleQuiver& dq, ArrowMask pattern, const StarShape& shape,
                   const Antichain& ifam, const Antichain& jfam) {
  check_sizes(dq);
  const int k = static_cast<int>(shape.spokes.size());
  require(ifam.ground == k && jfam.ground == k, ErrorKind::ShapeMismatch,
          "families must live on the spokes");
  const VertexMask all = (VertexMask{1} << k) - 1;
  const VertexMask rx = shape.spoke_mask(reachable_from(dq, pattern, shape.x));
  const VertexMask ry = shape.spoke_mask(reachable_from(dq, pattern, shape.y));
  return family_contains(ifam, rx) && family_contains(jfam, ry) && (rx | ry) == all;
}

std::vector<ArrowMask> star_witness_patterns(const DoubleQuiver& dq,
                                             const StarShape& shape,
                                             const Antichain& ifam,
                                             const Antichain& jfam) {
  check_sizes(dq);
  const int k = static_cast<int>(shape.spokes.size());
  require(ifam.ground == k && jfam.ground == k, ErrorKind::ShapeMismatch,
          "families must live on the spokes");
  auto feeds = [&](int hub, VertexMask spoke_set) {
    ArrowMask m = 0;
    for (int a = 0; a < dq.base.num_arrows(); ++a) {
      const Arrow& ar = dq.arrows[a];
      if (ar.src != hub) continue;
      for (int j = 0; j < k; ++j)
        if (shape.spokes[j] == ar.tgt && (spoke_set >> j & 1u)) m |= ArrowMask{1} << a;
    }
    return m;
  };
  const VertexMask all = (VertexMask{1} << k) - 1;
  std::vector<ArrowMask> patterns;
  for (VertexMask i : ifam.minimal)
    patterns.push_back(feeds(shape.x, i) | feeds(shape.y, all));
  for (VertexMask j : jfam.minimal)
    patterns.push_back(feeds(shape.x, all) | feeds(shape.y, j));
  return patterns;
}

OrbitCone orbit_cone(const DoubleQuiver& dq, ArrowMask pattern, const DimVector& alpha) {
  check_sizes(dq);
  check_all_ones(alpha);
  const int n = dq.base.num_vertices();
  OrbitCone cone;
  const VertexMask full = (VertexMask{1} << n) - 1;
  for (VertexMask s = 1; s < full; ++s)
    if ((pattern & crossing_arrows(dq, s)) == 0) cone.normals.push_back(s);
  return cone;
}

bool cone_contains(const OrbitCone& cone, const Stability& theta, const DimVector& alpha) {
  if (dot(theta, alpha) != 0) return false;
  for (VertexMask s : cone.normals)
    if (subset_weight(theta, s) > 0) return false;
  return true;
}

CommonStabilityCone common_stability_cone(const DoubleQuiver& dq,
                                          const std::vector<ArrowMask>& patterns,
                                          const DimVector& alpha) {
  check_sizes(dq);
  std::set<VertexMask> normals;
  for (ArrowMask p : patterns) {
    OrbitCone cone = orbit_cone(dq, p, alpha);
    normals.insert(cone.normals.begin(), cone.normals.end());
  }

  CommonStabilityCone out;
  out.normals.assign(normals.begin(), normals.end());

  const int n = dq.base.num_vertices();
  lp::Problem base;
  base.vars = n;
  base.bounds.assign(n, {Rat(-1), Rat(1)});
  lp::Row ortho;
  ortho.coeff.assign(alpha.begin(), alpha.end());
  ortho.rel = lp::Rel::Eq;
  ortho.rhs = 0;
  base.rows.push_back(ortho);
  for (VertexMask s : out.normals) {
    lp::Row row;
    row.coeff.assign(n, Rat(0));
    for (int v = 0; v < n; ++v)
      if (s >> v & 1u) row.coeff[v] = 1;
    row.rel = lp::Rel::Le;
    row.rhs = 0;
    base.rows.push_back(row);
  }

  out.zero_only = true;
  for (int v = 0; v < n && out.zero_only; ++v) {
    for (int dir : {1, -1}) {
      lp::Problem prob = base;
      prob.maximize.assign(n, Rat(0));
      prob.maximize[v] = dir;
      lp::Result res = lp::solve(prob);
      require(res.status == lp::Status::Optimal, ErrorKind::Internal,
              "stability cone sweep must stay bounded and feasible");
      if (res.value != 0) {
        out.zero_only = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace qv
