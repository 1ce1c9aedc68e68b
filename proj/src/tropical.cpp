#include "qv/tropical.hpp"

#include <algorithm>

#include "qv/error.hpp"

namespace qv {

namespace {

using Dist = std::vector<std::optional<std::int64_t>>;

// Bellman-Ford relaxation sweep; returns whether any distance improved.
bool relax_once(const TropicalRep& r, Dist& dist) {
  bool improved = false;
  for (int a = 0; a < r.dq.num_arrows(); ++a) {
    if (!r.val[a]) continue;
    const Arrow& ar = r.dq.arrows[a];
    if (!dist[ar.src]) continue;
    std::int64_t through = *dist[ar.src] + *r.val[a];
    if (!dist[ar.tgt] || through < *dist[ar.tgt]) {
      dist[ar.tgt] = through;
      improved = true;
    }
  }
  return improved;
}

Dist distances_from(const TropicalRep& r, VertexMask sources) {
  const int n = r.dq.base.num_vertices();
  Dist dist(n);
  for (int v = 0; v < n; ++v)
    if (sources >> v & 1u) dist[v] = 0;
  for (int pass = 1; pass < n; ++pass)
    if (!relax_once(r, dist)) break;
  return dist;
}

bool paths_nonnegative_from(const TropicalRep& r, VertexMask sources) {
  Dist dist = distances_from(r, sources);
  for (const auto& d : dist)
    if (d && *d < 0) return false;
  return true;
}

bool paths_nonnegative_within(const TropicalRep& r, VertexMask subset) {
  const int n = r.dq.base.num_vertices();
  for (int u = 0; u < n; ++u) {
    if (!(subset >> u & 1u)) continue;
    Dist dist = distances_from(r, VertexMask{1} << u);
    for (int v = 0; v < n; ++v)
      if ((subset >> v & 1u) && dist[v] && *dist[v] < 0) return false;
  }
  return true;
}

std::optional<int> cheapest_boundary(const TropicalRep& r, VertexMask subset) {
  std::optional<int> best;
  for (int a = 0; a < r.dq.num_arrows(); ++a) {
    if (!r.val[a]) continue;
    const Arrow& ar = r.dq.arrows[a];
    if (!(subset >> ar.src & 1u) || (subset >> ar.tgt & 1u)) continue;
    if (!best || *r.val[a] < *r.val[*best]) best = a;
  }
  return best;
}

// Core of expand_step without precondition checks, shared with the search.
ExpandStep expand_core(const TropicalRep& r, VertexMask subset) {
  std::optional<int> cheapest = cheapest_boundary(r, subset);
  require(cheapest.has_value(), ErrorKind::NoOutgoingPath,
          "no nonzero arrow leaves the subset");
  ExpandStep step;
  step.shift = *r.val[*cheapest];

  GaugeShift g;
  g.exponent.assign(r.dq.base.num_vertices(), 0);
  for (int v = 0; v < r.dq.base.num_vertices(); ++v)
    if (subset >> v & 1u) g.exponent[v] = step.shift;
  step.rep = apply_gauge(r, g);

  step.entered = r.dq.base.num_vertices();
  for (int a = 0; a < r.dq.num_arrows(); ++a) {
    if (!step.rep.val[a] || *step.rep.val[a] != 0) continue;
    const Arrow& ar = r.dq.arrows[a];
    if ((subset >> ar.src & 1u) && !(subset >> ar.tgt & 1u))
      step.entered = std::min(step.entered, ar.tgt);
  }

  VertexMask grown = subset | VertexMask{1} << step.entered;
  step.post_paths_ok = paths_nonnegative_from(step.rep, grown);
  Dist dist = distances_from(step.rep, subset);
  step.zero_path_ok = dist[step.entered] && *dist[step.entered] == 0;
  return step;
}

}  // namespace

ArrowMask TropicalRep::support() const {
  ArrowMask m = 0;
  for (std::size_t a = 0; a < val.size(); ++a)
    if (val[a]) m |= ArrowMask{1} << a;
  return m;
}

TropicalRep make_tropical_rep(const DoubleQuiver& dq,
                              std::vector<std::optional<std::int64_t>> vals) {
  require(dq.base.num_vertices() <= 20 && dq.num_arrows() <= 64, ErrorKind::TooLarge,
          "valuation operations support at most 20 vertices and 64 arrows");
  require(static_cast<int>(vals.size()) == dq.num_arrows(), ErrorKind::ShapeMismatch,
          "one valuation per arrow of the double quiver");
  return {dq, std::move(vals)};
}

TropicalRep apply_gauge(const TropicalRep& r, const GaugeShift& g) {
  require(static_cast<int>(g.exponent.size()) == r.dq.base.num_vertices(),
          ErrorKind::ShapeMismatch, "one exponent per vertex");
  TropicalRep out = r;
  for (int a = 0; a < r.dq.num_arrows(); ++a) {
    if (!out.val[a]) continue;
    const Arrow& ar = r.dq.arrows[a];
    out.val[a] = *out.val[a] + g.exponent[ar.tgt] - g.exponent[ar.src];
  }
  return out;
}

bool has_nonnegative_cycles(const TropicalRep& r) {
  const int n = r.dq.base.num_vertices();
  Dist dist(n, std::optional<std::int64_t>{0});
  for (int pass = 0; pass < n; ++pass)
    if (!relax_once(r, dist)) return true;
  return !relax_once(r, dist);
}

std::optional<std::int64_t> path_valuation(const TropicalRep& r, int u, int v) {
  require(u >= 0 && u < r.dq.base.num_vertices() && v >= 0 && v < r.dq.base.num_vertices(),
          ErrorKind::UnknownVertex, "vertex index out of range");
  require(has_nonnegative_cycles(r), ErrorKind::NegativeCycle,
          "path valuations need nonnegative cycles");
  return distances_from(r, VertexMask{1} << u)[v];
}

ExpandStep expand_step(const TropicalRep& r, VertexMask subset) {
  require(subset != 0, ErrorKind::PreconditionViolated, "the subset must be nonempty");
  require(has_nonnegative_cycles(r), ErrorKind::PreconditionViolated,
          "expansion needs nonnegative cycles");
  require(paths_nonnegative_within(r, subset), ErrorKind::PreconditionViolated,
          "some path between subset vertices has negative valuation");
  return expand_core(r, subset);
}

SearchOutcome integral_point_search(const TropicalRep& r, const Antichain& ifam,
                                    const Antichain& jfam, int x, int y) {
  StarShape shape = star_shape(r.dq.base, x, y);
  const int n = r.dq.base.num_vertices();
  const int k = static_cast<int>(shape.spokes.size());
  require(ifam.ground == k && jfam.ground == k, ErrorKind::ShapeMismatch,
          "families must live on the spokes");
  require(has_nonnegative_cycles(r), ErrorKind::PreconditionViolated,
          "some cycle has negative valuation");
  {
    ArrowMask pattern = r.support();
    VertexMask rx = shape.spoke_mask(reachable_from(r.dq, pattern, x));
    VertexMask ry = shape.spoke_mask(reachable_from(r.dq, pattern, y));
    require(family_contains(ifam, rx), ErrorKind::PreconditionViolated,
            "x does not reach any member of its family");
    require(family_contains(jfam, ry), ErrorKind::PreconditionViolated,
            "y does not reach any member of its family");
    require((rx | ry) == (VertexMask{1} << k) - 1, ErrorKind::PreconditionViolated,
            "some spoke is unreachable from both hubs");
  }

  SearchOutcome out;
  out.rep = r;
  out.gauge.exponent.assign(n, 0);
  const VertexMask everything = (VertexMask{1} << n) - 1;
  const int step_budget = n * n;

  auto step = [&](char phase, VertexMask subset) {
    require(static_cast<int>(out.trace.size()) < step_budget, ErrorKind::Internal,
            "expansion step budget exhausted");
    SearchStep record;
    record.phase = phase;
    record.subset = subset;
    record.pre_paths_ok = paths_nonnegative_from(out.rep, subset);
    ExpandStep expanded = expand_core(out.rep, subset);
    record.shift = expanded.shift;
    record.entered = expanded.entered;
    record.post_paths_ok = expanded.post_paths_ok;
    record.zero_path_ok = expanded.zero_path_ok;
    out.trace.push_back(record);
    for (int v = 0; v < n; ++v)
      if (subset >> v & 1u) out.gauge.exponent[v] += expanded.shift;
    out.rep = std::move(expanded.rep);
    return expanded.entered;
  };

  // Grow the x side to its closure.
  VertexMask iset = VertexMask{1} << x;
  while (iset != everything && cheapest_boundary(out.rep, iset))
    iset |= VertexMask{1} << step('x', iset);

  // Grow the y side to its closure; each claimed vertex evicts the previous
  // y-set from the x side.
  VertexMask jset = VertexMask{1} << y;
  while (jset != everything && cheapest_boundary(out.rep, jset)) {
    VertexMask before = jset;
    int j = step('y', jset);
    jset |= VertexMask{1} << j;
    iset &= ~before;
  }

  VertexMask x_side = shape.spoke_mask(iset);
  VertexMask y_side = shape.spoke_mask(jset);
  const VertexMask all_spokes = (VertexMask{1} << k) - 1;

  // Repair the x side until it covers a family member, resetting the y side
  // to the complement before each newly claimed spoke.
  while (!family_contains(ifam, x_side)) {
    VertexMask subset = VertexMask{1} << x;
    for (int j = 0; j < k; ++j)
      if (x_side >> j & 1u) subset |= VertexMask{1} << shape.spokes[j];
    if (!cheapest_boundary(out.rep, subset)) {
      out.failure = "x side expansion stalled before reaching its family";
      out.x_side = x_side;
      out.y_side = y_side;
      return out;
    }
    int j = step('r', subset);
    if (j == y) {
      x_side = all_spokes;
      break;
    }
    y_side = all_spokes & ~x_side;
    x_side |= shape.spoke_mask(VertexMask{1} << j);
  }

  out.x_side = x_side;
  out.y_side = y_side;

  auto audit = [&]() -> std::string {
    for (int a = 0; a < out.rep.dq.num_arrows(); ++a)
      if (out.rep.val[a] && *out.rep.val[a] < 0)
        return "arrow " + out.rep.dq.arrow_label(a) + " has negative valuation";
    TropicalRep regauged = apply_gauge(r, out.gauge);
    if (regauged.val != out.rep.val) return "accumulated gauge does not reproduce the result";
    for (int j = 0; j < k; ++j) {
      if (x_side >> j & 1u) {
        auto d = path_valuation(out.rep, x, shape.spokes[j]);
        if (!d || *d != 0)
          return "no invertible path from x to spoke " +
                 out.rep.dq.base.vertices[shape.spokes[j]];
      }
      if (y_side >> j & 1u) {
        auto d = path_valuation(out.rep, y, shape.spokes[j]);
        if (!d || *d != 0)
          return "no invertible path from y to spoke " +
                 out.rep.dq.base.vertices[shape.spokes[j]];
      }
    }
    if (!family_contains(ifam, x_side)) return "x side is not in its family";
    if (!family_contains(jfam, y_side)) return "y side is not in its family";
    return "";
  };
  out.failure = audit();
  out.success = out.failure.empty();
  return out;
}

}  // namespace qv
