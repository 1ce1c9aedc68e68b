#include "qv/leaves.hpp"

#include <algorithm>

namespace qv {

Int arrow_multiplicity(const Quiver& q, const DimVector& alpha, const DimVector& beta) {
  DimVector rest(alpha.size());
  for (size_t v = 0; v < alpha.size(); ++v) rest[v] = alpha[v] - beta[v];
  return -sym_form(q, beta, rest);
}

LeafSet enumerate_leaves(const Quiver& q, const DimVector& alpha, const Stability& theta,
                         int x, const EnumerateOptions& opts) {
  validate_stability(q, alpha, theta);
  require(x >= 0 && x < q.num_vertices(), ErrorKind::InvalidParams, "bad distinguished vertex");
  require(alpha[x] >= 1, ErrorKind::InvalidParams,
          "distinguished vertex has dimension 0");

  int n = q.num_vertices();
  std::int64_t count = 1;
  for (int v = 0; v < n; ++v) {
    std::int64_t range = v == x ? alpha[v] : alpha[v] + 1;
    if (count > opts.candidate_cap / std::max<std::int64_t>(range, 1))
      fail(ErrorKind::TooLarge, "candidate box for leaf enumeration");
    count *= range;
  }

  LeafSet out;
  out.q = q;
  out.alpha = alpha;
  out.theta = theta;
  out.x = x;

  DimVector beta(n, 0);
  beta[x] = 1;
  for (;;) {
    bool proper = false;
    for (int v = 0; v < n; ++v)
      if (beta[v] < alpha[v]) proper = true;
    if (proper && dot(theta, beta) == 0) {
      DimVector rest(n);
      for (int v = 0; v < n; ++v) rest[v] = alpha[v] - beta[v];
      if (is_positive_root(q, beta) && is_positive_root(q, rest)) {
        Int m = arrow_multiplicity(q, alpha, beta);
        if (!opts.require_two_resolutions || m > 2) {
          out.classes.push_back(beta);
          out.multiplicity.push_back(m);
        }
      }
    }
    // Odometer over the box e_x <= beta <= alpha.
    int v = n - 1;
    for (; v >= 0; --v) {
      if (beta[v] < alpha[v]) {
        ++beta[v];
        break;
      }
      beta[v] = v == x ? 1 : 0;
    }
    if (v < 0) break;
  }

  std::vector<size_t> order(out.classes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return out.classes[a] < out.classes[b];
  });
  LeafSet sorted = out;
  for (size_t i = 0; i < order.size(); ++i) {
    sorted.classes[i] = out.classes[order[i]];
    sorted.multiplicity[i] = out.multiplicity[order[i]];
  }
  return sorted;
}

LocalQuiver local_quiver(const Quiver& q, const std::vector<DimVector>& dims,
                         const std::vector<std::int64_t>& mult) {
  require(!dims.empty() && dims.size() == mult.size(), ErrorKind::InvalidParams,
          "summand lists of unequal or zero size");
  LocalQuiver lq;
  lq.summands = dims;
  lq.multiplicity = mult;
  size_t k = dims.size();
  lq.loops.resize(k);
  lq.arrows.assign(k, std::vector<Int>(k, Int(0)));
  for (size_t i = 0; i < k; ++i) {
    lq.loops[i] = 2 - 2 * tits_form(q, dims[i]);
    for (size_t j = i + 1; j < k; ++j) {
      Int a = -sym_form(q, dims[i], dims[j]);
      lq.arrows[i][j] = a;
      lq.arrows[j][i] = a;
    }
  }
  return lq;
}

Int count_locally_projective(const LeafSet& leaves) {
  Int one = 1;
  return one << leaves.classes.size();
}

}  // namespace qv
