#include "qv/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <thread>

#include "qv/lp.hpp"

namespace qv {

std::string SignFunction::to_string() const {
  std::string out;
  for (int i = 0; i < size; ++i) out += sign(i) > 0 ? '+' : '-';
  return out;
}

SignFunction SignFunction::from_string(const std::string& text) {
  require(text.size() <= 32, ErrorKind::TooLarge, "sign function beyond 32 classes");
  SignFunction s;
  s.size = static_cast<int>(text.size());
  for (int i = 0; i < s.size; ++i) {
    if (text[i] == '-')
      s.bits |= 1u << i;
    else
      require(text[i] == '+', ErrorKind::InvalidParams,
              "sign strings use '+' and '-' only");
  }
  return s;
}

SignFunction SignFunction::from_mask(std::uint32_t mask, int size) {
  require(size >= 0 && size <= 32, ErrorKind::TooLarge, "sign function beyond 32 classes");
  SignFunction s;
  s.bits = size >= 32 ? mask : (mask & ((1u << size) - 1u));
  s.size = size;
  return s;
}

static void check_signs(const LeafSet& leaves, const SignFunction& s) {
  require(s.size == static_cast<int>(leaves.classes.size()), ErrorKind::InvalidParams,
          "sign function size does not match the class count");
}

FeasibilityResult realizable(const LeafSet& leaves, const SignFunction& s) {
  check_signs(leaves, s);
  int n = leaves.q.num_vertices();
  int k = static_cast<int>(leaves.classes.size());

  FeasibilityResult out;
  if (k == 0) {
    // No constraints beyond orthogonality; report the zero parameter.
    out.feasible = true;
    out.witness.theta.assign(n, Int(0));
    return out;
  }

  // Margin problem: variables theta_0..theta_{n-1}, t; maximize t subject to
  // s_i (theta . beta_i) >= t, theta . alpha = 0, -1 <= theta_v <= 1.
  lp::Problem margin;
  margin.vars = n + 1;
  margin.maximize.assign(n + 1, Rat(0));
  margin.maximize[n] = 1;
  margin.bounds.resize(n + 1);
  for (int v = 0; v < n; ++v) margin.bounds[v] = {Rat(-1), Rat(1)};
  {
    lp::Row orth;
    orth.coeff.assign(n + 1, Rat(0));
    for (int v = 0; v < n; ++v) orth.coeff[v] = leaves.alpha[v];
    orth.rel = lp::Rel::Eq;
    margin.rows.push_back(std::move(orth));
  }
  for (int i = 0; i < k; ++i) {
    lp::Row row;
    row.coeff.assign(n + 1, Rat(0));
    for (int v = 0; v < n; ++v) row.coeff[v] = Rat(s.sign(i)) * leaves.classes[i][v];
    row.coeff[n] = -1;
    row.rel = lp::Rel::Ge;
    margin.rows.push_back(std::move(row));
  }
  lp::Result res = lp::solve(margin);
  require(res.status == lp::Status::Optimal, ErrorKind::Internal,
          "margin problem is bounded and feasible by construction");

  if (res.value > 0) {
    std::vector<Rat> theta(res.x.begin(), res.x.begin() + n);
    out.feasible = true;
    out.witness.theta = primitive_integer_vector(theta);
    return out;
  }

  // Dual obstruction: lambda >= 0, sum lambda = 1, free mu with
  // sum_i lambda_i s_i beta_i = mu alpha.  Solvable exactly when the strict
  // system is not, so failure here is a solver bug.
  lp::Problem dual;
  dual.vars = k + 1;  // lambda..., mu
  dual.maximize.assign(k + 1, Rat(0));
  dual.bounds.resize(k + 1);
  for (int i = 0; i < k; ++i) dual.bounds[i] = {Rat(0), std::nullopt};
  for (int v = 0; v < n; ++v) {
    lp::Row row;
    row.coeff.assign(k + 1, Rat(0));
    for (int i = 0; i < k; ++i) row.coeff[i] = Rat(s.sign(i)) * leaves.classes[i][v];
    row.coeff[k] = -Rat(leaves.alpha[v]);
    row.rel = lp::Rel::Eq;
    dual.rows.push_back(std::move(row));
  }
  {
    lp::Row norm;
    norm.coeff.assign(k + 1, Rat(0));
    for (int i = 0; i < k; ++i) norm.coeff[i] = 1;
    norm.rel = lp::Rel::Eq;
    norm.rhs = 1;
    dual.rows.push_back(std::move(norm));
  }
  lp::Result dres = lp::solve(dual);
  require(dres.status == lp::Status::Optimal, ErrorKind::Internal,
          "no strict solution and no dual obstruction: alternative violated");

  std::vector<Int> scaled = primitive_integer_vector(dres.x);
  out.feasible = false;
  out.certificate.lambda.assign(scaled.begin(), scaled.begin() + k);
  out.certificate.mu = scaled[k];
  return out;
}

bool verify_feasibility(const LeafSet& leaves, const SignFunction& s,
                        const FeasibilityResult& result) {
  check_signs(leaves, s);
  int n = leaves.q.num_vertices();
  int k = static_cast<int>(leaves.classes.size());
  if (result.feasible) {
    const std::vector<Int>& w = result.witness.theta;
    if (static_cast<int>(w.size()) != n) return false;
    Int orth = 0;
    for (int v = 0; v < n; ++v) orth += w[v] * leaves.alpha[v];
    if (orth != 0) return false;
    for (int i = 0; i < k; ++i) {
      Int pairing = 0;
      for (int v = 0; v < n; ++v) pairing += w[v] * leaves.classes[i][v];
      if (s.sign(i) > 0 ? pairing <= 0 : pairing >= 0) return false;
    }
    if (k > 0 && content(w) != 1) return false;
    return true;
  }
  const Certificate& c = result.certificate;
  if (static_cast<int>(c.lambda.size()) != k) return false;
  bool some_positive = false;
  for (const Int& l : c.lambda) {
    if (l < 0) return false;
    if (l > 0) some_positive = true;
  }
  if (!some_positive) return false;
  for (int v = 0; v < n; ++v) {
    Int lhs = 0;
    for (int i = 0; i < k; ++i) lhs += c.lambda[i] * s.sign(i) * leaves.classes[i][v];
    if (lhs != c.mu * leaves.alpha[v]) return false;
  }
  std::vector<Int> all = c.lambda;
  all.push_back(c.mu);
  return content(all) == 1;
}

CensusReport census(const LeafSet& leaves, const CensusOptions& opts) {
  int k = static_cast<int>(leaves.classes.size());
  require(k <= opts.cap, ErrorKind::CapExceeded,
          std::to_string(k) + " classes against a cap of " + std::to_string(opts.cap));
  auto start = std::chrono::steady_clock::now();
  std::uint64_t total = std::uint64_t(1) << k;
  CensusReport report;
  report.total = Int(1) << k;
  report.results.resize(total);

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      SignFunction s = SignFunction::from_mask(static_cast<std::uint32_t>(mask), k);
      FeasibilityResult r = realizable(leaves, s);
      require(verify_feasibility(leaves, s, r), ErrorKind::Internal,
              "census produced unverifiable evidence for s = " + s.to_string());
      report.results[mask] = std::move(r);
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || total < 2 * static_cast<std::uint64_t>(jobs)) {
    run(0, total);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::uint64_t b = j * chunk, e = std::min(total, b + chunk);
      if (b < e)
        pool.emplace_back([&, b, e, j] {
          try {
            run(b, e);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  for (const FeasibilityResult& r : report.results) (r.feasible ? report.feasible : report.infeasible)++;
  report.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  return report;
}

std::optional<MultisetCertificate> find_multiset_certificate(const LeafSet& leaves,
                                                             const SignFunction& s,
                                                             int k_max) {
  check_signs(leaves, s);
  require(k_max >= 2, ErrorKind::InvalidParams, "k_max below 2");
  int n = leaves.q.num_vertices();
  std::vector<int> plus, minus;
  for (int i = 0; i < s.size; ++i) (s.sign(i) > 0 ? plus : minus).push_back(i);
  if (plus.empty() || minus.empty()) return std::nullopt;

  // Nondecreasing index tuples of length k enumerate multisets in
  // lexicographic order.
  auto for_each_multiset = [&](const std::vector<int>& pool, int k, auto&& visit) {
    std::vector<int> pick(k, 0);
    for (;;) {
      if (!visit(pick)) return true;  // visit returns false to stop
      int i = k - 1;
      for (; i >= 0; --i) {
        if (pick[i] + 1 < static_cast<int>(pool.size())) {
          int next = pick[i] + 1;
          for (int j = i; j < k; ++j) pick[j] = next;
          break;
        }
      }
      if (i < 0) return false;
    }
  };

  for (int k = 2; k <= k_max; ++k) {
    std::map<DimVector, std::vector<int>> sums;
    for_each_multiset(plus, k, [&](const std::vector<int>& pick) {
      DimVector total(n, 0);
      for (int p : pick)
        for (int v = 0; v < n; ++v) total[v] += leaves.classes[plus[p]][v];
      sums.emplace(std::move(total), pick);  // keep the first (lex-least) tuple
      return true;
    });
    std::optional<MultisetCertificate> found;
    for_each_multiset(minus, k, [&](const std::vector<int>& pick) {
      DimVector total(n, 0);
      for (int p : pick)
        for (int v = 0; v < n; ++v) total[v] += leaves.classes[minus[p]][v];
      auto it = sums.find(total);
      if (it == sums.end()) return true;
      MultisetCertificate cert;
      for (int p : it->second) cert.plus_classes.push_back(plus[p]);
      for (int p : pick) cert.minus_classes.push_back(minus[p]);
      found = std::move(cert);
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool verify_multiset_certificate(const LeafSet& leaves, const SignFunction& s,
                                 const MultisetCertificate& cert) {
  check_signs(leaves, s);
  if (cert.plus_classes.empty() || cert.plus_classes.size() != cert.minus_classes.size())
    return false;
  int n = leaves.q.num_vertices();
  DimVector lhs(n, 0), rhs(n, 0);
  for (int i : cert.plus_classes) {
    if (i < 0 || i >= s.size || s.sign(i) <= 0) return false;
    for (int v = 0; v < n; ++v) lhs[v] += leaves.classes[i][v];
  }
  for (int i : cert.minus_classes) {
    if (i < 0 || i >= s.size || s.sign(i) >= 0) return false;
    for (int v = 0; v < n; ++v) rhs[v] += leaves.classes[i][v];
  }
  return lhs == rhs;
}

SignFunction extend_signs(const LeafSet& from, const LeafSet& to, const SignFunction& s,
                          int default_sign) {
  check_signs(from, s);
  require(default_sign == 1 || default_sign == -1, ErrorKind::InvalidParams,
          "default sign must be +1 or -1");
  int tn = to.q.num_vertices();
  std::vector<int> where(from.q.num_vertices(), -1);
  for (int v = 0; v < from.q.num_vertices(); ++v) {
    auto it = to.q.index.find(from.q.vertices[v]);
    if (it == to.q.index.end())
      fail(ErrorKind::NotAnExtension,
           "vertex '" + from.q.vertices[v] + "' missing from the target quiver");
    where[v] = it->second;
  }

  SignFunction out;
  out.size = static_cast<int>(to.classes.size());
  require(out.size <= 32, ErrorKind::TooLarge, "sign function beyond 32 classes");
  if (default_sign < 0) out.bits = out.size >= 32 ? ~0u : (1u << out.size) - 1u;

  for (int i = 0; i < s.size; ++i) {
    DimVector embedded(tn, 0);
    for (int v = 0; v < from.q.num_vertices(); ++v) embedded[where[v]] = from.classes[i][v];
    auto it = std::find(to.classes.begin(), to.classes.end(), embedded);
    if (it == to.classes.end())
      fail(ErrorKind::NotAnExtension,
           "class " + format_dim_vector(from.q, from.classes[i]) +
               " does not land in the target classes");
    int pos = static_cast<int>(it - to.classes.begin());
    if (s.sign(i) < 0)
      out.bits |= 1u << pos;
    else
      out.bits &= ~(1u << pos);
  }
  return out;
}

StarFamily make_star_family(int n, int m) {
  require(n >= 2 && m >= 1 && m <= n - 1, ErrorKind::InvalidParams,
          "star family needs 1 <= m <= n-1");
  std::vector<std::string> vertices{"x"};
  for (int i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  vertices.push_back("y");
  std::vector<std::pair<std::string, std::string>> arrows;
  for (int i = 1; i <= n; ++i) arrows.emplace_back("x", std::to_string(i));
  for (int i = 1; i <= n; ++i) arrows.emplace_back("y", std::to_string(i));
  StarFamily fam;
  fam.q = build_quiver(vertices, arrows);
  fam.alpha.assign(n + 2, 1);
  fam.theta.assign(n + 2, Rat(-1));
  fam.theta.front() = m;
  fam.theta.back() = n - m;
  fam.x = 0;
  fam.y = n + 1;
  return fam;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4a04e3ab3807bULL;
  return z ^ (z >> 31);
}

// One independent word stream per (seed, trial), so trial order and thread
// layout cannot change the draws.
std::uint64_t trial_word(std::uint64_t seed, std::int64_t trial, int word) {
  std::uint64_t z = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
  for (int i = 0; i <= word; ++i) z = splitmix64(z);
  return z;
}

}  // namespace

McReport monte_carlo_nonprojective(int n, int m, const McOptions& opts) {
  require(opts.trials > 0, ErrorKind::InvalidParams, "trials must be positive");
  require(m >= 2 && m <= n - 2, ErrorKind::InvalidParams,
          "the probability setup needs 2 <= m <= n-2");
  StarFamily fam = make_star_family(n, m);
  LeafSet leaves = enumerate_leaves(fam.q, fam.alpha, fam.theta, fam.x);
  int k = static_cast<int>(leaves.classes.size());

  // Spoke-set lookup used by the K2 condition: class index by the bitmask of
  // its spokes.
  std::vector<int> by_spokes;
  int window = 2 * m;
  std::vector<std::pair<int, int>> partitions;  // (class of I, class of I^c in window)
  if (opts.method == McMethod::K2) {
    by_spokes.assign(std::size_t(1) << n, -1);
    for (int i = 0; i < k; ++i) {
      std::uint32_t mask = 0;
      for (int sp = 1; sp <= n; ++sp)
        if (leaves.classes[i][sp] != 0) mask |= 1u << (sp - 1);
      by_spokes[mask] = i;
    }
    std::uint32_t wmask = (1u << window) - 1;
    for (std::uint32_t sub = 0; sub <= wmask; ++sub) {
      if (__builtin_popcount(sub) != m || !(sub & 1u)) continue;  // fix spoke 1
      int a = by_spokes[sub], b = by_spokes[wmask & ~sub];
      require(a >= 0 && b >= 0, ErrorKind::Internal, "missing window class");
      partitions.emplace_back(a, b);
    }
  } else {
    require(k <= 32, ErrorKind::TooLarge, "lp trials beyond 32 classes");
  }

  McReport rep;
  rep.n = n;
  rep.m = m;
  rep.trials = opts.trials;
  rep.seed = opts.seed;
  rep.method = opts.method;

  int words = (k + 63) / 64;
  auto run = [&](std::int64_t begin, std::int64_t end, std::int64_t& hits) {
    for (std::int64_t trial = begin; trial < end; ++trial) {
      std::vector<std::uint64_t> draw(words);
      for (int w = 0; w < words; ++w) draw[w] = trial_word(opts.seed, trial, w);
      auto sign_of = [&](int i) { return (draw[i >> 6] >> (i & 63)) & 1 ? -1 : +1; };
      bool hit = false;
      if (opts.method == McMethod::Lp) {
        SignFunction s = SignFunction::from_mask(static_cast<std::uint32_t>(draw[0]), k);
        FeasibilityResult r = realizable(leaves, s);
        require(verify_feasibility(leaves, s, r), ErrorKind::Internal,
                "unverifiable trial evidence");
        hit = !r.feasible;
      } else {
        bool both_plus = false, both_minus = false;
        for (const auto& [a, b] : partitions) {
          if (sign_of(a) > 0 && sign_of(b) > 0) both_plus = true;
          if (sign_of(a) < 0 && sign_of(b) < 0) both_minus = true;
          if (both_plus && both_minus) break;
        }
        hit = both_plus && both_minus;
      }
      hits += hit;
    }
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    run(0, opts.trials, rep.hits);
  } else {
    std::vector<std::int64_t> partial(jobs, 0);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    std::int64_t chunk = (opts.trials + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::int64_t b = j * chunk, e = std::min<std::int64_t>(opts.trials, b + chunk);
      if (b < e)
        pool.emplace_back([&, b, e, j] {
          try {
            run(b, e, partial[j]);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
    for (std::int64_t h : partial) rep.hits += h;
  }

  rep.estimate = Rat(rep.hits, rep.trials);
  rep.stderr_sq = rep.estimate * (1 - rep.estimate) / opts.trials;
  return rep;
}

}  // namespace qv
