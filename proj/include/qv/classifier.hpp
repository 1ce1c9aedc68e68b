#pragma once

// Deciding which sign functions on the leaf classes are realized by an exact
// stability parameter, and therefore which locally projective resolutions are
// projective.
//
// The decision is exact: a sign function s is realizable iff some rational
// theta' satisfies theta'.alpha = 0 and sign(theta'.beta) = s(beta) strictly
// for every class.  Strictness is decided by maximizing a margin t under box
// bounds -1 <= theta'_v <= 1; the system is solvable iff the optimum is
// positive.  Infeasible verdicts carry a nonnegative combination
// sum lambda_beta s(beta) beta = mu alpha with lambda != 0, the dual
// obstruction, and every verdict can be replayed by verify_feasibility().

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qv/leaves.hpp"

namespace qv {

// Signs of the classes in LeafSet order, packed small: bit i set means the
// i-th class is labeled '-'.  At most 32 classes.
struct SignFunction {
  std::uint32_t bits = 0;
  int size = 0;

  int sign(int i) const { return (bits >> i) & 1u ? -1 : +1; }
  SignFunction flipped() const {
    SignFunction f = *this;
    f.bits = ~bits & ((size >= 32 ? ~0u : (1u << size) - 1u));
    return f;
  }
  std::string to_string() const;  // '+' / '-' per class
  static SignFunction from_string(const std::string& text);
  static SignFunction from_mask(std::uint32_t mask, int size);
};

struct Witness {
  std::vector<Int> theta;  // primitive integer stability, orthogonal to alpha
};

struct Certificate {
  std::vector<Int> lambda;  // one nonnegative weight per class, not all zero
  Int mu = 0;               // sum lambda_i s_i beta_i == mu alpha
};

struct FeasibilityResult {
  bool feasible = false;
  Witness witness;          // set iff feasible
  Certificate certificate;  // set iff not feasible
};

FeasibilityResult realizable(const LeafSet& leaves, const SignFunction& s);

// Replays the evidence against (leaves, s) from scratch; no solver state is
// trusted.  Also insists on the normalization (primitive witness, gcd-one
// certificate).
bool verify_feasibility(const LeafSet& leaves, const SignFunction& s,
                        const FeasibilityResult& result);

struct CensusOptions {
  int cap = 24;  // refuse more classes than this (2^cap verdicts)
  int jobs = 1;
};

struct CensusReport {
  Int total = 0;
  std::int64_t feasible = 0;
  std::int64_t infeasible = 0;
  std::vector<FeasibilityResult> results;  // indexed by sign mask
  std::uint64_t millis = 0;
};

// Verdicts for all sign functions, mask order 0 .. 2^k - 1 (mask bit i is the
// sign of class i, '+' for 0).  Every verdict is verified before the report
// is returned.
CensusReport census(const LeafSet& leaves, const CensusOptions& opts = {});

// A pair of equal-size multisets of classes, all '+' on one side and all '-'
// on the other, with equal sums.  Existence forces every stability parameter
// to vanish somewhere on the classes, so s is not realizable.
struct MultisetCertificate {
  std::vector<int> plus_classes;   // indices into LeafSet order, nondecreasing
  std::vector<int> minus_classes;  // same size
};

// Smallest k in [2, k_max] first, then lexicographic in the index tuples;
// the first find is returned, so results are reproducible.
std::optional<MultisetCertificate> find_multiset_certificate(const LeafSet& leaves,
                                                             const SignFunction& s,
                                                             int k_max);

bool verify_multiset_certificate(const LeafSet& leaves, const SignFunction& s,
                                 const MultisetCertificate& cert);

// Transports s along an inclusion of quivers: classes of `from` are matched
// by vertex name inside `to` (extension by zero), which must identify them
// with classes of `to`; new classes get default_sign.  Throws NotAnExtension
// when the matching fails.
SignFunction extend_signs(const LeafSet& from, const LeafSet& to, const SignFunction& s,
                          int default_sign);

// The two-hub star family: spokes 1..n, arrows from both hubs to every
// spoke, all-ones dimension vector, theta = (m, -1, ..., -1, n - m).
struct StarFamily {
  Quiver q;
  DimVector alpha;
  Stability theta;
  int x = 0, y = 0;
};

StarFamily make_star_family(int n, int m);

enum class McMethod { Lp, K2 };

struct McOptions {
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  McMethod method = McMethod::Lp;
  int jobs = 1;
};

struct McReport {
  int n = 0, m = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  McMethod method = McMethod::Lp;
  std::int64_t hits = 0;   // trials whose sign function was found nonrealizable
  Rat estimate = 0;        // hits / trials
  Rat stderr_sq = 0;       // estimate (1 - estimate) / trials, exact
};

// Estimates the probability that a uniformly random sign function on the
// star family's classes is not realizable.  method Lp decides each trial
// exactly; method K2 only tests the sufficient condition that some
// equal-split partition of the first 2m spokes is all '+' and some other is
// all '-', so it reports a lower-bound statistic.
McReport monte_carlo_nonprojective(int n, int m, const McOptions& opts);

}  // namespace qv
