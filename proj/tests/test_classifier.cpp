#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "support/oracles.hpp"

#include "qv/catalog.hpp"
#include "qv/classifier.hpp"
#include "qv/error.hpp"

using namespace qv;

namespace {

std::vector<int> signs_of(const SignFunction& s) {
  std::vector<int> out(s.size);
  for (int i = 0; i < s.size; ++i) out[i] = s.sign(i);
  return out;
}

}  // namespace

TEST_CASE("sign function packing round-trips") {
  SignFunction s = SignFunction::from_string("+-++-");
  CHECK(s.size == 5);
  CHECK(s.sign(0) == 1);
  CHECK(s.sign(1) == -1);
  CHECK(s.to_string() == "+-++-");
  CHECK(s.flipped().to_string() == "-+--+");
  CHECK(s.flipped().flipped().bits == s.bits);
  CHECK(SignFunction::from_mask(0b10010, 5).to_string() == "+-++-");
  CHECK_THROWS_AS(SignFunction::from_string("+x-"), Error);
}

TEST_CASE("an all-plus assignment on star4 is realizable with a verified witness") {
  LeafSet leaves = example_leaves(find_example("star4"));
  SignFunction s = SignFunction::from_string("++++++");
  FeasibilityResult r = realizable(leaves, s);
  CHECK(r.feasible);
  CHECK(verify_feasibility(leaves, s, r));
  // the witness must be primitive
  Int g = content(r.witness.theta);
  CHECK(g == 1);
}

TEST_CASE("opposed split pairs on star4 are obstructed by an equal-sum pair") {
  LeafSet leaves = example_leaves(find_example("star4"));
  // classes [0] and [5] are complementary splits, as are [1],[4] and [2],[3]
  SignFunction s = SignFunction::from_string("+-++-+");
  FeasibilityResult r = realizable(leaves, s);
  CHECK_FALSE(r.feasible);
  CHECK(verify_feasibility(leaves, s, r));

  auto cert = find_multiset_certificate(leaves, s, 2);
  REQUIRE(cert.has_value());
  CHECK(cert->plus_classes == std::vector<int>{0, 5});
  CHECK(cert->minus_classes == std::vector<int>{1, 4});
  CHECK(verify_multiset_certificate(leaves, s, *cert));

  MultisetCertificate bad = *cert;
  bad.minus_classes = {2, 3};  // equal sums but signed '+' under s
  CHECK_FALSE(verify_multiset_certificate(leaves, s, bad));
}

TEST_CASE("verification rejects doctored evidence") {
  LeafSet leaves = example_leaves(find_example("star4"));
  SignFunction s = SignFunction::from_string("++++++");
  FeasibilityResult r = realizable(leaves, s);
  REQUIRE(r.feasible);

  FeasibilityResult scaled = r;
  for (Int& c : scaled.witness.theta) c *= 2;  // right signs, not primitive
  CHECK_FALSE(verify_feasibility(leaves, s, scaled));

  FeasibilityResult crossed = r;
  crossed.feasible = false;
  crossed.certificate.lambda.assign(leaves.classes.size(), 1);
  crossed.certificate.mu = 0;
  CHECK_FALSE(verify_feasibility(leaves, s, crossed));
}

TEST_CASE("star4 census agrees with elimination and with pair certificates") {
  LeafSet leaves = example_leaves(find_example("star4"));
  CensusReport report = census(leaves);
  CHECK(report.total == 64);
  CHECK(report.feasible == 46);
  CHECK(report.infeasible == 18);

  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    SignFunction s = SignFunction::from_mask(mask, 6);
    bool lp = report.results[mask].feasible;
    CHECK(lp == oracle::signs_feasible(leaves.alpha, leaves.classes, signs_of(s)));
    // on this example infeasibility always comes from a size-2 multiset
    auto cert = find_multiset_certificate(leaves, s, 2);
    CHECK(cert.has_value() == !lp);
    if (cert) CHECK(verify_multiset_certificate(leaves, s, *cert));
  }
}

TEST_CASE("census is independent of the worker count") {
  LeafSet leaves = example_leaves(find_example("star4"));
  CensusOptions serial, parallel;
  serial.jobs = 1;
  parallel.jobs = 3;
  CensusReport a = census(leaves, serial);
  CensusReport b = census(leaves, parallel);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i)
    CHECK(a.results[i].feasible == b.results[i].feasible);
}

TEST_CASE("census respects sign flips and class deletion") {
  LeafSet leaves = example_leaves(find_example("star4"));
  CensusReport full = census(leaves);

  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    CHECK(full.results[mask].feasible == full.results[~mask & 63u].feasible);
    if (!full.results[mask].feasible) continue;
    // flipping every sign is witnessed by the negated parameter
    FeasibilityResult negated = full.results[mask];
    for (Int& w : negated.witness.theta) w = -w;
    CHECK(verify_feasibility(leaves, SignFunction::from_mask(mask, 6).flipped(), negated));
  }

  // dropping a class never turns a realizable assignment unrealizable
  for (int drop = 0; drop < 6; ++drop) {
    LeafSet sub = leaves;
    sub.classes.erase(sub.classes.begin() + drop);
    sub.multiplicity.erase(sub.multiplicity.begin() + drop);
    CensusReport part = census(sub);
    REQUIRE(part.results.size() == 32);
    CHECK(2 * part.infeasible <= full.infeasible);
    for (std::uint32_t m = 0; m < 32; ++m) {
      std::uint32_t low = ((m >> drop) << (drop + 1)) | (m & ((1u << drop) - 1u));
      bool either = full.results[low].feasible || full.results[low | (1u << drop)].feasible;
      CHECK(part.results[m].feasible == either);
    }
  }
}

TEST_CASE("census caps the class count it will enumerate over") {
  LeafSet leaves = example_leaves(find_example("star4"));
  CensusOptions opts;
  opts.cap = 3;
  CHECK_THROWS_AS(census(leaves, opts), Error);
}

TEST_CASE("a class-free instance has the single empty assignment, realizable") {
  LeafSet leaves = example_leaves(find_example("star5"));
  REQUIRE(leaves.classes.empty());
  CensusReport report = census(leaves);
  CHECK(report.total == 1);
  CHECK(report.feasible == 1);
  SignFunction empty = SignFunction::from_string("");
  FeasibilityResult r = realizable(leaves, empty);
  CHECK(r.feasible);
  CHECK(verify_feasibility(leaves, empty, r));
}

TEST_CASE("extension transports matched classes and defaults the rest") {
  LeafSet from = example_leaves(find_example("star4"));
  LeafSet to = example_leaves(find_example("star4x2"));
  SignFunction s = SignFunction::from_string("+-++-+");
  // the six old classes land at target positions 1,3,4,6,7,8
  CHECK(extend_signs(from, to, s, -1).to_string() == "-+--+-+-+-");
  CHECK(extend_signs(from, to, s, +1).to_string() == "+++-+++-++");
  // old classes always override the default, including on the all-minus base
  SignFunction lows = SignFunction::from_string("------");
  CHECK(extend_signs(from, to, lows, +1).to_string() == "+-+--+---+");

  // legs3 contains star4's vertices but not its embedded classes
  LeafSet legs = example_leaves(find_example("legs3"));
  CHECK_THROWS_AS(extend_signs(from, legs, s, 1), Error);
  CHECK_THROWS_AS(extend_signs(from, to, s, 0), Error);
}

TEST_CASE("monte carlo runs are reproducible and job-count independent") {
  McOptions base;
  base.trials = 400;
  base.seed = 99;
  base.jobs = 1;
  McReport a = monte_carlo_nonprojective(5, 2, base);
  McOptions threaded = base;
  threaded.jobs = 4;
  McReport b = monte_carlo_nonprojective(5, 2, threaded);
  CHECK(a.hits == b.hits);
  CHECK(a.estimate == b.estimate);
  CHECK(a.estimate == Rat(a.hits, a.trials));
  CHECK(a.stderr_sq == a.estimate * (1 - a.estimate) / a.trials);
}

TEST_CASE("the partition criterion never overcounts the exact method") {
  McOptions opts;
  opts.trials = 300;
  opts.seed = 5;
  opts.jobs = 1;
  McReport lp = monte_carlo_nonprojective(4, 2, opts);
  opts.method = McMethod::K2;
  McReport k2 = monte_carlo_nonprojective(4, 2, opts);
  CHECK(k2.hits <= lp.hits);
}

TEST_CASE("star family construction matches its description") {
  StarFamily fam = make_star_family(4, 2);
  CHECK(fam.q.num_vertices() == 6);
  CHECK(fam.q.num_arrows() == 8);
  CHECK(fam.theta[fam.x] == 2);
  CHECK(fam.theta[fam.y] == 2);
  CHECK(dot(fam.theta, fam.alpha) == 0);
  CHECK_THROWS_AS(make_star_family(2, 5), Error);
}
