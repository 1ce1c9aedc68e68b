#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>
#include <vector>

#include "support/oracles.hpp"

#include "qv/antichain.hpp"
#include "qv/catalog.hpp"
#include "qv/error.hpp"
#include "qv/patterns.hpp"

using namespace qv;

namespace {

template <typename F>
std::optional<ErrorKind> kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  return std::nullopt;
}

// Families of subsets of [2^n] encoded as bitsets over the masks; true when
// the members are pairwise incomparable.
bool is_antichain(std::uint32_t family, int n) {
  int top = 1 << n;
  for (int i = 0; i < top; ++i) {
    if (!(family >> i & 1u)) continue;
    for (int j = 0; j < top; ++j)
      if (j != i && (family >> j & 1u) && (i & j) == i) return false;
  }
  return true;
}

ArrowMask labels(const DoubleQuiver& dq, const std::vector<std::string>& names) {
  return pattern_from_labels(dq, names);
}

}  // namespace

TEST_CASE("normalization drops supersets and duplicates") {
  Antichain a = normalize_antichain(4, {0b0011, 0b0111, 0b1000, 0b0011});
  CHECK(a.ground == 4);
  CHECK(a.minimal == std::vector<SetMask>{0b0011, 0b1000});
  CHECK_THROWS_AS(normalize_antichain(3, {0b1000}), Error);
  CHECK_THROWS_AS(normalize_antichain(21, {}), Error);
}

TEST_CASE("the closure of the five-element two-set family has eleven members") {
  Antichain a = normalize_antichain(5, {0b00011, 0b11100});
  std::vector<SetMask> closure = upward_closure(a);
  CHECK(closure == std::vector<SetMask>{3, 7, 11, 15, 19, 23, 27, 28, 29, 30, 31});
  CHECK(family_contains(a, 0b11111));
  CHECK_FALSE(family_contains(a, 0b00001));
  CHECK_FALSE(family_contains(a, 0));
}

TEST_CASE("blockers agree across constructions and square to the identity") {
  // all antichains on small ground sets, counted against the known totals
  const int expected[] = {2, 3, 6, 20, 168};
  for (int n = 0; n <= 4; ++n) {
    int found = 0;
    std::uint32_t families = std::uint32_t(1) << (1 << n);
    for (std::uint32_t f = 0; f < families; ++f) {
      if (!is_antichain(f, n)) continue;
      ++found;
      Antichain a;
      a.ground = n;
      for (int i = 0; i < (1 << n); ++i)
        if (f >> i & 1u) a.minimal.push_back(static_cast<SetMask>(i));
      Antichain b = blocker(a);
      CHECK(b.minimal == blocker_by_complements(a).minimal);
      CHECK(b.minimal == oracle::brute_blocker(n, a.minimal));
      CHECK(blocker(b).minimal == a.minimal);
    }
    CHECK(found == expected[n]);
  }
}

TEST_CASE("blocker properties hold on random larger ground sets") {
  std::mt19937_64 rng(417);
  for (int trial = 0; trial < 600; ++trial) {
    int n = static_cast<int>(oracle::rand_int(rng, 0, 10));
    std::vector<SetMask> sets;
    int count = static_cast<int>(oracle::rand_int(rng, 0, 6));
    for (int i = 0; i < count; ++i)
      sets.push_back(static_cast<SetMask>(oracle::rand_int(rng, 0, (1 << n) - 1)));
    Antichain a = normalize_antichain(n, sets);
    Antichain b = blocker(a);
    CHECK(b.minimal == blocker_by_complements(a).minimal);
    CHECK(blocker(b).minimal == a.minimal);
    if (n <= 8) CHECK(b.minimal == oracle::brute_blocker(n, a.minimal));
  }
}

TEST_CASE("the five-pointed star family and its blocker are the known pair") {
  const CatalogEntry& e = find_example("star5");
  REQUIRE(e.good_family.has_value());
  CHECK(e.good_family->minimal == std::vector<SetMask>{0b00011, 0b11100});
  Antichain dual = blocker(*e.good_family);
  CHECK(dual.minimal == std::vector<SetMask>{5, 6, 9, 10, 17, 18});
  CHECK(blocker(dual).minimal == e.good_family->minimal);
  CHECK(upward_closure(*e.good_family).size() == 11);
}

TEST_CASE("vector families mirror the set calculus on boxes") {
  VectorFamily f = make_vector_family({2, 1}, {{1, 1}, {2, 1}});
  VectorFamily b = vector_blocker(f);
  CHECK(b.members ==
        std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 1}, {2, 0}, {2, 1}});
  CHECK(vector_blocker(b).members == f.members);
  CHECK(vector_family_contains(b, {2, 0}));
  CHECK_FALSE(vector_family_contains(b, {1, 0}));

  CHECK(kind_of([] {
          make_vector_family({1, 1, 1}, {{1, 0, 0}});
        }) == ErrorKind::NotUpwardClosed);
  CHECK(kind_of([] { make_vector_family({2000, 2000}, {}); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] {
          make_vector_family({2, 1}, {{3, 0}});
        }) == ErrorKind::InvalidParams);
}

TEST_CASE("with an all-ones cap the vector blocker is the set blocker") {
  std::mt19937_64 rng(418);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(oracle::rand_int(rng, 1, 6));
    std::vector<SetMask> sets;
    int count = static_cast<int>(oracle::rand_int(rng, 0, 4));
    for (int i = 0; i < count; ++i)
      sets.push_back(static_cast<SetMask>(oracle::rand_int(rng, 0, (1 << n) - 1)));
    Antichain a = normalize_antichain(n, sets);

    auto as_vectors = [n](const std::vector<SetMask>& masks) {
      std::vector<std::vector<std::int64_t>> out;
      for (SetMask m : masks) {
        std::vector<std::int64_t> v(n);
        for (int i = 0; i < n; ++i) v[i] = m >> i & 1u;
        out.push_back(std::move(v));
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    VectorFamily f =
        make_vector_family(std::vector<std::int64_t>(n, 1), as_vectors(upward_closure(a)));
    CHECK(vector_blocker(f).members == as_vectors(upward_closure(blocker(a))));
  }
}

TEST_CASE("patterns are parsed from labels and drive reachability") {
  const CatalogEntry& e = find_example("star4");
  DoubleQuiver dq = double_quiver(e.q);
  REQUIRE(dq.num_arrows() == 16);

  ArrowMask all_base = labels(dq, {"x>1", "x>2", "x>3", "x>4", "y>1", "y>2", "y>3", "y>4"});
  CHECK(reachable_from(dq, 0, 0) == VertexMask{1});
  CHECK(reachable_from(dq, all_base, 0) == 0b011111);
  CHECK(reachable_from(dq, all_base, 5) == 0b111110);
  CHECK(out_closure(dq, all_base, 0b100001) == 0b111111);

  ArrowMask back = labels(dq, {"1>x*"});
  CHECK(reachable_from(dq, back, 1) == 0b000011);
  CHECK(reachable_from(dq, back, 0) == VertexMask{1});

  CHECK(kind_of([&] { labels(dq, {"x>9"}); }) == ErrorKind::UnknownVertex);
  CHECK(kind_of([&] { labels(dq, {"x>1", "x>1"}); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("the king tester keeps the expected crossing lists") {
  const CatalogEntry& e5 = find_example("star5");
  DoubleQuiver dq5 = double_quiver(e5.q);
  KingTester t5 = make_king_tester(dq5, e5.theta, e5.alpha);
  CHECK(t5.positive_crossings.size() == 63);
  CHECK(t5.flat_crossings.empty());

  const CatalogEntry& e4 = find_example("star4");
  DoubleQuiver dq4 = double_quiver(e4.q);
  KingTester t4 = make_king_tester(dq4, e4.theta, e4.alpha);
  CHECK(t4.positive_crossings.size() == 25);
  CHECK(t4.flat_crossings.size() == 12);

  ArrowMask all5 = labels(dq5, {"x>1", "x>2", "x>3", "x>4", "x>5",
                                "y>1", "y>2", "y>3", "y>4", "y>5"});
  CHECK(t5.semistable(all5));
  CHECK(t5.stable(all5));
  CHECK_FALSE(t5.semistable(0));
  ArrowMask x_only = labels(dq5, {"x>1", "x>2", "x>3", "x>4", "x>5"});
  CHECK_FALSE(t5.semistable(x_only));

  // feeding two spokes from x saturates a weight-zero subset
  ArrowMask pinched = labels(dq4, {"x>1", "x>2", "y>1", "y>2", "y>3", "y>4"});
  CHECK(t4.semistable(pinched));
  CHECK_FALSE(t4.stable(pinched));
}

TEST_CASE("king semistability matches the subrepresentation oracle") {
  const CatalogEntry& e = find_example("star5");
  DoubleQuiver dq = double_quiver(e.q);
  KingTester tester = make_king_tester(dq, e.theta, e.alpha);
  auto strictly_stable = [&](ArrowMask p) {
    int n = dq.base.num_vertices();
    VertexMask full = (VertexMask{1} << n) - 1;
    for (VertexMask sub = 1; sub < full; ++sub) {
      bool closed = true;
      for (int a = 0; a < dq.num_arrows() && closed; ++a) {
        if (!(p >> a & 1u)) continue;
        if ((sub >> dq.arrows[a].src & 1u) && !(sub >> dq.arrows[a].tgt & 1u)) closed = false;
      }
      if (!closed) continue;
      Rat w = 0;
      for (int v = 0; v < n; ++v)
        if (sub >> v & 1u) w += e.theta[v];
      if (w >= 0) return false;
    }
    return true;
  };

  std::mt19937_64 rng(901);
  for (int trial = 0; trial < 2500; ++trial) {
    ArrowMask p = rng() & ((ArrowMask{1} << 20) - 1);
    bool ss = oracle::king_semistable(dq, p, e.theta);
    CHECK(tester.semistable(p) == ss);
    CHECK(is_semistable(dq, p, e.theta, e.alpha) == ss);
    CHECK(tester.stable(p) == strictly_stable(p));
  }
}

TEST_CASE("instability splits into dead spokes and starved hubs") {
  const CatalogEntry& e = find_example("star5");
  DoubleQuiver dq = double_quiver(e.q);
  auto report = [&](ArrowMask p) {
    return instability_report(dq, p, e.theta, e.x, e.y.value());
  };

  ArrowMask all_base = labels(dq, {"x>1", "x>2", "x>3", "x>4", "x>5",
                                   "y>1", "y>2", "y>3", "y>4", "y>5"});
  InstabilityReport healthy = report(all_base);
  CHECK(healthy.semistable);
  CHECK(healthy.dead_spokes.empty());
  CHECK_FALSE(healthy.starved_x);
  CHECK_FALSE(healthy.starved_y);

  InstabilityReport nothing = report(0);
  CHECK_FALSE(nothing.semistable);
  CHECK(nothing.dead_spokes == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(nothing.starved_x);
  CHECK(nothing.starved_y);

  ArrowMask no_spoke3 = labels(dq, {"x>1", "x>2", "x>4", "x>5",
                                    "y>1", "y>2", "y>4", "y>5"});
  InstabilityReport dead3 = report(no_spoke3);
  CHECK_FALSE(dead3.semistable);
  CHECK(dead3.dead_spokes == std::vector<int>{3});
  CHECK_FALSE(dead3.starved_x);
  CHECK_FALSE(dead3.starved_y);

  ArrowMask thin_x = labels(dq, {"x>1", "y>1", "y>2", "y>3", "y>4", "y>5"});
  InstabilityReport starved = report(thin_x);
  CHECK_FALSE(starved.semistable);
  CHECK(starved.dead_spokes.empty());
  CHECK(starved.starved_x);
  CHECK_FALSE(starved.starved_y);

  std::mt19937_64 rng(902);
  for (int trial = 0; trial < 2500; ++trial) {
    ArrowMask p = rng() & ((ArrowMask{1} << 20) - 1);
    InstabilityReport r = report(p);
    CHECK(r.semistable == oracle::king_semistable(dq, p, e.theta));
    CHECK(r.semistable == (r.dead_spokes.empty() && !r.starved_x && !r.starved_y));
  }

  Stability bad = e.theta;
  bad[1] = 2;
  CHECK(kind_of([&] { instability_report(dq, all_base, bad, e.x, e.y.value()); }) ==
        ErrorKind::InvalidStability);
}

TEST_CASE("sign locus membership: frozen star patterns") {
  const CatalogEntry& e = find_example("star4");
  DoubleQuiver dq = double_quiver(e.q);
  LeafSet leaves = example_leaves(e);
  SignLocusTester arrow = make_sign_locus_tester(dq, leaves);
  PathLocusTester path = make_path_locus_tester(dq, leaves, e.y.value());

  ArrowMask all_base = labels(dq, {"x>1", "x>2", "x>3", "x>4", "y>1", "y>2", "y>3", "y>4"});
  ArrowMask split = labels(dq, {"x>1", "x>2", "y>3", "y>4"});
  ArrowMask split_rev = labels(dq, {"x>3", "x>4", "y>1", "y>2"});
  ArrowMask lopsided = labels(dq, {"x>1", "x>2", "x>3", "y>3", "y>4"});

  CHECK(arrow.king.semistable(split));
  CHECK(arrow.king.semistable(split_rev));
  CHECK(arrow.king.semistable(lopsided));

  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    SignFunction s = SignFunction::from_mask(mask, 6);
    // every arrow crossing out of the class supported on the x side is zero,
    // so the split patterns land in no sign locus at all
    CHECK_FALSE(arrow.contains(split, s));
    CHECK_FALSE(path.contains(dq, split, s));
    CHECK_FALSE(arrow.contains(split_rev, s));
    CHECK_FALSE(path.contains(dq, split_rev, s));
    CHECK(arrow.contains(all_base, s));
    CHECK(path.contains(dq, all_base, s));
    // the lopsided pattern pins down the sign of the class through spoke 3
    bool expected = s.sign(5) > 0;
    CHECK(arrow.contains(lopsided, s) == expected);
    CHECK(path.contains(dq, lopsided, s) == expected);
    CHECK(in_sign_locus(dq, lopsided, leaves, s) == expected);
    CHECK(in_sign_locus_by_paths(dq, lopsided, leaves, s, e.y.value()) == expected);
  }
}

TEST_CASE("arrow and path sign locus forms agree on random patterns") {
  const CatalogEntry& e = find_example("star4");
  DoubleQuiver dq = double_quiver(e.q);
  LeafSet leaves = example_leaves(e);
  SignLocusTester arrow = make_sign_locus_tester(dq, leaves);
  PathLocusTester path = make_path_locus_tester(dq, leaves, e.y.value());

  std::mt19937_64 rng(903);
  for (int trial = 0; trial < 4000; ++trial) {
    ArrowMask p = rng() & ((ArrowMask{1} << 16) - 1);
    SignFunction s = SignFunction::from_mask(static_cast<std::uint32_t>(rng() & 63), 6);
    bool in = arrow.contains(p, s);
    CHECK(in == path.contains(dq, p, s));
    if (in) CHECK(arrow.king.semistable(p));
  }

  SignFunction wrong = SignFunction::from_string("+++");
  CHECK(kind_of([&] { in_sign_locus(dq, 0, leaves, wrong); }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("path form requires hub-and-spoke zero-one classes") {
  const CatalogEntry& e = find_example("threevertex");
  DoubleQuiver dq = double_quiver(e.q);
  LeafSet leaves = example_leaves(e);
  CHECK(kind_of([&] {
          make_path_locus_tester(dq, leaves, e.q.num_vertices() - 1);
        }) == ErrorKind::ShapeMismatch);
}

TEST_CASE("good locus membership on the five-pointed star") {
  const CatalogEntry& e = find_example("star5");
  DoubleQuiver dq = double_quiver(e.q);
  StarShape shape = star_shape(e.q, e.x, e.y.value());
  Antichain ifam = *e.good_family;
  Antichain jfam = blocker(ifam);

  ArrowMask all_base = labels(dq, {"x>1", "x>2", "x>3", "x>4", "x>5",
                                   "y>1", "y>2", "y>3", "y>4", "y>5"});
  CHECK(in_good_locus(dq, all_base, shape, ifam, jfam));

  ArrowMask tight = labels(dq, {"x>1", "x>2", "y>1", "y>2", "y>3", "y>4", "y>5"});
  CHECK(in_good_locus(dq, tight, shape, ifam, jfam));

  ArrowMask starved = labels(dq, {"x>1", "y>3", "y>4", "y>5"});
  CHECK_FALSE(in_good_locus(dq, starved, shape, ifam, jfam));

  ArrowMask uncovered = labels(dq, {"x>1", "x>2", "y>1", "y>3"});
  CHECK_FALSE(in_good_locus(dq, uncovered, shape, ifam, jfam));
}

TEST_CASE("witness patterns force every stability parameter to zero") {
  const CatalogEntry& e = find_example("star5");
  DoubleQuiver dq = double_quiver(e.q);
  StarShape shape = star_shape(e.q, e.x, e.y.value());
  Antichain ifam = *e.good_family;
  Antichain jfam = blocker(ifam);

  std::vector<ArrowMask> witnesses = star_witness_patterns(dq, shape, ifam, jfam);
  REQUIRE(witnesses.size() == 8);
  for (ArrowMask p : witnesses) CHECK(in_good_locus(dq, p, shape, ifam, jfam));

  CommonStabilityCone cone = common_stability_cone(dq, witnesses, e.alpha);
  CHECK(cone.zero_only);
  CHECK(cone.normals.size() == 63);

  ArrowMask all_base = labels(dq, {"x>1", "x>2", "x>3", "x>4", "x>5",
                                   "y>1", "y>2", "y>3", "y>4", "y>5"});
  CommonStabilityCone wide = common_stability_cone(dq, {all_base}, e.alpha);
  CHECK_FALSE(wide.zero_only);
}

TEST_CASE("orbit cone membership is king semistability") {
  const CatalogEntry& e = find_example("star5");
  DoubleQuiver dq = double_quiver(e.q);
  CHECK(cone_contains(orbit_cone(dq, 0, e.alpha), e.theta, e.alpha) ==
        is_semistable(dq, 0, e.theta, e.alpha));

  std::mt19937_64 rng(904);
  for (int trial = 0; trial < 400; ++trial) {
    ArrowMask p = rng() & ((ArrowMask{1} << 20) - 1);
    Stability theta(7);
    Rat sum = 0;
    for (int v = 0; v < 6; ++v) {
      theta[v] = oracle::rand_int(rng, -3, 3);
      sum += theta[v];
    }
    theta[6] = -sum;
    OrbitCone cone = orbit_cone(dq, p, e.alpha);
    CHECK(cone_contains(cone, theta, e.alpha) == is_semistable(dq, p, theta, e.alpha));
  }
}
