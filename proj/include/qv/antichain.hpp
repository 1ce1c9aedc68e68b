#pragma once

// Antichains of subsets of {0, .., n-1} and the blocker construction.
//
// An upward-closed family is represented by the antichain of its minimal
// members.  The blocker of a family F is the family of sets meeting every
// member of F; it is again upward closed, it equals the complements of the
// non-members of F, and taking it twice returns F.  A generalization to
// integer vectors below a cap is provided for the same duality on boxes.
//
// Subsets are bitmasks; n is capped at 20 throughout.

#include <cstdint>
#include <vector>

#include "qv/rational.hpp"

namespace qv {

using SetMask = std::uint32_t;

struct Antichain {
  int ground = 0;                // size of the ground set
  std::vector<SetMask> minimal;  // pairwise incomparable, ascending by mask value
};

// Drops supersets and duplicates, sorts.  Accepts any list of subsets.
Antichain normalize_antichain(int ground, std::vector<SetMask> sets);

// All members of the upward closure, ascending by mask value.
std::vector<SetMask> upward_closure(const Antichain& a);

bool family_contains(const Antichain& a, SetMask set);

// Blocker computed from the definition: minimal sets meeting every minimal
// member of a.
Antichain blocker(const Antichain& a);

// Blocker computed from the complement description: the minimal elements of
// { complement(I) : I not in the closure of a }.
Antichain blocker_by_complements(const Antichain& a);

// The vector analogue on the box 0 <= v <= cap: a family is upward closed
// when it contains every w >= v for each member v.  Families are explicit
// member lists here (the boxes involved are small).
struct VectorFamily {
  std::vector<std::int64_t> cap;
  std::vector<std::vector<std::int64_t>> members;  // ascending lexicographic
};

// Checks upward-closedness (throws NotUpwardClosed otherwise) and sorts.
VectorFamily make_vector_family(std::vector<std::int64_t> cap,
                                std::vector<std::vector<std::int64_t>> members);

// { w in the box : cap - w not in f }; upward closed, and an involution.
VectorFamily vector_blocker(const VectorFamily& f);

bool vector_family_contains(const VectorFamily& f, const std::vector<std::int64_t>& v);

}  // namespace qv
