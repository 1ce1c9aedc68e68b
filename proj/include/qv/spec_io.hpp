#pragma once

// JSON problem files.  A file describes one instance: vertices, arrows,
// dimensions, stability weights, optional hub vertices, optional framing
// (which triggers the framed-to-unframed rewrite), and an optional explicit
// class list overriding enumeration.

#include <string>
#include <vector>

#include "qv/leaves.hpp"
#include "qv/quiver.hpp"

namespace qv {

struct ProblemSpec {
  Quiver q;
  DimVector alpha;
  Stability theta;
  int x = 0;
  std::optional<int> y;
  std::vector<DimVector> phi;  // empty unless the file pins the classes
};

ProblemSpec parse_problem(const std::string& json_text);
ProblemSpec load_problem(const std::string& path);

LeafSet problem_leaves(const ProblemSpec& spec);

}  // namespace qv
