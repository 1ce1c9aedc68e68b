#pragma once

// Small dense exact-rational linear programming solver.
//
// Two-phase primal simplex with Bland's anticycling rule over cpp_rational,
// so verdicts are exact and deterministic: identical problems pivot
// identically and return identical optima.  Intended for the instance sizes
// this library produces (tens of rows and columns), where a dense tableau is
// the simplest thing that is obviously correct.

#include <optional>
#include <vector>

#include "qv/rational.hpp"

namespace qv::lp {

enum class Rel { Le, Eq, Ge };

struct Row {
  std::vector<Rat> coeff;
  Rel rel = Rel::Le;
  Rat rhs = 0;
};

struct Bounds {
  std::optional<Rat> lo;  // unset = unbounded below
  std::optional<Rat> hi;  // unset = unbounded above
};

struct Problem {
  int vars = 0;
  std::vector<Rat> maximize;  // objective, size vars
  std::vector<Row> rows;
  std::vector<Bounds> bounds;  // size vars; empty means all free
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rat value = 0;          // objective at the optimum (Status::Optimal only)
  std::vector<Rat> x;     // optimal point (Status::Optimal only)
};

Result solve(const Problem& p);

}  // namespace qv::lp
