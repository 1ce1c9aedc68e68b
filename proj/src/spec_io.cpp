#include "qv/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qv/error.hpp"
#include "qv/rational.hpp"

namespace qv {

namespace {

using nlohmann::json;

Rat read_weight(const json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long long>(v.get<std::int64_t>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  fail(ErrorKind::InvalidParams, "stability weights must be integers or \"p/q\" strings");
}

ProblemSpec from_json(const json& doc) {
  require(doc.is_object(), ErrorKind::InvalidParams, "problem file must be a JSON object");
  require(doc.contains("vertices") && doc.contains("arrows") && doc.contains("dim") &&
              doc.contains("theta"),
          ErrorKind::InvalidParams, "required fields: vertices, arrows, dim, theta");

  std::vector<std::string> vertices = doc.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const json& a : doc.at("arrows")) {
    require(a.is_object() && a.contains("src") && a.contains("tgt"),
            ErrorKind::InvalidParams, "each arrow needs src and tgt");
    arrows.emplace_back(a.at("src").get<std::string>(), a.at("tgt").get<std::string>());
  }
  Quiver q = build_quiver(vertices, arrows);

  DimVector alpha(vertices.size(), 0);
  for (const auto& [name, value] : doc.at("dim").items())
    alpha[q.vertex(name)] = value.get<std::int64_t>();
  require(doc.at("dim").size() == vertices.size(), ErrorKind::InvalidParams,
          "dim must assign every vertex");

  Stability theta(vertices.size(), Rat(0));
  for (const auto& [name, value] : doc.at("theta").items())
    theta[q.vertex(name)] = read_weight(value);
  require(doc.at("theta").size() == vertices.size(), ErrorKind::InvalidParams,
          "theta must assign every vertex");

  ProblemSpec spec;
  if (doc.contains("framing")) {
    DimVector framing(vertices.size(), 0);
    for (const auto& [name, value] : doc.at("framing").items())
      framing[q.vertex(name)] = value.get<std::int64_t>();
    Unframed unframed = framed_to_unframed(q, alpha, framing);
    spec.theta = unframe_stability(unframed, theta);
    spec.q = std::move(unframed.q);
    spec.alpha = std::move(unframed.alpha);
    spec.y = unframed.infinity;
  } else {
    spec.q = std::move(q);
    spec.alpha = std::move(alpha);
    spec.theta = std::move(theta);
  }

  if (doc.contains("x")) spec.x = spec.q.vertex(doc.at("x").get<std::string>());
  if (doc.contains("y")) spec.y = spec.q.vertex(doc.at("y").get<std::string>());

  if (doc.contains("phi")) {
    for (const json& row : doc.at("phi")) {
      DimVector beta = row.get<DimVector>();
      require(beta.size() == spec.alpha.size(), ErrorKind::ShapeMismatch,
              "each class needs one entry per vertex (after unframing)");
      spec.phi.push_back(std::move(beta));
    }
  }
  validate_stability(spec.q, spec.alpha, spec.theta);
  return spec;
}

}  // namespace

ProblemSpec parse_problem(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, false);
  require(!doc.is_discarded(), ErrorKind::InvalidParams, "problem file is not valid JSON");
  return from_json(doc);
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::InvalidParams, "cannot read problem file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

LeafSet problem_leaves(const ProblemSpec& spec) {
  if (spec.phi.empty()) return enumerate_leaves(spec.q, spec.alpha, spec.theta, spec.x, {});
  LeafSet leaves;
  leaves.q = spec.q;
  leaves.alpha = spec.alpha;
  leaves.theta = spec.theta;
  leaves.x = spec.x;
  for (const DimVector& beta : spec.phi) {
    bool in_box = beta[spec.x] >= 1 && beta != spec.alpha;
    for (std::size_t v = 0; v < beta.size() && in_box; ++v)
      in_box = beta[v] >= 0 && beta[v] <= spec.alpha[v];
    require(in_box, ErrorKind::InvalidParams,
            "explicit classes must contain the base vertex and fit under the dimensions");
    leaves.classes.push_back(beta);
  }
  std::sort(leaves.classes.begin(), leaves.classes.end());
  leaves.classes.erase(std::unique(leaves.classes.begin(), leaves.classes.end()),
                       leaves.classes.end());
  for (const DimVector& beta : leaves.classes)
    leaves.multiplicity.push_back(arrow_multiplicity(spec.q, spec.alpha, beta));
  return leaves;
}

}  // namespace qv
