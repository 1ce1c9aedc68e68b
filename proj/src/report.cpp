#include "qv/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qv {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string finish(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json dim_array(const DimVector& v) {
  ordered_json arr = ordered_json::array();
  for (std::int64_t c : v) arr.push_back(c);
  return arr;
}

ordered_json rat_array(const Stability& theta) {
  ordered_json arr = ordered_json::array();
  for (const Rat& w : theta) arr.push_back(format_rational(w));
  return arr;
}

ordered_json int_array(const std::vector<Int>& v) {
  ordered_json arr = ordered_json::array();
  for (const Int& c : v) arr.push_back(c.str());
  return arr;
}

ordered_json vertex_names(const Quiver& q) {
  ordered_json arr = ordered_json::array();
  for (const std::string& id : q.vertices) arr.push_back(id);
  return arr;
}

ordered_json mask_names(const Quiver& q, VertexMask set) {
  ordered_json arr = ordered_json::array();
  for (int v = 0; v < q.num_vertices(); ++v)
    if (set >> v & 1u) arr.push_back(q.vertices[v]);
  return arr;
}

std::string mask_text(const Quiver& q, VertexMask set) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (set >> v & 1u) {
      if (!first) out += ",";
      out += q.vertices[v];
      first = false;
    }
  return out + "}";
}

// Ground-set elements are reported 1-based, matching the spoke labels the
// families are usually built from.
ordered_json set_json(SetMask set) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < 32; ++i)
    if (set >> i & 1u) arr.push_back(i + 1);
  return arr;
}

std::string set_text(SetMask set) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (set >> i & 1u) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

std::string int_tuple(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

std::string approx(const Rat& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v.convert_to<double>());
  return buf;
}

std::string spokes_text(const Quiver& q, const StarShape& shape, VertexMask positions) {
  VertexMask vertices = 0;
  for (std::size_t p = 0; p < shape.spokes.size(); ++p)
    if (positions >> p & 1u) vertices |= VertexMask{1} << shape.spokes[p];
  return mask_text(q, vertices);
}

ordered_json spokes_json(const Quiver& q, const StarShape& shape, VertexMask positions) {
  VertexMask vertices = 0;
  for (std::size_t p = 0; p < shape.spokes.size(); ++p)
    if (positions >> p & 1u) vertices |= VertexMask{1} << shape.spokes[p];
  return mask_names(q, vertices);
}

ordered_json feasibility_json(const LeafSet& leaves, const FeasibilityResult& result) {
  ordered_json doc;
  doc["feasible"] = result.feasible;
  if (result.feasible) {
    ordered_json witness;
    for (int v = 0; v < leaves.q.num_vertices(); ++v)
      witness[leaves.q.vertices[v]] = result.witness.theta[v].str();
    doc["witness_theta"] = std::move(witness);
  } else {
    doc["certificate"] = {{"lambda", int_array(result.certificate.lambda)},
                          {"mu", result.certificate.mu.str()}};
  }
  return doc;
}

void feasibility_text(std::ostringstream& out, const FeasibilityResult& result) {
  if (result.feasible) {
    out << "verdict: realizable\n";
    out << "witness theta: " << int_tuple(result.witness.theta) << "\n";
  } else {
    out << "verdict: not realizable\n";
    out << "certificate: lambda=" << int_tuple(result.certificate.lambda)
        << " mu=" << result.certificate.mu.str() << "\n";
  }
}

void classes_text(std::ostringstream& out, const LeafSet& leaves) {
  out << "classes: " << leaves.classes.size() << "\n";
  for (std::size_t i = 0; i < leaves.classes.size(); ++i)
    out << "  [" << i << "] " << format_dim_vector(leaves.q, leaves.classes[i])
        << "  m=" << leaves.multiplicity[i].str() << "\n";
}

ordered_json classes_json(const LeafSet& leaves) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < leaves.classes.size(); ++i)
    arr.push_back({{"index", i},
                   {"dim", dim_array(leaves.classes[i])},
                   {"multiplicity", leaves.multiplicity[i].str()}});
  return arr;
}

}  // namespace

std::string render_catalog(const std::vector<CatalogEntry>& entries, Format f) {
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    ordered_json arr = ordered_json::array();
    for (const CatalogEntry& e : entries)
      arr.push_back({{"name", e.name},
                     {"summary", e.summary},
                     {"vertices", e.q.num_vertices()},
                     {"arrows", e.q.num_arrows()}});
    doc["examples"] = std::move(arr);
    return finish(doc);
  }
  std::ostringstream out;
  for (const CatalogEntry& e : entries) out << e.name << ": " << e.summary << "\n";
  return out.str();
}

std::string render_leaves(const LeafSet& leaves, Format f) {
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["vertices"] = vertex_names(leaves.q);
    doc["alpha"] = dim_array(leaves.alpha);
    doc["theta"] = rat_array(leaves.theta);
    doc["x"] = leaves.q.vertices[leaves.x];
    doc["classes"] = classes_json(leaves);
    doc["locally_projective"] = count_locally_projective(leaves).str();
    return finish(doc);
  }
  std::ostringstream out;
  out << "alpha: " << format_dim_vector(leaves.q, leaves.alpha) << "\n";
  out << "distinguished vertex: " << leaves.q.vertices[leaves.x] << "\n";
  classes_text(out, leaves);
  out << "locally projective resolutions: " << count_locally_projective(leaves).str() << "\n";
  return out.str();
}

std::string render_census(const LeafSet& leaves, const CensusReport& report, Format f) {
  std::vector<std::string> bad;
  for (std::size_t mask = 0; mask < report.results.size(); ++mask)
    if (!report.results[mask].feasible)
      bad.push_back(
          SignFunction::from_mask(static_cast<std::uint32_t>(mask),
                                  static_cast<int>(leaves.classes.size()))
              .to_string());
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["classes"] = classes_json(leaves);
    doc["total"] = report.total.str();
    doc["projective"] = report.feasible;
    doc["nonprojective"] = report.infeasible;
    doc["nonprojective_signs"] = bad;
    return finish(doc);
  }
  std::ostringstream out;
  classes_text(out, leaves);
  out << "sign functions: " << report.total.str() << "\n";
  out << "projective: " << report.feasible << "\n";
  out << "nonprojective: " << report.infeasible << "\n";
  if (!bad.empty()) {
    out << "nonprojective signs:\n";
    for (const std::string& s : bad) out << "  " << s << "\n";
  }
  return out.str();
}

std::string render_feasibility(const LeafSet& leaves, const SignFunction& s,
                               const FeasibilityResult& result, Format f) {
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["classes"] = classes_json(leaves);
    doc["signs"] = s.to_string();
    ordered_json verdict = feasibility_json(leaves, result);
    for (auto& [key, value] : verdict.items()) doc[key] = std::move(value);
    return finish(doc);
  }
  std::ostringstream out;
  classes_text(out, leaves);
  out << "signs: " << s.to_string() << "\n";
  feasibility_text(out, result);
  return out.str();
}

std::string render_multiset(const LeafSet& leaves, const SignFunction& s,
                            const std::optional<MultisetCertificate>& cert, Format f) {
  DimVector sum;
  if (cert) {
    sum.assign(leaves.alpha.size(), 0);
    for (int i : cert->plus_classes)
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += leaves.classes[i][v];
  }
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["classes"] = classes_json(leaves);
    doc["signs"] = s.to_string();
    doc["found"] = cert.has_value();
    if (cert) {
      doc["plus_classes"] = cert->plus_classes;
      doc["minus_classes"] = cert->minus_classes;
      doc["common_sum"] = dim_array(sum);
    }
    return finish(doc);
  }
  std::ostringstream out;
  classes_text(out, leaves);
  out << "signs: " << s.to_string() << "\n";
  if (!cert) {
    out << "certificate: none found\n";
    return out.str();
  }
  out << "certificate: k=" << cert->plus_classes.size() << "\n";
  out << "  plus classes: ";
  for (std::size_t i = 0; i < cert->plus_classes.size(); ++i)
    out << (i ? " " : "") << "[" << cert->plus_classes[i] << "]";
  out << "\n  minus classes:";
  for (int i : cert->minus_classes) out << " [" << i << "]";
  out << "\n  common sum: " << format_dim_vector(leaves.q, sum) << "\n";
  return out.str();
}

std::string render_extension(const LeafSet& from, const LeafSet& to, const SignFunction& s,
                             int default_sign, const SignFunction& extended,
                             const FeasibilityResult& verdict, Format f) {
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["base_classes"] = static_cast<int>(from.classes.size());
    doc["extended_classes"] = static_cast<int>(to.classes.size());
    doc["signs"] = s.to_string();
    doc["default_sign"] = default_sign > 0 ? "+" : "-";
    doc["extended_signs"] = extended.to_string();
    ordered_json v = feasibility_json(to, verdict);
    for (auto& [key, value] : v.items()) doc[key] = std::move(value);
    return finish(doc);
  }
  std::ostringstream out;
  out << "base classes: " << from.classes.size() << "\n";
  out << "extended classes: " << to.classes.size() << "\n";
  out << "signs: " << s.to_string() << "\n";
  out << "default sign: " << (default_sign > 0 ? "+" : "-") << "\n";
  out << "extended signs: " << extended.to_string() << "\n";
  feasibility_text(out, verdict);
  return out.str();
}

std::string render_mc(const McReport& report, Format f) {
  const char* method = report.method == McMethod::Lp ? "lp" : "k2";
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["n"] = report.n;
    doc["m"] = report.m;
    doc["method"] = method;
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["hits"] = report.hits;
    doc["estimate"] = format_rational(report.estimate);
    doc["estimate_decimal"] = approx(report.estimate);
    doc["stderr_sq"] = format_rational(report.stderr_sq);
    return finish(doc);
  }
  std::ostringstream out;
  out << "family: n=" << report.n << " m=" << report.m << "\n";
  out << "method: " << method << "\n";
  out << "trials: " << report.trials << "\n";
  out << "seed: " << report.seed << "\n";
  out << "hits: " << report.hits << "\n";
  out << "estimate: " << format_rational(report.estimate) << " ~ " << approx(report.estimate)
      << "\n";
  return out.str();
}

std::string render_usets(const UsetsReport& report, Format f) {
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["ground"] = report.family.ground;
    ordered_json fam = ordered_json::array();
    for (SetMask s : report.family.minimal) fam.push_back(set_json(s));
    doc["family"] = std::move(fam);
    doc["closure_size"] = report.closure_size;
    ordered_json dual = ordered_json::array();
    for (SetMask s : report.dual.minimal) dual.push_back(set_json(s));
    doc["dual"] = std::move(dual);
    doc["involution_ok"] = report.involution_ok;
    return finish(doc);
  }
  std::ostringstream out;
  out << "ground: " << report.family.ground << "\n";
  out << "family minimal sets:";
  for (SetMask s : report.family.minimal) out << " " << set_text(s);
  out << "\nclosure size: " << report.closure_size << "\n";
  out << "dual minimal sets:";
  for (SetMask s : report.dual.minimal) out << " " << set_text(s);
  out << "\ndual of dual equals family: " << (report.involution_ok ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_pattern(const DoubleQuiver& dq, ArrowMask pattern, bool semistable,
                           bool stable, const std::optional<InstabilityReport>& breakdown,
                           Format f) {
  std::vector<std::string> on;
  for (int a = 0; a < dq.num_arrows(); ++a)
    if (pattern >> a & 1u) on.push_back(dq.arrow_label(a));
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["arrows_on"] = on;
    doc["semistable"] = semistable;
    doc["stable"] = stable;
    if (breakdown) {
      ordered_json dead = ordered_json::array();
      for (int v : breakdown->dead_spokes) dead.push_back(dq.base.vertices[v]);
      doc["dead_spokes"] = std::move(dead);
      doc["starved_x"] = breakdown->starved_x;
      doc["starved_y"] = breakdown->starved_y;
    }
    return finish(doc);
  }
  std::ostringstream out;
  out << "arrows on:";
  for (const std::string& label : on) out << " " << label;
  out << "\nsemistable: " << (semistable ? "yes" : "no") << "\n";
  out << "stable: " << (stable ? "yes" : "no") << "\n";
  if (breakdown) {
    out << "dead spokes:";
    if (breakdown->dead_spokes.empty()) out << " none";
    for (int v : breakdown->dead_spokes) out << " " << dq.base.vertices[v];
    out << "\nstarved hubs:";
    if (!breakdown->starved_x && !breakdown->starved_y) out << " none";
    if (breakdown->starved_x) out << " x";
    if (breakdown->starved_y) out << " y";
    out << "\n";
  }
  return out.str();
}

std::string render_cone(const Quiver& q, std::size_t patterns,
                        const CommonStabilityCone& cone, Format f) {
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["patterns"] = patterns;
    doc["inequalities"] = cone.normals.size();
    ordered_json normals = ordered_json::array();
    for (VertexMask s : cone.normals) normals.push_back(mask_names(q, s));
    doc["normals"] = std::move(normals);
    doc["zero_only"] = cone.zero_only;
    return finish(doc);
  }
  std::ostringstream out;
  out << "patterns: " << patterns << "\n";
  out << "inequalities (theta(S) <= 0):\n";
  for (VertexMask s : cone.normals) out << "  " << mask_text(q, s) << "\n";
  out << "zero only: " << (cone.zero_only ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_search(const SearchOutcome& outcome, int x, int y, Format f) {
  const Quiver& q = outcome.rep.dq.base;
  StarShape shape = star_shape(q, x, y);
  if (f == Format::Json) {
    ordered_json doc;
    doc["version"] = kArtifactVersion;
    doc["success"] = outcome.success;
    doc["x_side"] = spokes_json(q, shape, outcome.x_side);
    doc["y_side"] = spokes_json(q, shape, outcome.y_side);
    ordered_json gauge;
    for (int v = 0; v < q.num_vertices(); ++v)
      gauge[q.vertices[v]] = outcome.gauge.exponent[v];
    doc["gauge"] = std::move(gauge);
    ordered_json steps = ordered_json::array();
    for (const SearchStep& step : outcome.trace)
      steps.push_back({{"phase", std::string(1, step.phase)},
                       {"subset", mask_names(q, step.subset)},
                       {"shift", step.shift},
                       {"entered", q.vertices[step.entered]},
                       {"pre_paths_ok", step.pre_paths_ok},
                       {"post_paths_ok", step.post_paths_ok},
                       {"zero_path_ok", step.zero_path_ok}});
    doc["steps"] = std::move(steps);
    ordered_json vals = ordered_json::array();
    for (int a = 0; a < outcome.rep.dq.num_arrows(); ++a) {
      ordered_json entry;
      entry["arrow"] = outcome.rep.dq.arrow_label(a);
      if (outcome.rep.val[a])
        entry["valuation"] = *outcome.rep.val[a];
      else
        entry["valuation"] = nullptr;
      vals.push_back(std::move(entry));
    }
    doc["valuations"] = std::move(vals);
    if (!outcome.failure.empty()) doc["failure"] = outcome.failure;
    return finish(doc);
  }
  std::ostringstream out;
  out << "success: " << (outcome.success ? "yes" : "no") << "\n";
  out << "x side spokes: " << spokes_text(q, shape, outcome.x_side) << "\n";
  out << "y side spokes: " << spokes_text(q, shape, outcome.y_side) << "\n";
  out << "gauge:";
  for (int v = 0; v < q.num_vertices(); ++v)
    out << " " << q.vertices[v] << ":" << outcome.gauge.exponent[v];
  out << "\nsteps: " << outcome.trace.size() << "\n";
  for (std::size_t i = 0; i < outcome.trace.size(); ++i) {
    const SearchStep& step = outcome.trace[i];
    out << "  [" << i << "] phase " << step.phase << " set " << mask_text(q, step.subset)
        << " shift " << step.shift << " entered " << q.vertices[step.entered]
        << (step.post_paths_ok && step.zero_path_ok ? "" : "  (transient check failed)") << "\n";
  }
  if (!outcome.failure.empty()) out << "failure: " << outcome.failure << "\n";
  return out.str();
}

}  // namespace qv
