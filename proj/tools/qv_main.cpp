// qv: classify locally projective crepant resolutions of quiver varieties.
//
// Exit codes: 0 success, 1 domain error (bad mathematical input, failed
// search), 2 usage error.

#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "qv/antichain.hpp"
#include "qv/catalog.hpp"
#include "qv/classifier.hpp"
#include "qv/error.hpp"
#include "qv/leaves.hpp"
#include "qv/patterns.hpp"
#include "qv/report.hpp"
#include "qv/spec_io.hpp"
#include "qv/tropical.hpp"

namespace {

using namespace qv;

struct UsageError {
  std::string message;
};

struct Source {
  std::string example;
  std::string input;
  std::vector<int> star;
};

void add_source(CLI::App* cmd, Source& src, const std::string& prefix = "") {
  auto* ex = cmd->add_option("--" + prefix + "example", src.example,
                             "built-in example (see `qv catalog`)");
  auto* in = cmd->add_option("--" + prefix + "input", src.input, "JSON problem file");
  auto* st = cmd->add_option("--" + prefix + "star", src.star,
                             "two-hub star: spoke count n, hub weight m")
                 ->expected(2);
  ex->excludes(in)->excludes(st);
  in->excludes(st);
}

void add_format(CLI::App* cmd, Format& fmt) {
  static const std::map<std::string, Format> names{{"text", Format::Text},
                                                   {"json", Format::Json}};
  cmd->add_option("--format", fmt, "output format")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

struct Resolved {
  std::string name;
  ProblemSpec spec;
  std::optional<Antichain> good_family;
};

Resolved resolve(const Source& src, const std::string& what = "a problem source") {
  if (!src.example.empty()) {
    const CatalogEntry& e = find_example(src.example);
    return {e.name, ProblemSpec{e.q, e.alpha, e.theta, e.x, e.y, e.phi}, e.good_family};
  }
  if (!src.input.empty()) return {src.input, load_problem(src.input), std::nullopt};
  if (src.star.size() == 2) {
    StarFamily fam = make_star_family(src.star[0], src.star[1]);
    std::string name =
        "star(" + std::to_string(src.star[0]) + "," + std::to_string(src.star[1]) + ")";
    return {name, ProblemSpec{fam.q, fam.alpha, fam.theta, fam.x, fam.y, {}}, std::nullopt};
  }
  throw UsageError{what + " is required: --example NAME, --input FILE, or --star N M"};
}

LeafSet leaves_of(const Resolved& r, bool all_classes = false) {
  if (!r.spec.phi.empty() || !all_classes) return problem_leaves(r.spec);
  EnumerateOptions opts;
  opts.require_two_resolutions = false;
  return enumerate_leaves(r.spec.q, r.spec.alpha, r.spec.theta, r.spec.x, opts);
}

SignFunction parse_signs(const std::string& text, const LeafSet& leaves) {
  SignFunction s = SignFunction::from_string(text);
  require(s.size == static_cast<int>(leaves.classes.size()), ErrorKind::InvalidParams,
          "sign string has " + std::to_string(s.size) + " entries but there are " +
              std::to_string(leaves.classes.size()) + " classes");
  return s;
}

int pick_jobs(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// 1-based comma-separated element lists, e.g. "1,2" "3,4,5".
Antichain parse_family(int ground, const std::vector<std::string>& sets) {
  std::vector<SetMask> masks;
  for (const std::string& text : sets) {
    SetMask mask = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      int element = 0;
      try {
        element = std::stoi(text.substr(pos, next - pos));
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidParams, "bad set element in '" + text + "'");
      }
      require(element >= 1 && element <= ground, ErrorKind::InvalidParams,
              "set element " + std::to_string(element) + " outside 1.." +
                  std::to_string(ground));
      mask |= SetMask{1} << (element - 1);
      pos = next + 1;
    }
    require(mask != 0, ErrorKind::InvalidParams, "empty set in family");
    masks.push_back(mask);
  }
  return normalize_antichain(ground, std::move(masks));
}

// The x-side family for the good locus: explicit sets if given, otherwise
// the one the catalog entry carries.
Antichain spoke_family(const Resolved& r, const StarShape& shape,
                       const std::vector<std::string>& sets) {
  int ground = static_cast<int>(shape.spokes.size());
  if (!sets.empty()) return parse_family(ground, sets);
  require(r.good_family.has_value(), ErrorKind::InvalidParams,
          "no --set given and example '" + r.name + "' carries no spoke family");
  require(r.good_family->ground == ground, ErrorKind::Internal,
          "catalog family ground mismatch");
  return *r.good_family;
}

std::vector<std::optional<std::int64_t>> parse_valuations(
    const DoubleQuiver& dq, const std::vector<std::string>& entries) {
  std::vector<std::optional<std::int64_t>> vals(dq.num_arrows(), std::nullopt);
  if (entries.empty()) {
    // Default: every base arrow invertible, every reversed arrow zero.
    for (int a = 0; a < dq.base.num_arrows(); ++a) vals[a] = 0;
    return vals;
  }
  std::vector<bool> assigned(dq.num_arrows(), false);
  for (const std::string& entry : entries) {
    std::size_t eq = entry.find('=');
    require(eq != std::string::npos, ErrorKind::InvalidParams,
            "valuation entry '" + entry + "' is not label=value");
    std::string label = entry.substr(0, eq);
    std::string value = entry.substr(eq + 1);
    int arrow = -1;
    for (int a = 0; a < dq.num_arrows() && arrow < 0; ++a)
      if (!assigned[a] && dq.arrow_label(a) == label) arrow = a;
    require(arrow >= 0, ErrorKind::InvalidParams,
            "no unassigned arrow labeled '" + label + "'");
    assigned[arrow] = true;
    if (value != "inf") {
      try {
        vals[arrow] = std::stoll(value);
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidParams, "bad valuation '" + value + "' (integer or inf)");
      }
    }
  }
  return vals;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locally projective crepant resolutions of quiver varieties"};
  app.require_subcommand(1);

  std::string out_text;
  int exit_code = 0;

  {
    auto fmt = std::make_shared<Format>(Format::Text);
    CLI::App* cmd = app.add_subcommand("catalog", "list the built-in examples");
    add_format(cmd, *fmt);
    cmd->callback([&out_text, fmt] { out_text = render_catalog(example_catalog(), *fmt); });
  }

  {
    struct Opts {
      Source src;
      Format fmt = Format::Text;
      bool all = false;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd = app.add_subcommand("leaves", "enumerate the decomposition classes");
    add_source(cmd, o->src);
    add_format(cmd, o->fmt);
    cmd->add_flag("--all-classes", o->all,
                  "also keep classes with a single local resolution");
    cmd->callback([&out_text, o] {
      out_text = render_leaves(leaves_of(resolve(o->src), o->all), o->fmt);
    });
  }

  {
    struct Opts {
      Source src;
      Format fmt = Format::Text;
      int jobs = 0;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd =
        app.add_subcommand("census", "decide realizability of every sign function");
    add_source(cmd, o->src);
    add_format(cmd, o->fmt);
    cmd->add_option("--jobs", o->jobs, "worker threads (0 = all cores)");
    cmd->callback([&out_text, o] {
      LeafSet leaves = leaves_of(resolve(o->src));
      CensusOptions copts;
      copts.jobs = pick_jobs(o->jobs);
      out_text = render_census(leaves, census(leaves, copts), o->fmt);
    });
  }

  {
    struct Opts {
      Source src;
      Format fmt = Format::Text;
      std::string signs;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd = app.add_subcommand("check-s", "decide one sign function");
    add_source(cmd, o->src);
    add_format(cmd, o->fmt);
    cmd->add_option("--s", o->signs, "sign per class, e.g. ++-+")->required();
    cmd->callback([&out_text, o] {
      LeafSet leaves = leaves_of(resolve(o->src));
      SignFunction s = parse_signs(o->signs, leaves);
      FeasibilityResult result = realizable(leaves, s);
      require(verify_feasibility(leaves, s, result), ErrorKind::Internal,
              "emitted evidence failed replay");
      out_text = render_feasibility(leaves, s, result, o->fmt);
    });
  }

  {
    struct Opts {
      Source src;
      Format fmt = Format::Text;
      std::string signs;
      int k_max = 4;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd = app.add_subcommand(
        "certificate", "search for an equal-sum multiset obstruction");
    add_source(cmd, o->src);
    add_format(cmd, o->fmt);
    cmd->add_option("--s", o->signs, "sign per class")->required();
    cmd->add_option("--k-max", o->k_max, "largest multiset size tried");
    cmd->callback([&out_text, o] {
      LeafSet leaves = leaves_of(resolve(o->src));
      SignFunction s = parse_signs(o->signs, leaves);
      auto cert = find_multiset_certificate(leaves, s, o->k_max);
      if (cert)
        require(verify_multiset_certificate(leaves, s, *cert), ErrorKind::Internal,
                "certificate failed replay");
      out_text = render_multiset(leaves, s, cert, o->fmt);
    });
  }

  {
    struct Opts {
      Source src, to;
      Format fmt = Format::Text;
      std::string signs;
      std::string default_sign = "+";
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd = app.add_subcommand(
        "extend", "transport a sign function along a quiver extension");
    add_source(cmd, o->src);
    add_source(cmd, o->to, "to-");
    add_format(cmd, o->fmt);
    cmd->add_option("--s", o->signs, "sign per class of the base")->required();
    cmd->add_option("--default-sign", o->default_sign, "sign for new classes: + or -")
        ->check(CLI::IsMember({"+", "-"}));
    cmd->callback([&out_text, o] {
      LeafSet from = leaves_of(resolve(o->src));
      LeafSet to = leaves_of(resolve(o->to, "an extension source (--to-... flags)"));
      SignFunction s = parse_signs(o->signs, from);
      int sign = o->default_sign == "+" ? +1 : -1;
      SignFunction extended = extend_signs(from, to, s, sign);
      FeasibilityResult verdict = realizable(to, extended);
      out_text = render_extension(from, to, s, sign, extended, verdict, o->fmt);
    });
  }

  {
    struct Opts {
      Format fmt = Format::Text;
      int n = 0, m = 0, jobs = 0;
      std::int64_t trials = 10000;
      std::uint64_t seed = 0;
      std::string method = "lp";
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd = app.add_subcommand(
        "mc", "estimate the nonprojective fraction on a star family");
    add_format(cmd, o->fmt);
    cmd->add_option("--n", o->n, "spoke count")->required();
    cmd->add_option("--m", o->m, "hub weight")->required();
    cmd->add_option("--trials", o->trials, "sample count");
    cmd->add_option("--seed", o->seed, "RNG seed");
    cmd->add_option("--method", o->method, "lp (exact) or k2 (partition criterion)")
        ->check(CLI::IsMember({"lp", "k2"}));
    cmd->add_option("--jobs", o->jobs, "worker threads (0 = all cores)");
    cmd->callback([&out_text, o] {
      McOptions mo;
      mo.trials = o->trials;
      mo.seed = o->seed;
      mo.method = o->method == "lp" ? McMethod::Lp : McMethod::K2;
      mo.jobs = pick_jobs(o->jobs);
      out_text = render_mc(monte_carlo_nonprojective(o->n, o->m, mo), o->fmt);
    });
  }

  {
    struct Opts {
      Format fmt = Format::Text;
      int ground = 0;
      std::vector<std::string> sets;
      std::string example;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd = app.add_subcommand(
        "usets", "normalize an upward-closed family and compute its dual");
    add_format(cmd, o->fmt);
    cmd->add_option("--ground", o->ground, "ground set size");
    cmd->add_option("--set", o->sets, "minimal set, 1-based comma list (repeatable)");
    cmd->add_option("--example", o->example, "take the family a built-in example carries");
    cmd->callback([&out_text, o] {
      Antichain family;
      if (!o->example.empty()) {
        const CatalogEntry& e = find_example(o->example);
        require(e.good_family.has_value(), ErrorKind::InvalidParams,
                "example '" + e.name + "' carries no spoke family");
        family = *e.good_family;
      } else {
        if (o->ground <= 0 || o->sets.empty())
          throw UsageError{"usets needs --ground and --set, or --example"};
        family = parse_family(o->ground, o->sets);
      }
      UsetsReport report;
      report.family = family;
      report.closure_size = upward_closure(family).size();
      report.dual = blocker(family);
      Antichain back = blocker(report.dual);
      report.involution_ok =
          back.ground == family.ground && back.minimal == family.minimal;
      out_text = render_usets(report, o->fmt);
    });
  }

  {
    struct Opts {
      Source src;
      Format fmt = Format::Text;
      std::vector<std::string> arrows;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd = app.add_subcommand(
        "pattern", "stability of a support pattern of the double quiver");
    add_source(cmd, o->src);
    add_format(cmd, o->fmt);
    cmd->add_option("--arrows", o->arrows,
                    "nonzero arrows, src>tgt or src>tgt* for reversed")
        ->delimiter(',');
    cmd->callback([&out_text, o] {
      Resolved r = resolve(o->src);
      DoubleQuiver dq = double_quiver(r.spec.q);
      ArrowMask pattern = pattern_from_labels(dq, o->arrows);
      bool ss = is_semistable(dq, pattern, r.spec.theta, r.spec.alpha);
      bool st = is_stable(dq, pattern, r.spec.theta, r.spec.alpha);
      std::optional<InstabilityReport> breakdown;
      if (r.spec.y) {
        try {
          breakdown = instability_report(dq, pattern, r.spec.theta, r.spec.x, *r.spec.y);
        } catch (const Error&) {
          // Not the hub/spoke weight shape; the generic verdict stands alone.
        }
      }
      out_text = render_pattern(dq, pattern, ss, st, breakdown, o->fmt);
    });
  }

  {
    struct Opts {
      Source src;
      Format fmt = Format::Text;
      std::vector<std::string> sets;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd = app.add_subcommand(
        "theta-zero",
        "common semistable stability parameters of the good-locus witness patterns");
    add_source(cmd, o->src);
    add_format(cmd, o->fmt);
    cmd->add_option("--set", o->sets, "x-side family minimal set (repeatable)");
    cmd->callback([&out_text, o] {
      Resolved r = resolve(o->src);
      require(r.spec.y.has_value(), ErrorKind::InvalidParams,
              "needs a second hub vertex");
      DoubleQuiver dq = double_quiver(r.spec.q);
      StarShape shape = star_shape(r.spec.q, r.spec.x, *r.spec.y);
      Antichain ifam = spoke_family(r, shape, o->sets);
      Antichain jfam = blocker(ifam);
      std::vector<ArrowMask> patterns = star_witness_patterns(dq, shape, ifam, jfam);
      CommonStabilityCone cone = common_stability_cone(dq, patterns, r.spec.alpha);
      out_text = render_cone(r.spec.q, patterns.size(), cone, o->fmt);
    });
  }

  {
    struct Opts {
      Source src;
      Format fmt = Format::Text;
      std::vector<std::string> sets;
      std::vector<std::string> vals;
    };
    auto o = std::make_shared<Opts>();
    CLI::App* cmd = app.add_subcommand(
        "properness", "integral point search on a valued representation");
    add_source(cmd, o->src);
    add_format(cmd, o->fmt);
    cmd->add_option("--set", o->sets, "x-side family minimal set (repeatable)");
    cmd->add_option("--vals", o->vals,
                    "arrow valuations label=int or label=inf; default: base arrows 0")
        ->delimiter(',');
    cmd->callback([&out_text, &exit_code, o] {
      Resolved r = resolve(o->src);
      require(r.spec.y.has_value(), ErrorKind::InvalidParams,
              "needs a second hub vertex");
      DoubleQuiver dq = double_quiver(r.spec.q);
      StarShape shape = star_shape(r.spec.q, r.spec.x, *r.spec.y);
      Antichain ifam = spoke_family(r, shape, o->sets);
      Antichain jfam = blocker(ifam);
      TropicalRep rep = make_tropical_rep(dq, parse_valuations(dq, o->vals));
      SearchOutcome outcome = integral_point_search(rep, ifam, jfam, r.spec.x, *r.spec.y);
      out_text = render_search(outcome, r.spec.x, *r.spec.y, o->fmt);
      if (!outcome.success) exit_code = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << out_text;
  return exit_code;
}
