#pragma once

// Plain-text and machine-readable views of the library's results.
//
// The JSON renderer aims at golden-file stability: keys appear in a fixed
// order, timing never enters the output, and every number that can be large
// or fractional is a string ("p/q" for rationals, decimal digits for big
// integers).  Apart from the "version" field, identical inputs produce
// byte-identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qv/catalog.hpp"
#include "qv/classifier.hpp"
#include "qv/patterns.hpp"
#include "qv/tropical.hpp"

namespace qv {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class Format { Text, Json };

std::string render_catalog(const std::vector<CatalogEntry>& entries, Format f);

std::string render_leaves(const LeafSet& leaves, Format f);

// Census summary plus the list of non-realizable sign strings in mask order.
std::string render_census(const LeafSet& leaves, const CensusReport& report, Format f);

std::string render_feasibility(const LeafSet& leaves, const SignFunction& s,
                               const FeasibilityResult& result, Format f);

std::string render_multiset(const LeafSet& leaves, const SignFunction& s,
                            const std::optional<MultisetCertificate>& cert, Format f);

std::string render_extension(const LeafSet& from, const LeafSet& to, const SignFunction& s,
                             int default_sign, const SignFunction& extended,
                             const FeasibilityResult& verdict, Format f);

std::string render_mc(const McReport& report, Format f);

struct UsetsReport {
  Antichain family;
  Antichain dual;
  std::uint64_t closure_size = 0;
  bool involution_ok = false;
};

std::string render_usets(const UsetsReport& report, Format f);

// breakdown is present only when the quiver is a two-hub star with the
// weight shape the hub/spoke characterization needs.
std::string render_pattern(const DoubleQuiver& dq, ArrowMask pattern, bool semistable,
                           bool stable, const std::optional<InstabilityReport>& breakdown,
                           Format f);

std::string render_cone(const Quiver& q, std::size_t patterns,
                        const CommonStabilityCone& cone, Format f);

std::string render_search(const SearchOutcome& outcome, int x, int y, Format f);

}  // namespace qv
