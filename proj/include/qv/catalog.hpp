#pragma once

// Built-in example instances.  Each entry fixes a quiver, dimension vector,
// stability, and distinguished hub vertices; some carry the expected class
// list and a distinguished sign assignment so tests and the CLI can refer to
// them by name.  Undirected graphs in the sources are oriented hub to spoke
// and lower to higher spoke; all the derived quantities are orientation
// independent.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qv/antichain.hpp"
#include "qv/leaves.hpp"
#include "qv/quiver.hpp"

namespace qv {

struct CatalogEntry {
  std::string name;
  std::string summary;
  Quiver q;
  DimVector alpha;
  Stability theta;
  int x = 0;
  std::optional<int> y;
  std::vector<DimVector> phi;  // expected classes when known in advance
  std::vector<std::pair<DimVector, int>> special_signs;
  std::optional<Antichain> good_family;  // antichain on the spokes
};

const std::vector<CatalogEntry>& example_catalog();

// Throws UnknownVertex-flavored InvalidParams when the name is not listed.
const CatalogEntry& find_example(const std::string& name);

LeafSet example_leaves(const CatalogEntry& entry);

}  // namespace qv
