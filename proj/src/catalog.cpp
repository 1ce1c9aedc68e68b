#include "qv/catalog.hpp"

#include <sstream>

#include "qv/classifier.hpp"
#include "qv/error.hpp"

namespace qv {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

Stability weights(std::vector<long> w) {
  Stability theta;
  theta.reserve(w.size());
  for (long v : w) theta.emplace_back(v);
  return theta;
}

CatalogEntry star_entry(const std::string& name, const std::string& summary, int n,
                        int m) {
  StarFamily fam = make_star_family(n, m);
  CatalogEntry e;
  e.name = name;
  e.summary = summary;
  e.q = std::move(fam.q);
  e.alpha = std::move(fam.alpha);
  e.theta = std::move(fam.theta);
  e.x = fam.x;
  e.y = fam.y;
  return e;
}

CatalogEntry six_vertex_entry(const std::string& name, const Edges& edges) {
  CatalogEntry e;
  e.name = name;
  e.q = build_quiver({"x", "1", "2", "3", "4", "y"}, edges);
  e.alpha.assign(6, 1);
  e.theta = weights({2, -1, -1, -1, -1, 2});
  e.x = 0;
  e.y = 5;
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  entries.push_back(star_entry(
      "star4", "four-pointed star, weight 2 on both hubs, six two-spoke classes", 4, 2));

  entries.push_back(six_vertex_entry(
      "sixv1", {{"x", "1"}, {"x", "3"}, {"1", "2"}, {"1", "4"}, {"2", "3"}, {"3", "4"},
                {"y", "1"}, {"y", "3"}}));
  entries.back().summary = "six vertices, hubs tied to spokes 1 and 3, four classes";
  entries.push_back(six_vertex_entry(
      "sixv2", {{"x", "2"}, {"x", "4"}, {"1", "2"}, {"1", "4"}, {"2", "3"}, {"3", "4"},
                {"y", "1"}, {"y", "3"}}));
  entries.back().summary = "six vertices, hubs on opposite spoke pairs, five classes";
  entries.push_back(six_vertex_entry(
      "sixv3", {{"x", "1"}, {"x", "2"}, {"x", "3"}, {"1", "4"}, {"3", "4"}, {"y", "1"},
                {"y", "2"}, {"y", "3"}}));
  entries.back().summary = "six vertices, spoke 4 reached only through 1 and 3, four classes";
  entries.push_back(six_vertex_entry(
      "sixv4", {{"x", "1"}, {"x", "3"}, {"x", "4"}, {"1", "2"}, {"2", "3"}, {"3", "4"},
                {"y", "1"}, {"y", "2"}, {"y", "4"}}));
  entries.back().summary = "six vertices, nine edges, five classes";

  {
    CatalogEntry e;
    e.name = "legs3";
    e.summary = "three legs of length two between the hubs, seven classes";
    e.q = build_quiver({"x", "1", "2", "3", "4", "5", "6", "y"},
                       {{"x", "1"}, {"x", "2"}, {"x", "3"}, {"1", "4"}, {"2", "5"},
                        {"3", "6"}, {"y", "4"}, {"y", "5"}, {"y", "6"}});
    e.alpha.assign(8, 1);
    e.theta = weights({3, -1, -1, -1, -1, -1, -1, 3});
    e.x = 0;
    e.y = 7;
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "threevertex";
    e.summary = "three vertices, dimensions (2,3,3), triple arrows to both spokes";
    e.q = build_quiver({"x", "1", "2"}, {{"x", "1"}, {"x", "1"}, {"x", "1"}, {"x", "2"},
                                         {"x", "2"}, {"x", "2"}});
    e.alpha = {2, 3, 3};
    e.theta = weights({3, -1, -1});
    e.x = 0;
    e.phi = {{1, 0, 3}, {1, 1, 2}, {1, 2, 1}, {1, 3, 0}};
    e.special_signs = {{{1, 0, 3}, +1}, {{1, 1, 2}, -1}, {{1, 2, 1}, -1}, {{1, 3, 0}, +1}};
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "fourvertex";
    e.summary = "four vertices, dimensions (1,2,2,1), double arrows everywhere";
    e.q = build_quiver({"x", "1", "2", "y"}, {{"x", "1"}, {"x", "1"}, {"x", "2"},
                                              {"x", "2"}, {"y", "1"}, {"y", "1"},
                                              {"y", "2"}, {"y", "2"}});
    e.alpha = {1, 2, 2, 1};
    e.theta = weights({2, -1, -1, 2});
    e.x = 0;
    e.y = 3;
    e.phi = {{1, 0, 2, 0}, {1, 1, 1, 0}, {1, 2, 0, 0}};
    e.special_signs = {{{1, 0, 2, 0}, +1}, {{1, 1, 1, 0}, -1}, {{1, 2, 0, 0}, +1}};
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "star4x2";
    e.summary = "four-pointed star with doubled arrows and spoke dimension 2, ten classes";
    Edges arrows;
    for (int round = 0; round < 2; ++round)
      for (const char* hub : {"x", "y"})
        for (const char* spoke : {"1", "2", "3", "4"}) arrows.push_back({hub, spoke});
    e.q = build_quiver({"x", "1", "2", "3", "4", "y"}, arrows);
    e.alpha = {1, 2, 2, 2, 2, 1};
    e.theta = weights({2, -1, -1, -1, -1, 6});
    e.x = 0;
    e.y = 5;
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "star5";
    e.summary = "five-pointed star with hub weight 5 and spoke weight -2, no classes";
    e.q = build_quiver({"x", "1", "2", "3", "4", "5", "y"},
                       {{"x", "1"}, {"x", "2"}, {"x", "3"}, {"x", "4"}, {"x", "5"},
                        {"y", "1"}, {"y", "2"}, {"y", "3"}, {"y", "4"}, {"y", "5"}});
    e.alpha.assign(7, 1);
    e.theta = weights({5, -2, -2, -2, -2, -2, 5});
    e.x = 0;
    e.y = 6;
    e.good_family = normalize_antichain(5, {0b00011, 0b11100});
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& example_catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& find_example(const std::string& name) {
  for (const CatalogEntry& e : example_catalog())
    if (e.name == name) return e;
  std::ostringstream known;
  for (const CatalogEntry& e : example_catalog()) known << " " << e.name;
  fail(ErrorKind::InvalidParams, "no example named '" + name + "'; known:" + known.str());
}

LeafSet example_leaves(const CatalogEntry& entry) {
  return enumerate_leaves(entry.q, entry.alpha, entry.theta, entry.x, {});
}

}  // namespace qv
