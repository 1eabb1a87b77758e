#pragma once

#include <compare>
#include <span>
#include <vector>

#include "tcover/coloured_graph.hpp"

namespace tcover {

/// Components of one colour class. Components are numbered by their smallest vertex,
/// so numbering is canonical; isolated vertices are singleton components.
struct ColourPartition {
  std::vector<int> component_of;           // vertex -> component id
  std::vector<std::vector<int>> members;   // component id -> sorted vertices

  int size() const { return static_cast<int>(members.size()); }
  friend bool operator==(const ColourPartition&, const ColourPartition&) = default;
};

/// Monochromatic components of every colour 1..r.
class ComponentMap {
 public:
  ComponentMap() = default;
  explicit ComponentMap(std::vector<ColourPartition> per_colour)
      : per_colour_(std::move(per_colour)) {}

  int r() const { return static_cast<int>(per_colour_.size()); }
  const ColourPartition& colour(int c) const { return per_colour_.at(c - 1); }

  /// Id of the colour-c component containing vertex v.
  int component(int c, int v) const { return colour(c).component_of.at(v); }

  friend bool operator==(const ComponentMap&, const ComponentMap&) = default;

 private:
  std::vector<ColourPartition> per_colour_;
};

ComponentMap components(const ColouredGraph& g);

/// A monochromatic component, named by colour and id within that colour.
struct ComponentRef {
  int colour;
  int id;

  auto operator<=>(const ComponentRef&) const = default;
};

/// True iff the union of the listed components is V(G). Independent of any solver.
bool covers_all_vertices(const ComponentMap& comps, int n, std::span<const ComponentRef> family);

}  // namespace tcover
