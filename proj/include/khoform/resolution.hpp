#pragma once

#include <map>
#include <string>
#include <vector>

#include "khoform/braid.hpp"
#include "khoform/graph.hpp"

namespace khoform {

/// Which end of a chord an endpoint is. For a positive letter end 0 sits on
/// the upper turnback (cap) and end 1 on the lower one (cup); for a negative
/// letter end 0 is on strand gen and end 1 on strand gen+1.
struct Endpoint {
  LetterId letter = 0;
  int end = 0;
  bool operator==(const Endpoint&) const = default;
};

struct ChordEnd {
  int circle = -1;
  int position = -1;
};

struct Chord {
  LetterId letter = 0;
  int gen = 0;
  int sign = 1;
  ChordEnd a;
  ChordEnd b;

  bool admissible() const { return a.circle == b.circle; }
};

/// The all-B resolution of a closed braid: circles as cyclic endpoint
/// sequences plus one chord per letter.
struct ChordDiagram {
  int strands = 0;
  int crossings = 0;
  std::vector<std::vector<Endpoint>> circles;
  std::vector<Chord> chords;  // in word order

  int circle_count() const { return static_cast<int>(circles.size()); }
  const Chord& chord(LetterId letter) const;
};

/// Traces the B-state circles. Circles are discovered level by level, left
/// strand first, walking downward from the top of each unvisited segment.
ChordDiagram resolve(const BraidWord& w);

int circle_count(const BraidWord& w);

/// -c - 2|s_B|.
int j_min(const BraidWord& w);

/// Graph on admissible chords; vertex ids are letter ids, labels empty.
/// Two vertices are adjacent iff their endpoints alternate on their circle.
struct LandoGraph {
  Graph graph;
  std::map<VertexId, int> sign;  // sign of the originating letter
};

LandoGraph build_lando(const ChordDiagram& d);
/// resolve + build_lando.
Graph lando_graph(const BraidWord& w);

std::string to_json(const ChordDiagram& d);

}  // namespace khoform
