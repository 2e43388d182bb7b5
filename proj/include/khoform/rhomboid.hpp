#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "khoform/graph.hpp"
#include "khoform/homotopy.hpp"

namespace khoform {

class LabelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Role {
  BLeft,
  BRight,
  B2,
  B2Prime,
  E2,
  E2Prime,
  C,            // index 1..3
  D,            // index 1..3
  Spoke,        // index 0..n
  Subdivision,  // index = edge slot, pos = 1..count-1
  VMinus1,
  VPlus1,        // v_{n+1}
  VMinus1Prime,
  VPlus1Prime,   // v'_{n+1}
  Spider,
};

std::string to_string(Role r);

struct RoleTag {
  Role role = Role::Spoke;
  int index = 0;
  int pos = 0;

  auto operator<=>(const RoleTag&) const = default;
  std::string to_string() const;
};

/// Edge slots along the extended spine. Slot i in [0, n+1] is the edge
/// v_{i-1} - v_i (slot 0: v_{-1} - v_0, slot n+1: v_n - v_{n+1}).
inline constexpr int kSlotPrimeLeft = -1;   // v'_{-1} - v_0
inline constexpr int kSlotPrimeRight = -2;  // v_n - v'_{n+1}

enum Modification : unsigned {
  kContractLeft = 1u,
  kContractRight = 2u,
  kDeleteLeftEdge = 4u,
  kDeleteRightEdge = 8u,
};

/// Labels plus the parameters of the ambient family member. Vertex ids of the
/// labelled graph map to tags; the ambient graph is rebuilt from the flags and
/// counts whenever a labelled subgraph is validated.
struct RhomboidStructure {
  std::map<VertexId, RoleTag> roles;
  int spine_length = 0;  // n
  bool r1_present = false;
  bool r2_present = false;
  bool connected = false;
  bool augmented = false;
  unsigned modifications = 0;
  /// Parts per slot; absent slots mean 1 (an unsubdivided edge). 0 identifies
  /// the endpoints.
  std::map<int, int> subdivisions;

  int parts(int slot) const;
  std::optional<VertexId> find(Role r, int index = 0, int pos = 0) const;
  /// Spoke vertex ids in spine order (only those present).
  std::vector<VertexId> spokes() const;
};

struct LabeledGraph {
  Graph graph;
  RhomboidStructure structure;
};

/// SR_n, optionally with the b_l - b_r edge (SR_n^con).
LabeledGraph simple_rhomboid(int n, bool connected = false);
/// SR_n^aug with the given mod-augmented transformations.
LabeledGraph augmented_rhomboid(int n, unsigned modifications = 0);
/// G(c_0', c_0, ..., c_{n+1}, c_{n+1}'): `counts` has n + 4 entries.
LabeledGraph rhomboid_graph(const std::vector<int>& counts);
/// Augmented rhomboid with extended-spine counts c_0..c_{n+1} (n + 2 entries).
LabeledGraph subdivided_augmented_rhomboid(const std::vector<int>& counts,
                                           unsigned modifications = 0);

/// Ambient family member described by the structure's flags and counts.
LabeledGraph ambient_graph(const RhomboidStructure& s);

/// Throws LabelError unless every vertex of g has a tag, special tags are
/// used once, and g is the induced subgraph of the ambient graph on the
/// tagged vertices.
void validate_labels(const Graph& g, const RhomboidStructure& s);

/// Restricts a labelled graph to a vertex subset, keeping the structure.
LabeledGraph induced(const LabeledGraph& lg, const VertexSet& keep);

/// Induced subgraphs of (connected) rhomboid graphs: contractible, one
/// sphere, two spheres, or S^j v S^0 v S^0 for the connected family.
HomotopyType eval_rhomboid_subgraph(const Graph& g, const RhomboidStructure& s);

/// Induced subgraphs of (mod-)augmented, possibly subdivided, rhomboid
/// graphs: contractible or S^i, S^k v S^i, S^k v S^i v S^i,
/// S^k v S^i v S^i v S^i with k >= i.
HomotopyType eval_augmented_subgraph(const Graph& g, const RhomboidStructure& s);

/// The four wedge summands of the b_2, b_l, b_r splitting, when all three
/// are present and the spine is not empty; index order
/// I(G-b2-bl-br), I(G-b2-bl-st br), I(G-b2-st bl), I(G-st b2) (unsuspended).
struct AugmentedSplit {
  std::vector<HomotopyType> pieces;
  std::optional<HomotopyType> combined;  // empty when a cone step is undecided
};
std::optional<AugmentedSplit> augmented_split(const Graph& g, const RhomboidStructure& s);

}  // namespace khoform
