#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace khoform {

using VertexId = int;
using VertexSet = std::set<VertexId>;

/// Undirected graph keyed by stable vertex ids. Loops and parallel edges may
/// be present until simplify() is called; every surgery returns a new graph.
class Graph {
 public:
  Graph() = default;

  void add_vertex(VertexId v, std::string label = {});
  /// Adds an edge; a == b adds a loop, repeated calls add parallel edges.
  void add_edge(VertexId a, VertexId b);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const;
  bool empty() const { return ids_.empty(); }

  const std::vector<VertexId>& vertices() const { return ids_; }
  bool has_vertex(VertexId v) const;
  /// Sorted neighbour ids (with multiplicity, self included for loops).
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId a, VertexId b) const;
  bool has_loop(VertexId v) const { return adjacent(v, v); }
  bool is_simple() const;

  const std::string& label(VertexId v) const;
  void set_label(VertexId v, std::string label);

  /// N(v) plus v.
  VertexSet closed_star(VertexId v) const;

  Graph without(const VertexSet& drop) const;
  Graph induced(const VertexSet& keep) const;
  Graph without_edge(VertexId a, VertexId b) const;

  std::vector<Graph> components() const;
  bool is_connected() const;
  bool is_forest() const;

  /// Sorted edge list (a <= b) of the underlying multigraph.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  bool operator==(const Graph& other) const {
    return ids_ == other.ids_ && adj_ == other.adj_;
  }

  std::string to_dot(const std::string& name = "G") const;

 private:
  std::size_t index(VertexId v) const;  // throws if absent

  std::vector<VertexId> ids_;                 // sorted
  std::vector<std::vector<VertexId>> adj_;    // parallel to ids_, sorted
  std::vector<std::string> labels_;
};

struct SimplifyResult {
  Graph graph;
  std::vector<VertexId> removed_loop_vertices;
};

/// Drops loop-carrying vertices and collapses parallel edges.
SimplifyResult simplify(const Graph& g);

/// True iff N(w) \ {v} is contained in N(v) \ {w}.
bool dominates(const Graph& g, VertexId v, VertexId w);

enum class SiteKind { None, Isolated, Leaf, Domination, Csorba, AdjacentDomination };

/// A primitive reduction site. Vertex meaning by kind:
///   Isolated: [v]; Leaf: [leaf, preleaf];
///   Domination / AdjacentDomination: [dominator, dominated];
///   Csorba: [end, inner, inner, end].
struct Site {
  SiteKind kind = SiteKind::None;
  std::vector<VertexId> vertices;
};

std::string to_string(SiteKind k);

/// First site under Isolated > Leaf > non-adjacent Domination > Csorba >
/// adjacent Domination, ties to the smallest ids. Expects a simple graph.
Site find_site(const Graph& g);
/// All Csorba paths of a simple graph, canonical orientation (end0 < end3).
std::vector<Site> csorba_paths(const Graph& g);

/// Contracts the path end-inner-inner-end to one vertex keeping the first
/// end's id. When the ends are adjacent the merged vertex carries a loop and
/// is removed, as simplify would.
Graph contract_csorba(const Graph& g, const std::vector<VertexId>& path);

/// Replaces edge a-b by a path of `pieces` edges through fresh vertex ids.
Graph subdivide_edge(const Graph& g, VertexId a, VertexId b, int pieces,
                     VertexId first_fresh_id);

enum class SurgeryKind { DeleteVertices, DeleteStar, ContractCsorba, DeleteEdge, Induced };

struct Surgery {
  SurgeryKind kind = SurgeryKind::DeleteVertices;
  std::vector<VertexId> targets;
};

/// Dispatches to the concrete surgery; throws std::invalid_argument when the
/// targets do not fit the action.
Graph surgery(const Graph& g, const Surgery& action);

/// Small constructors used throughout the tests and family evaluators.
Graph path_graph(int edges, VertexId first_id = 0);
Graph cycle_graph(int vertices, VertexId first_id = 0);
Graph complete_graph(int vertices, VertexId first_id = 0);
/// Disjoint union; ids must not collide.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Graph join: every vertex of a is joined to every vertex of b.
Graph graph_join(const Graph& a, const Graph& b);

/// If g is a single path (>= 1 vertex) returns its edge count.
std::optional<int> as_path(const Graph& g);
/// If g is a single cycle returns its order.
std::optional<int> as_cycle(const Graph& g);

}  // namespace khoform
