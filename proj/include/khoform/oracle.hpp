#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "khoform/braid.hpp"
#include "khoform/graph.hpp"
#include "khoform/homotopy.hpp"

namespace khoform {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultFaceBudget = std::size_t{1} << 20;

/// All independent vertex sets of a graph, grouped by dimension. Faces are
/// bitmasks over `vertices` (index i <-> bit i). faces[0] holds the empty
/// face (dimension -1), faces[d + 1] the d-dimensional faces.
struct IndependenceComplex {
  std::vector<VertexId> vertices;
  std::vector<std::vector<std::uint64_t>> faces;

  std::size_t face_count() const;
  int dimension() const { return static_cast<int>(faces.size()) - 2; }
  /// Sum over faces of (-1)^dim, including the empty face.
  long long reduced_euler_characteristic() const;
};

/// Vertex-ordered backtracking enumeration. Throws BudgetExceeded past
/// `face_budget` faces or more than 64 vertices.
IndependenceComplex independence_complex(const Graph& g,
                                         std::size_t face_budget = kDefaultFaceBudget);

struct HomologyGroup {
  long long rank = 0;
  std::vector<std::string> torsion;  // invariant factors > 1, decimal

  bool operator==(const HomologyGroup&) const = default;
};

/// Reduced integral homology, dimension -> group; only nonzero groups kept.
struct HomologyProfile {
  std::map<int, HomologyGroup> groups;

  bool has_torsion() const;
  bool is_zero() const { return groups.empty(); }
  long long rank(int dim) const;
  std::string to_string() const;
  std::string to_json() const;

  bool operator==(const HomologyProfile&) const = default;
};

/// Integer Smith normal form of every boundary map of the augmented chain
/// complex (the empty face spans degree -1).
HomologyProfile reduced_homology(const IndependenceComplex& k);

/// Invariant factors (nonzero diagonal of the Smith form) of an integer
/// matrix given as dense rows. Exposed for testing.
std::vector<std::string> smith_invariants(const std::vector<std::vector<long long>>& rows);

/// A wedge of spheres has free reduced homology of rank = multiplicity.
HomologyProfile expected_profile(const HomotopyType& h);

/// Shifts every dimension up by k (the homology of a k-fold suspension).
HomologyProfile shift(const HomologyProfile& p, int k);
/// Adds ranks dimension-wise (the homology of a wedge).
HomologyProfile add(const HomologyProfile& a, const HomologyProfile& b);

HomologyProfile oracle_profile(const Graph& g,
                               std::size_t face_budget = kDefaultFaceBudget);

}  // namespace khoform
