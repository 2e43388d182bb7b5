#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace khoform {

class WedgeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Contractible, or a wedge of spheres with the dimensions stored in
/// descending order. S^{-1} (the empty complex) only ever appears alone.
class HomotopyType {
 public:
  static HomotopyType contractible() { return HomotopyType(); }
  static HomotopyType sphere(int dim) { return HomotopyType({dim}); }
  static HomotopyType empty() { return sphere(-1); }
  static HomotopyType wedge_of(std::vector<int> dims);

  bool is_contractible() const { return dims_.empty(); }
  bool is_empty_complex() const { return dims_.size() == 1 && dims_[0] == -1; }
  /// Number of spheres; 0 for contractible.
  std::size_t sphere_count() const { return dims_.size(); }
  const std::vector<int>& dims() const { return dims_; }
  int max_dim() const;
  int min_dim() const;

  std::string to_string() const;
  /// {"type":"contractible"} or {"type":"wedge","dims":[...]}.
  std::string to_json() const;
  static HomotopyType from_json(const std::string& text);

  bool operator==(const HomotopyType&) const = default;

 private:
  HomotopyType() = default;
  explicit HomotopyType(std::vector<int> dims);

  std::vector<int> dims_;
};

HomotopyType suspend(const HomotopyType& h, int times = 1);
/// Contractible is the unit; wedging S^{-1} with a non-contractible operand
/// throws WedgeError.
HomotopyType wedge(const HomotopyType& a, const HomotopyType& b);
/// S^a * S^b = S^{a+b+1}, distributed over wedge summands.
HomotopyType join(const HomotopyType& a, const HomotopyType& b);

/// Shapes allowed for closed 4-braids: contractible, S^i, S^k v S^i,
/// S^k v S^i v S^i, S^k v S^i v S^i v S^i with k >= i.
bool has_four_braid_shape(const HomotopyType& h);

}  // namespace khoform
