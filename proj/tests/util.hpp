#pragma once

#include <string>
#include <vector>

#include "khoform/braid.hpp"
#include "khoform/homotopy.hpp"

namespace khoform::test {

inline BraidWord w4(const std::vector<int>& gens) { return BraidWord::from_generators(4, gens); }
inline BraidWord wn(int n, const std::vector<int>& gens) { return BraidWord::from_generators(n, gens); }

inline HomotopyType S(int d) { return HomotopyType::sphere(d); }
inline HomotopyType W(std::vector<int> dims) { return HomotopyType::wedge_of(std::move(dims)); }
inline HomotopyType contractible() { return HomotopyType::contractible(); }

}  // namespace khoform::test
