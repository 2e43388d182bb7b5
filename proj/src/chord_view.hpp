#pragma once

#include <unordered_map>
#include <vector>

#include "khoform/resolution.hpp"

namespace khoform::detail {

// Neighbourhood queries on the Lando graph of one word without building it.
class ChordView {
 public:
  explicit ChordView(const BraidWord& w) : d_(resolve(w)) {
    for (std::size_t i = 0; i < d_.chords.size(); ++i) index_[d_.chords[i].letter] = i;
  }

  const ChordDiagram& diagram() const { return d_; }

  bool is_vertex(LetterId id) const {
    auto it = index_.find(id);
    return it != index_.end() && d_.chords[it->second].admissible();
  }

  // Sorted neighbour ids; empty for non-admissible chords.
  std::vector<LetterId> neighbors(LetterId id) const {
    std::vector<LetterId> out;
    if (!is_vertex(id)) return out;
    const Chord& c = d_.chords[index_.at(id)];
    const auto& circle = d_.circles[static_cast<std::size_t>(c.a.circle)];
    int lo = std::min(c.a.position, c.b.position);
    int hi = std::max(c.a.position, c.b.position);
    std::unordered_map<LetterId, int> seen;
    for (int p = lo + 1; p < hi; ++p) ++seen[circle[static_cast<std::size_t>(p)].letter];
    for (auto [x, count] : seen)
      if (count == 1 && is_vertex(x)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  ChordDiagram d_;
  std::unordered_map<LetterId, std::size_t> index_;
};

}  // namespace khoform::detail
