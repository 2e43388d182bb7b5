#pragma once

#include <string>
#include <utility>
#include <vector>

#include "khoform/braid.hpp"
#include "khoform/homotopy.hpp"

namespace khoform {

enum class Convention { Framed, Oriented };

struct KhovanovEntry {
  int i = 0;
  long long rank = 0;
  bool operator==(const KhovanovEntry&) const = default;
};

/// Free groups of the extreme quantum grading, ascending in i.
struct KhovanovRow {
  int j = 0;
  Convention convention = Convention::Framed;
  std::vector<KhovanovEntry> entries;

  bool empty() const { return entries.empty(); }
  /// {"j":..,"convention":"framed"|"oriented","entries":[{"i":..,"rank":..}]}
  std::string to_json() const;
};

/// S^d contributes Z at framed degree 2(d+1) - c. The oriented row uses
/// I = (w - i)/2 and J = (3w - j)/2.
std::pair<KhovanovRow, KhovanovRow> khovanov_rows(const HomotopyType& h, int crossings,
                                                  int jmin, int writhe);

/// Inverse of the oriented regrading; recovers the framed row.
KhovanovRow framed_from_oriented(const KhovanovRow& oriented, int writhe);

/// Empty, Z, or Z[k] + Z^m[i] with m in 1..3 and k >= i.
bool in_row_menu(const KhovanovRow& framed);

struct Adequacy {
  bool b_adequate = false;
  bool a_adequate = false;
};

/// B-adequate iff the extreme complex of w is not contractible; A-adequate
/// iff the same holds for the mirror word.
Adequacy adequacy(const BraidWord& w);

}  // namespace khoform
