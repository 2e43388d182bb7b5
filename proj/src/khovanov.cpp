#include "khoform/khovanov.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"
#include "khoform/pipeline.hpp"

namespace khoform {

namespace {

int halve(int x, const char* what) {
  if (x % 2 != 0) throw std::logic_error(std::string("odd ") + what + " in grading shift");
  return x / 2;
}

}  // namespace

std::string KhovanovRow::to_json() const {
  nlohmann::json e = nlohmann::json::array();
  for (const auto& x : entries) e.push_back({{"i", x.i}, {"rank", x.rank}});
  return nlohmann::json{{"j", j},
                        {"convention", convention == Convention::Framed ? "framed" : "oriented"},
                        {"entries", e}}
      .dump();
}

std::pair<KhovanovRow, KhovanovRow> khovanov_rows(const HomotopyType& h, int crossings,
                                                  int jmin, int writhe) {
  std::map<int, long long> by_i;
  for (int d : h.dims()) {
    const int i = 2 * (d + 1) - crossings;
    ++by_i[i];
  }
  KhovanovRow framed{jmin, Convention::Framed, {}};
  for (auto [i, r] : by_i) {
    if ((i - crossings) % 2 != 0) throw std::logic_error("framed degree has the wrong parity");
    framed.entries.push_back({i, r});
  }
  KhovanovRow oriented{halve(3 * writhe - jmin, "quantum grading"), Convention::Oriented, {}};
  for (auto it = framed.entries.rbegin(); it != framed.entries.rend(); ++it)
    oriented.entries.push_back({halve(writhe - it->i, "homological grading"), it->rank});
  if (framed_from_oriented(oriented, writhe).entries != framed.entries)
    throw std::logic_error("oriented regrading does not invert");
  return {framed, oriented};
}

KhovanovRow framed_from_oriented(const KhovanovRow& oriented, int writhe) {
  KhovanovRow framed{3 * writhe - 2 * oriented.j, Convention::Framed, {}};
  for (auto it = oriented.entries.rbegin(); it != oriented.entries.rend(); ++it)
    framed.entries.push_back({writhe - 2 * it->i, it->rank});
  return framed;
}

bool in_row_menu(const KhovanovRow& framed) {
  const auto& e = framed.entries;
  if (e.empty()) return true;
  // k = i folds everything into one degree.
  if (e.size() == 1) return e[0].rank >= 1 && e[0].rank <= 4;
  if (e.size() != 2) return false;
  return e[1].rank == 1 && e[0].rank >= 1 && e[0].rank <= 3;
}

Adequacy adequacy(const BraidWord& w) {
  Adequacy a;
  a.b_adequate = !solve(w).type.is_contractible();
  a.a_adequate = !solve(transform(w, Transform::mirror())).type.is_contractible();
  return a;
}

}  // namespace khoform
