#include "khoform/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace khoform {

const Chord& ChordDiagram::chord(LetterId letter) const {
  for (const auto& c : chords)
    if (c.letter == letter) return c;
  throw std::invalid_argument("no chord for letter " + std::to_string(letter));
}

namespace {

enum class Dir { Down, Up };

struct WalkState {
  int level;
  int pos;
  Dir dir;
  bool operator==(const WalkState&) const = default;
};

}  // namespace

ChordDiagram resolve(const BraidWord& w) {
  ChordDiagram d;
  const int n = w.strands();
  const int c = static_cast<int>(w.size());
  d.strands = n;
  d.crossings = c;
  if (c == 0) {
    d.circles.assign(static_cast<std::size_t>(n), {});
    return d;
  }
  const auto& letters = w.letters();
  // visited[(level * n + pos) * 2 + half]; half 1 only exists below a cup
  std::vector<char> visited(static_cast<std::size_t>(c) * n * 2, 0);
  auto seg = [&](int t, int p, int half) -> char& {
    return visited[(static_cast<std::size_t>(t) * n + p) * 2 + half];
  };
  auto in_pair = [&](int t, int p) {
    int lo = letters[t].gen - 1;
    return p == lo || p == lo + 1;
  };
  std::vector<ChordEnd> end0(static_cast<std::size_t>(c)), end1(static_cast<std::size_t>(c));
  auto record = [&](std::vector<Endpoint>& circle, int t, int end) {
    int circle_index = static_cast<int>(d.circles.size());
    ChordEnd ce{circle_index, static_cast<int>(circle.size())};
    (end == 0 ? end0 : end1)[static_cast<std::size_t>(t)] = ce;
    circle.push_back({letters[t].id, end});
  };

  for (int t0 = 0; t0 < c; ++t0) {
    for (int p0 = 0; p0 < n; ++p0) {
      if (seg(t0, p0, 0)) continue;
      std::vector<Endpoint> circle;
      WalkState start{t0, p0, Dir::Down};
      WalkState s = start;
      do {
        const auto& L = letters[s.level];
        bool turn = L.positive() && in_pair(s.level, s.pos);
        int other = (s.pos == L.gen - 1) ? L.gen : L.gen - 1;
        if (s.dir == Dir::Down) {
          if (turn) {
            seg(s.level, s.pos, 0) = 1;
            seg(s.level, other, 0) = 1;
            record(circle, s.level, 0);
            s = {(s.level + c - 1) % c, other, Dir::Up};
          } else {
            seg(s.level, s.pos, 0) = 1;
            if (!L.positive() && in_pair(s.level, s.pos))
              record(circle, s.level, s.pos == L.gen - 1 ? 0 : 1);
            s = {(s.level + 1) % c, s.pos, Dir::Down};
          }
        } else {
          if (turn) {
            seg(s.level, s.pos, 1) = 1;
            seg(s.level, other, 1) = 1;
            record(circle, s.level, 1);
            s = {(s.level + 1) % c, other, Dir::Down};
          } else {
            seg(s.level, s.pos, 0) = 1;
            if (!L.positive() && in_pair(s.level, s.pos))
              record(circle, s.level, s.pos == L.gen - 1 ? 0 : 1);
            s = {(s.level + c - 1) % c, s.pos, Dir::Up};
          }
        }
      } while (!(s == start));
      d.circles.push_back(std::move(circle));
    }
  }
  d.chords.reserve(static_cast<std::size_t>(c));
  for (int t = 0; t < c; ++t) {
    const auto& L = letters[t];
    d.chords.push_back({L.id, L.gen, L.sign, end0[static_cast<std::size_t>(t)],
                        end1[static_cast<std::size_t>(t)]});
  }
  return d;
}

int circle_count(const BraidWord& w) { return resolve(w).circle_count(); }

int j_min(const BraidWord& w) {
  return -static_cast<int>(w.size()) - 2 * circle_count(w);
}

LandoGraph build_lando(const ChordDiagram& d) {
  LandoGraph lg;
  struct Span {
    int lo, hi;
    LetterId id;
  };
  std::vector<std::vector<Span>> per_circle(d.circles.size());
  for (const auto& ch : d.chords) {
    if (!ch.admissible()) continue;
    lg.graph.add_vertex(ch.letter);
    lg.sign[ch.letter] = ch.sign;
    int lo = std::min(ch.a.position, ch.b.position);
    int hi = std::max(ch.a.position, ch.b.position);
    per_circle[static_cast<std::size_t>(ch.a.circle)].push_back({lo, hi, ch.letter});
  }
  for (auto& spans : per_circle) {
    std::sort(spans.begin(), spans.end(),
              [](const Span& x, const Span& y) { return x.lo < y.lo; });
    for (std::size_t i = 0; i < spans.size(); ++i) {
      // chords starting strictly inside span i; they cross iff they end outside
      for (std::size_t j = i + 1; j < spans.size() && spans[j].lo < spans[i].hi; ++j)
        if (spans[j].hi > spans[i].hi) lg.graph.add_edge(spans[i].id, spans[j].id);
    }
  }
  return lg;
}

Graph lando_graph(const BraidWord& w) { return build_lando(resolve(w)).graph; }

std::string to_json(const ChordDiagram& d) {
  using nlohmann::json;
  json j;
  j["strands"] = d.strands;
  j["crossings"] = d.crossings;
  j["circle_count"] = d.circle_count();
  json circles = json::array();
  for (const auto& c : d.circles) {
    json arr = json::array();
    for (const auto& e : c) arr.push_back({{"letter", e.letter}, {"end", e.end}});
    circles.push_back(arr);
  }
  j["circles"] = circles;
  json chords = json::array();
  for (const auto& ch : d.chords) {
    chords.push_back({{"letter", ch.letter},
                      {"gen", ch.gen},
                      {"sign", ch.sign},
                      {"a", {{"circle", ch.a.circle}, {"position", ch.a.position}}},
                      {"b", {{"circle", ch.b.circle}, {"position", ch.b.position}}},
                      {"admissible", ch.admissible()}});
  }
  j["chords"] = chords;
  return j.dump();
}

}  // namespace khoform
