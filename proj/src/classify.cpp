#include <algorithm>

#include "khoform/pipeline.hpp"

namespace khoform {

namespace {

struct Positive {
  std::vector<std::size_t> index;  // positions in the full word
  std::vector<int> gen;
};

Positive positives(const BraidWord& w) {
  Positive p;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].positive()) {
      p.index.push_back(i);
      p.gen.push_back(w[i].gen);
    }
  return p;
}

bool far_pair(int a, int b) { return (a == 1 && b == 3) || (a == 3 && b == 1); }

std::vector<std::size_t> far_adjacencies(const Positive& p) {
  std::vector<std::size_t> out;
  const std::size_t m = p.gen.size();
  if (m < 2) return out;
  for (std::size_t i = 0; i < m; ++i)
    if (far_pair(p.gen[i], p.gen[(i + 1) % m])) out.push_back(i);
  return out;
}

// Reads (x sigma_2)^{a_1} (y sigma_2)^{a_2} ... with x, y alternating between
// 1 and 3 starting at `first`; empty when the sequence does not fit.
std::vector<int> parse_blocks(const std::vector<int>& gens, std::size_t from, int first) {
  std::vector<int> blocks;
  int expect = first;
  std::size_t i = from;
  while (i < gens.size()) {
    int count = 0;
    while (i + 1 < gens.size() && gens[i] == expect && gens[i + 1] == 2) {
      ++count;
      i += 2;
    }
    if (count == 0) return {};
    blocks.push_back(count);
    expect = 4 - expect;
  }
  return blocks;
}

BraidWord apply(BraidClass& cls, const BraidWord& w, Transform t) {
  cls.normalization.push_back(t);
  return transform(w, t);
}

InconsistencyError no_family(const BraidWord& w) {
  return InconsistencyError("word " + w.to_string() + " fits no positive family");
}

// w has exactly one far adjacency, of the form sigma_3 sigma_1.
BraidClass classify_one_adjacency(BraidClass cls, BraidWord w) {
  Positive p = positives(w);
  auto adj = far_adjacencies(p);
  std::size_t at = adj.front();
  w = apply(cls, w, Transform::rotate(p.index[at]));
  p = positives(w);
  auto blocks = parse_blocks(p.gen, 1, 1);
  if (p.gen.front() != 3 || blocks.empty()) throw no_family(w);
  cls.exponents = blocks;
  cls.word = w;
  cls.tag = blocks.size() % 2 == 0 ? ClassTag::C3 : ClassTag::C4;
  return cls;
}

}  // namespace

std::string to_string(ClassTag t) {
  static const char* names[] = {"C0", "C1", "C2", "C3", "C4", "C5"};
  return names[static_cast<int>(t)];
}

BraidClass classify(const BraidWord& w_red) {
  if (w_red.strands() != 4) throw std::invalid_argument("classify expects a 4-strand word");
  BraidClass cls;
  cls.word = w_red;
  BraidWord w = w_red;
  Positive p = positives(w);
  const std::size_t m = p.gen.size();
  if (m <= 1) {
    cls.tag = ClassTag::C0;
    return cls;
  }
  auto adj = far_adjacencies(p);
  if (adj.size() >= 2) {
    cls.tag = ClassTag::C5;
    return cls;
  }
  if (adj.size() == 1) {
    if (p.gen[adj.front()] == 1) w = apply(cls, w, Transform::involution());
    cls = classify_one_adjacency(std::move(cls), w);
    if (cls.tag == ClassTag::C4 && cls.exponents.front() > 1) {
      // Reverse and involution keep one far adjacency; the re-read word is C3.
      BraidWord v = apply(cls, cls.word, Transform::reverse());
      v = apply(cls, v, Transform::involution());
      cls = classify_one_adjacency(std::move(cls), v);
      if (cls.tag != ClassTag::C3) throw no_family(cls.word);
    }
    return cls;
  }

  const bool has1 = std::count(p.gen.begin(), p.gen.end(), 1) > 0;
  const bool has3 = std::count(p.gen.begin(), p.gen.end(), 3) > 0;
  if (has1 && has3) {
    // Rotate to a sigma_1 that follows a sigma_3 run.
    std::size_t start = m;
    for (std::size_t i = 0; i < m; ++i)
      if (p.gen[i] == 1 && p.gen[(i + m - 2) % m] == 3) {
        start = i;
        break;
      }
    if (start == m) throw no_family(w);
    w = apply(cls, w, Transform::rotate(p.index[start]));
    auto blocks = parse_blocks(positives(w).gen, 0, 1);
    if (blocks.empty() || blocks.size() % 2) throw no_family(w);
    cls.tag = ClassTag::C2;
    cls.exponents = blocks;
    cls.word = w;
    return cls;
  }
  if (has3) w = apply(cls, w, Transform::involution());
  p = positives(w);
  std::size_t start = static_cast<std::size_t>(std::find(p.gen.begin(), p.gen.end(), 1) - p.gen.begin());
  if (start == m) throw no_family(w);
  w = apply(cls, w, Transform::rotate(p.index[start]));
  auto blocks = parse_blocks(positives(w).gen, 0, 1);
  if (blocks.size() != 1) throw no_family(w);
  cls.tag = ClassTag::C1;
  cls.exponents = blocks;
  cls.word = w;
  return cls;
}

}  // namespace khoform
