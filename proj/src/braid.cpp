#include "khoform/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

namespace khoform {

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 2) throw std::invalid_argument("strand count must be >= 2");
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2) throw std::invalid_argument("strand count must be >= 2");
  for (const auto& l : letters_) next_id_ = std::max(next_id_, l.id + 1);
  validate();
}

BraidWord BraidWord::from_generators(int strands, const std::vector<int>& gens) {
  std::vector<BraidLetter> letters;
  letters.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int g = gens[i];
    letters.push_back({static_cast<LetterId>(i), g < 0 ? -g : g, g < 0 ? -1 : 1});
  }
  return BraidWord(strands, std::move(letters));
}

void BraidWord::validate() const {
  std::unordered_set<LetterId> seen;
  for (const auto& l : letters_) {
    if (l.gen < 1 || l.gen > strands_ - 1)
      throw std::invalid_argument("generator index out of range: " +
                                  std::to_string(l.gen));
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("letter sign must be +1 or -1");
    if (!seen.insert(l.id).second)
      throw std::invalid_argument("duplicate letter id " + std::to_string(l.id));
  }
}

std::vector<int> BraidWord::generators() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.sign * l.gen);
  return out;
}

std::ptrdiff_t BraidWord::index_of(LetterId id) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].id == id) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

BraidWord BraidWord::without(const std::vector<LetterId>& ids) const {
  std::unordered_set<LetterId> drop(ids.begin(), ids.end());
  BraidWord out(strands_);
  out.next_id_ = next_id_;
  for (const auto& l : letters_)
    if (!drop.count(l.id)) out.letters_.push_back(l);
  return out;
}

BraidWord BraidWord::with_inserted(std::size_t pos,
                                   const std::vector<BraidLetter>& letters) const {
  BraidWord out(strands_);
  out.letters_ = letters_;
  out.letters_.insert(out.letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters.begin(), letters.end());
  out.next_id_ = next_id_;
  for (const auto& l : letters) out.next_id_ = std::max(out.next_id_, l.id + 1);
  out.validate();
  return out;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i].sign * letters_[i].gen;
  }
  return os.str();
}

BraidWord parse(std::string_view text, int strands) {
  if (strands < 2) throw std::invalid_argument("strand count must be >= 2");
  std::vector<int> gens;
  std::size_t token_index = 0;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    std::string_view tok = text.substr(start, i - start);
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
      throw ParseError(token_index, "token " + std::to_string(token_index) +
                                        " is not an integer: '" +
                                        std::string(tok) + "'");
    if (value == 0)
      throw ParseError(token_index,
                       "token " + std::to_string(token_index) + " is zero");
    if (std::abs(value) > strands - 1)
      throw ParseError(token_index, "token " + std::to_string(token_index) +
                                        ": generator " + std::string(tok) +
                                        " out of range for " +
                                        std::to_string(strands) + " strands");
    gens.push_back(value);
    ++token_index;
  }
  return BraidWord::from_generators(strands, gens);
}

std::string Transform::name() const {
  switch (kind) {
    case TransformKind::Rotate: return "rotate(" + std::to_string(offset) + ")";
    case TransformKind::Reverse: return "reverse";
    case TransformKind::Involution: return "involution";
    case TransformKind::Mirror: return "mirror";
  }
  return "?";
}

BraidWord transform(const BraidWord& w, const Transform& t) {
  std::vector<BraidLetter> letters = w.letters();
  switch (t.kind) {
    case TransformKind::Rotate: {
      std::size_t len = letters.size();
      if (t.offset >= std::max<std::size_t>(1, len))
        throw std::out_of_range("rotate offset " + std::to_string(t.offset) +
                                " out of range for length " +
                                std::to_string(len));
      std::rotate(letters.begin(),
                  letters.begin() + static_cast<std::ptrdiff_t>(t.offset),
                  letters.end());
      break;
    }
    case TransformKind::Reverse:
      std::reverse(letters.begin(), letters.end());
      break;
    case TransformKind::Involution:
      for (auto& l : letters) l.gen = w.strands() - l.gen;
      break;
    case TransformKind::Mirror:
      for (auto& l : letters) l.sign = -l.sign;
      break;
  }
  BraidWord out(w.strands(), std::move(letters));
  // keep the lineage counter so later insertions never collide
  while (out.next_id() < w.next_id()) out.fresh_id();
  return out;
}

BraidWord positive_part(const BraidWord& w) {
  std::vector<LetterId> drop;
  for (const auto& l : w.letters())
    if (!l.positive()) drop.push_back(l.id);
  return w.without(drop);
}

int writhe(const BraidWord& w) {
  int s = 0;
  for (const auto& l : w.letters()) s += l.sign;
  return s;
}

}  // namespace khoform
