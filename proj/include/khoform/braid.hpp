#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace khoform {

using LetterId = int;

/// One Artin generator occurrence. `sign` is +1 for sigma_gen, -1 for its
/// formal inverse. The id survives every rewrite of the word it lives in.
struct BraidLetter {
  LetterId id = 0;
  int gen = 1;
  int sign = 1;

  bool positive() const { return sign > 0; }
  bool operator==(const BraidLetter&) const = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A word in the free monoid on sigma_1^{+-1} .. sigma_{n-1}^{+-1}. No braid
/// relations are applied anywhere: two words are equal only letter by letter.
class BraidWord {
 public:
  explicit BraidWord(int strands = 4);
  BraidWord(int strands, std::vector<BraidLetter> letters);

  /// Builds a word from signed generator indices (-k is sigma_k^{-1}),
  /// assigning ids 0, 1, 2, ...
  static BraidWord from_generators(int strands, const std::vector<int>& gens);

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  const BraidLetter& operator[](std::size_t i) const { return letters_[i]; }

  /// Smallest id that is not (and never was) used in this word's lineage.
  LetterId next_id() const { return next_id_; }
  LetterId fresh_id() { return next_id_++; }

  /// Signed generator indices, ids dropped.
  std::vector<int> generators() const;
  /// Position of the letter with this id, or -1.
  std::ptrdiff_t index_of(LetterId id) const;

  /// Removes the letters with the given ids; ids are not recycled.
  BraidWord without(const std::vector<LetterId>& ids) const;
  /// Inserts `letters` before position `pos`. Ids must already be unique.
  BraidWord with_inserted(std::size_t pos,
                          const std::vector<BraidLetter>& letters) const;

  std::string to_string() const;

  /// Letter-by-letter equality including ids.
  bool operator==(const BraidWord& other) const {
    return strands_ == other.strands_ && letters_ == other.letters_;
  }

 private:
  void validate() const;

  int strands_;
  std::vector<BraidLetter> letters_;
  LetterId next_id_ = 0;
};

/// Parses whitespace- or comma-separated nonzero integers with |k| <= n-1.
BraidWord parse(std::string_view text, int strands);

enum class TransformKind { Rotate, Reverse, Involution, Mirror };

struct Transform {
  TransformKind kind = TransformKind::Reverse;
  std::size_t offset = 0;  // rotate only

  static Transform rotate(std::size_t r) { return {TransformKind::Rotate, r}; }
  static Transform reverse() { return {TransformKind::Reverse, 0}; }
  static Transform involution() { return {TransformKind::Involution, 0}; }
  static Transform mirror() { return {TransformKind::Mirror, 0}; }

  std::string name() const;
};

/// rotate(r) moves the first r letters to the end. All transforms keep ids.
BraidWord transform(const BraidWord& w, const Transform& t);

BraidWord positive_part(const BraidWord& w);

int writhe(const BraidWord& w);

}  // namespace khoform
