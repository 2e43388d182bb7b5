#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "khoform/braid.hpp"
#include "khoform/graph.hpp"
#include "khoform/homotopy.hpp"
#include "khoform/rhomboid.hpp"

namespace khoform {

/// Raised when a rewrite's structural precondition fails at runtime. The
/// trace accumulated so far travels with it.
class InconsistencyError : public std::logic_error {
 public:
  InconsistencyError(const std::string& what, std::string trace_json = {})
      : std::logic_error(what), trace_json_(std::move(trace_json)) {}
  const std::string& trace_json() const { return trace_json_; }

 private:
  std::string trace_json_;
};

/// A structural precondition of the C3 path does not hold; the caller falls
/// back to generic reduction on the current graph.
class PathUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Insertion {
  LetterId after = -1;  // -1: at the front of the word
  std::vector<BraidLetter> letters;
};

/// One word rewrite. Replay order: transform, removals, insertions, marks,
/// unmarks; then the suspension count and the contractible flag.
struct TraceStep {
  std::string rule;
  std::vector<LetterId> witness;
  std::optional<Transform> transform;
  std::vector<LetterId> removed;
  std::vector<Insertion> inserted;
  std::vector<LetterId> marked;
  std::vector<LetterId> unmarked;
  int suspensions = 0;
  bool contractible = false;
};

/// Replaying `log` on the input yields a word, a deleted set and a count k
/// with I(G(input)) ~ Sigma^k I(G(word) - deleted). `suspensions` adds the
/// graph-stage suspensions to k; wedge terms are stored fully suspended.
/// `graph_log` lists the graph moves after the word stage.
struct ReductionTrace {
  int suspensions = 0;
  std::set<LetterId> deleted;
  std::vector<HomotopyType> wedge_terms;
  std::vector<TraceStep> log;
  std::vector<std::string> graph_log;
  bool contractible = false;

  std::string to_json() const;
  static ReductionTrace from_json(const std::string& text);
};

struct ReplayState {
  BraidWord word;
  std::set<LetterId> deleted;
  int suspensions = 0;
  bool contractible = false;
};

/// Applies the logged rewrites to `input`. Throws std::invalid_argument when a
/// step refers to a letter that is not there.
ReplayState replay(const BraidWord& input, const ReductionTrace& trace);

/// Applies one step to a state in place.
void apply_step(ReplayState& state, const TraceStep& step);

enum class Pattern { PositiveSquare, NegativeSquare, Nesting, R2 };
std::string to_string(Pattern p);

struct Violation {
  Pattern pattern = Pattern::PositiveSquare;
  std::vector<LetterId> letters;  // in cyclic word order
};

/// First forbidden pattern under the fixed priority and scan order.
std::optional<Violation> find_violation(const BraidWord& w);
bool is_strongly_reduced(const BraidWord& w);

struct StrongReduction {
  bool contractible = false;
  BraidWord word;
  ReductionTrace trace;
};

StrongReduction strong_reduce(const BraidWord& w);

enum class ClassTag { C0, C1, C2, C3, C4, C5 };
std::string to_string(ClassTag t);

struct BraidClass {
  ClassTag tag = ClassTag::C0;
  std::vector<int> exponents;
  std::vector<Transform> normalization;
  /// The normalised word (ids unchanged).
  BraidWord word;
};

/// Classifies by the positive structure. C4 with a_1 > 1 is carried to C3.
/// Throws InconsistencyError when no family matches.
BraidClass classify(const BraidWord& w_red);

/// C0, C1, C2 and C5 with no graph deletions pending.
HomotopyType solve_easy(const BraidWord& w, const BraidClass& cls);

struct HeadTail {
  LetterId opening = -1;  // sigma_2 before w1
  LetterId right = -1;    // sigma_3
  LetterId left = -1;     // sigma_1
  LetterId closing = -1;  // sigma_2 after w3
  std::vector<LetterId> w1, w2, w3;
  /// Maximal head variant (a)..(e) the segments sit in.
  char variant = 'a';
  BraidWord word;  // after the boundary migrations
  std::vector<TraceStep> steps;
};

/// Locates the head of a normalised C3 word and validates it against the
/// allowed segment menu. Throws InconsistencyError otherwise.
HeadTail head_tail(const BraidWord& w, const BraidClass& cls);

struct TailElimination {
  BraidWord word;
  std::vector<LetterId> deleted;
  std::vector<TraceStep> steps;
};

/// Splitting vertex method on every tail segment holding sigma_2^{-1}.
TailElimination eliminate_tail_sigma2(const BraidWord& w, const HeadTail& ht);

/// Role labels for G(w) - deleted on a C3 word with a_1 > 1 whose tail
/// carries only sigma_1^{-1}, sigma_3^{-1} negatives (tagged as spiders).
LabeledGraph label_c3(const BraidWord& w, const HeadTail& ht,
                      const std::set<LetterId>& deleted);

struct SpiderOutcome {
  LabeledGraph residual;
  int suspensions = 0;
  /// Set when a move already determined the type (before the suspensions).
  std::optional<HomotopyType> terminal;
  /// Side summands, already suspended to the level of the input graph.
  std::vector<HomotopyType> wedge_terms;
  std::vector<std::string> log;
};

SpiderOutcome eliminate_spiders(const LabeledGraph& g);

/// Evaluates a spider-free labelled graph through the augmented rhomboid
/// family; LabelError when the labels do not validate.
HomotopyType finish_positive_tail(const LabeledGraph& g);

struct Solution {
  HomotopyType type = HomotopyType::contractible();
  ReductionTrace trace;
  std::optional<BraidClass> cls;
  bool structured = false;  // C3 path completed without falling back
  bool oracle_fallback = false;
};

inline constexpr std::size_t kOracleFallbackVertices = 20;

/// Requires four strands; 2- and 3-strand words are embedded.
Solution solve(const BraidWord& w);

}  // namespace khoform
