#pragma once

#include <optional>
#include <string>

#include "khoform/braid.hpp"
#include "khoform/oracle.hpp"
#include "khoform/pipeline.hpp"

namespace khoform {

enum class VerdictStatus { Match, Mismatch, Skipped };
std::string to_string(VerdictStatus s);

/// Outcome of running the solver and the brute-force oracle on one word.
struct Verdict {
  VerdictStatus status = VerdictStatus::Skipped;
  std::string word;
  int strands = 4;
  std::optional<HomotopyType> type;
  std::optional<HomologyProfile> expected;  // from the solver's answer
  std::optional<HomologyProfile> oracle;
  std::string graph_dot;
  std::string trace_json;
  /// Torsion in the oracle profile, a forbidden shape or a solver
  /// inconsistency.
  bool critical = false;
  std::string reason;

  /// One JSON object on a single line. Mismatches carry the graph and trace.
  std::string to_json() const;
};

/// Solves `w` and compares against the oracle profile of its Lando graph.
Verdict compare(const BraidWord& w, std::size_t face_budget = kDefaultFaceBudget);

/// Profile predicted by replaying the word stage of `trace` on `input`: the
/// oracle of G(word) - deleted, suspended by the replayed count.
HomologyProfile replay_profile(const BraidWord& input, const ReductionTrace& trace,
                               std::size_t face_budget = kDefaultFaceBudget);

}  // namespace khoform
