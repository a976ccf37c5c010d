#pragma once

#include <iosfwd>

#include "bipass/atomic_weight.hpp"
#include "bipass/strip.hpp"

namespace bipass {

struct Report {
  std::size_t checked = 0;
  std::vector<std::string> failures;  // counterexample texts; empty = holds
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

struct CensusRecord {
  std::string strip;
  int length = 0;
  int delta = 0;
  Outcome outcome = Outcome::P;
  std::string value;
  int aw = 0;
};

/// All alive strips of length 2..max_len, each exactly once, ordered by
/// length then text.
std::vector<Strip> enumerate_strips(int max_len);

/// All multisets of nonempty alive strips with total stone count
/// 2..max_stones, each exactly once, in deterministic order.
std::vector<Position> enumerate_positions(int max_stones);

/// The built-in table of every strip up to five stones with at least as many
/// whites as blacks: outcome, value, excess and atomic weight must all match.
Report verify_table1(Arena& arena);

/// Forward: b w^{n+k} b^n w has value k.^*+* for all 2n+k+2 <= family_max_len,
/// mirrored through conjugation. Converse: among all strips of length up to
/// converse_max_len, exactly the family-form strips carry such values.
Report verify_family(Arena& arena, int family_max_len, int converse_max_len);

/// Atomic weight equals the white-stone excess for every strip up to max_len
/// and every position with up to max_sum_stones stones.
Report verify_aw_delta(Arena& arena, int max_len, int max_sum_stones);

/// Outcome laws by excess sign, plus the odd-count and even-all-larvae rules
/// at excess zero, plus the bbww+bw fixture with its unique winning move.
Report verify_outcome_rules(Arena& arena, int max_stones);

/// Six bound statements for zero-excess positions, split by strip parity.
Report verify_aw0_bounds(Arena& arena, int max_stones);

/// No enumerated position may have value *2; single strips additionally may
/// not have value ^*, and only bw offers the empty strip to both players.
Report search_star2(Arena& arena, int max_stones, int single_strip_max_len = 10);

/// Canonical option counts of the three six-to-eight-stone showcase strips.
Report verify_canonical_survival(Arena& arena);

/// Misere play outcome (a player who cannot move wins), by memoized win
/// search over literal positions. No value theory involved.
Outcome misere_outcome(const Position& p);

/// Every position with excess >= 2 is a misere Left win (mirrored for <= -2);
/// fixed small cases and the bw+bw outcome congruence are checked alongside.
Report verify_misere_two_ahead(int max_stones);

std::vector<CensusRecord> build_census(Arena& arena, int max_len,
                                       bool pretty = true);
void write_census(const std::vector<CensusRecord>& records, std::ostream& out);

/// Builds and writes the census in one go; returns the record count.
std::size_t census(Arena& arena, int max_len, std::ostream& sink,
                   bool pretty = true);

}  // namespace bipass
