#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bipass/game.hpp"

namespace bipass {

enum class Stone : char { Black = 'b', White = 'w' };
enum class Player : std::uint8_t { Left, Right };

enum class LarvaeKind : std::uint8_t { BlackHeaded, WhiteHeaded, Both, Neither };

/// One strip of stones, always held in alive form: empty, or starting with a
/// black stone and ending with a white one (every black stone has a white
/// somewhere to its right and every white a black somewhere to its left).
class Strip {
 public:
  Strip() = default;

  /// Normalizes the raw stone sequence: stones with nobody left to face are
  /// removed in one simultaneous pass. Accepts only 'b' and 'w' characters.
  explicit Strip(std::string_view raw_stones);

  const std::string& text() const { return stones_; }
  std::size_t size() const { return stones_.size(); }
  bool empty() const { return stones_.empty(); }
  Stone stone(std::size_t i) const { return static_cast<Stone>(stones_[i]); }

  friend bool operator==(const Strip&, const Strip&) = default;
  // Ordered by (length, text); also the enumeration and serialization order.
  friend bool operator<(const Strip& a, const Strip& b) {
    if (a.stones_.size() != b.stones_.size())
      return a.stones_.size() < b.stones_.size();
    return a.stones_ < b.stones_;
  }

 private:
  std::string stones_;
};

/// Parses user text (case-insensitive 'b'/'w') and normalizes to alive form.
/// Throws ParseError on any other character.
Strip parse_strip(std::string_view text);

/// All distinct strips reachable by the player in one move, normalized.
/// Left jumps a black stone rightward across whites; Right mirrors.
std::vector<Strip> options(const Strip& s, Player player);

/// Reverse the strip and flip every color; swaps the players' roles.
Strip conjugate(const Strip& s);

/// Excess of white stones over black stones.
int delta(const Strip& s);

bool has_unit_bypass(const Strip& s, Player player);

/// Classification by stone counts; rejects the empty strip.
LarvaeKind classify_larvae(const Strip& s);

/// Single-strip outcome from the stone counts alone, no game tree:
/// P when empty, N when balanced, L/R by the sign of the excess.
Outcome single_strip_outcome(const Strip& s);

/// The strip b w^{n+k} b^n w.
Strip family_strip(int n, int k);

/// A multiset of nonempty alive strips; a disjunctive sum.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<Strip> strips);  // drops empties, sorts

  /// Parses '+'-joined strip texts; "0" denotes the empty position.
  static Position parse(std::string_view text);

  const std::vector<Strip>& strips() const { return strips_; }
  bool empty() const { return strips_.empty(); }
  int total_stones() const;
  std::string text() const;

  friend bool operator==(const Position&, const Position&) = default;
  friend bool operator<(const Position& a, const Position& b) {
    return a.strips_ < b.strips_;
  }

 private:
  std::vector<Strip> strips_;
};

int delta(const Position& p);
std::vector<Position> options(const Position& p, Player player);

/// Canonical game of a strip or position; memoized per arena on strip text.
GameId to_game(Arena& arena, const Strip& s);
GameId to_game(Arena& arena, const Position& p);

/// Integer partition: weakly decreasing positive row lengths.
struct Partition {
  std::vector<int> rows;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Staircase boundary of the partition, walked from the top-right corner to
/// the bottom-left: one vertical step per black stone, one horizontal step
/// per white stone, in strip order.
Partition to_ferrers(const Strip& s);
Strip from_ferrers(const Partition& p);

std::string to_text(const Partition& p);          // "4,1"; empty for []
Partition parse_partition(std::string_view text);  // throws ParseError

}  // namespace bipass
