#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bipass {

/// Handle to a canonical game node in an Arena. Two ids from the same arena
/// are equal if and only if the games they denote are equivalent.
class GameId {
 public:
  constexpr GameId() = default;
  constexpr explicit GameId(std::uint32_t raw) : raw_(raw) {}
  constexpr std::uint32_t raw() const { return raw_; }
  friend constexpr bool operator==(GameId, GameId) = default;
  friend constexpr auto operator<=>(GameId, GameId) = default;

 private:
  std::uint32_t raw_ = 0;  // default-constructed id is the zero game
};

enum class Outcome : std::uint8_t { L, R, N, P };
enum class ComparisonResult : std::uint8_t { Greater, Less, Equivalent, Fuzzy };
enum class FarStarOrder : std::uint8_t;  // defined in atomic_weight.hpp

const char* to_string(ComparisonResult r);
const char* to_string(Outcome o);

/// Outcome partial order: L > P > R and L > N > R; N and P are incomparable.
bool outcome_at_least(Outcome a, Outcome b);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Canonical node: no dominated options, no reversible options, every option
/// itself canonical and interned in the same arena.
struct GameNode {
  std::vector<GameId> left;
  std::vector<GameId> right;
  std::int32_t birthday = 0;  // formal depth; cached for ordering and probes
};

}  // namespace bipass

template <>
struct std::hash<bipass::GameId> {
  std::size_t operator()(bipass::GameId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.raw());
  }
};

namespace bipass {

/// Arena of hash-consed canonical games with memoized operations.
///
/// Single-owner: every operation may touch the arena's caches, so all calls
/// on one arena must be serialized. Parallel workloads use one arena per
/// worker and exchange results as value strings (format_value / parse_value).
class Arena {
 public:
  Arena();
  Arena(const Arena&) = delete;
  Arena& operator=(const Arena&) = delete;

  GameId zero() const { return GameId{0}; }

  /// Canonical form of {left | right}: dominated options removed, reversible
  /// options bypassed, result hash-consed. Idempotent on canonical input.
  GameId construct(std::vector<GameId> left, std::vector<GameId> right);

  GameId negate(GameId g);
  GameId add(GameId g, GameId h);

  /// Order of g against h, decided by the outcome of g + (-h).
  ComparisonResult compare(GameId g, GameId h);

  /// Normal play: a player with no move loses.
  Outcome outcome(GameId g);

  GameId nimber(int n);
  GameId integer(int n);

  /// The value n when g is structurally the canonical integer n.
  std::optional<int> as_integer(GameId g) const;

  /// k copies of ^* in a sum, plus an extra * when plus_star is set.
  GameId kupstar(int k, bool plus_star);

  /// True when every subposition has Left options exactly when it has
  /// Right options.
  bool is_all_small(GameId g);

  std::string format_value(GameId g, bool pretty);
  GameId parse_value(std::string_view text);

  // Frequently used values.
  GameId star() { return nimber(1); }
  GameId up();
  GameId down() { return negate(up()); }
  GameId up_star() { return add(up(), star()); }
  GameId down_star() { return negate(up_star()); }

  int birthday(GameId g) const;
  const std::vector<GameId>& left_options(GameId g) const;
  const std::vector<GameId>& right_options(GameId g) const;
  std::size_t node_count() const { return nodes_.size(); }

  /// Per-arena scratch for layers that cache canonical games under a text
  /// key (strip conversion, cross-arena imports).
  std::unordered_map<std::string, GameId>& text_memo() { return text_memo_; }

 private:
  friend FarStarOrder far_star_compare(Arena&, GameId);
  friend GameId product_up(Arena&, GameId);
  friend GameId atomic_weight(Arena&, GameId);

  const GameNode& node_at(GameId g) const;

  bool leq(GameId a, GameId b);
  // Comparisons against the not-yet-interned game {left | right}.
  bool leq_game_virtual(GameId h, const std::vector<GameId>& left,
                        const std::vector<GameId>& right);
  bool leq_virtual_game(const std::vector<GameId>& left,
                        const std::vector<GameId>& right, GameId h);

  void dedupe_ids(std::vector<GameId>& opts) const;
  void prune_dominated(std::vector<GameId>& opts, bool keep_maximal);
  bool bypass_reversible_left(std::vector<GameId>& left,
                              const std::vector<GameId>& right);
  bool bypass_reversible_right(const std::vector<GameId>& left,
                               std::vector<GameId>& right);

  GameId intern(std::vector<GameId> left, std::vector<GameId> right);
  bool node_less(GameId a, GameId b);
  std::uint64_t node_hash(const std::vector<GameId>& left,
                          const std::vector<GameId>& right) const;

  const std::string& fmt(GameId g);
  int nim_value(GameId g);  // -1 when not a nimber
  void ensure_aliases(int up_to_k);
  const std::string& pretty_fmt(GameId g);

  std::deque<GameNode> nodes_;  // deque: node references stay valid on growth
  std::unordered_map<std::uint64_t, std::vector<GameId>> intern_buckets_;

  std::unordered_map<std::uint64_t, bool> leq_memo_;
  std::unordered_map<std::uint64_t, GameId> add_memo_;
  std::unordered_map<GameId, GameId> negate_memo_;
  std::unordered_map<GameId, Outcome> outcome_memo_;
  std::unordered_map<GameId, bool> all_small_memo_;

  std::unordered_map<GameId, std::string> fmt_memo_;
  std::unordered_map<GameId, std::string> pretty_memo_;
  std::unordered_map<GameId, int> nim_memo_;
  std::unordered_map<GameId, std::string> alias_;
  int alias_built_ = 0;

  std::vector<GameId> nimber_ids_;
  std::unordered_map<int, GameId> integer_memo_;
  std::vector<GameId> kup_plain_;
  std::vector<GameId> kup_star_;
  std::optional<GameId> up_;

  std::unordered_map<std::string, GameId> text_memo_;

  // Caches owned here, used by the atomic-weight layer (atomic_weight.cpp).
  std::unordered_map<GameId, GameId> aw_memo_;
  std::unordered_map<GameId, GameId> product_memo_;
  std::unordered_map<GameId, std::int8_t> far_star_memo_;
  std::unordered_map<std::uint64_t, bool> nimber_sum_memo_;
};

}  // namespace bipass
