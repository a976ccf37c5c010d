#include "bipass/atomic_weight.hpp"

#include <algorithm>
#include <cassert>

namespace bipass {

namespace {

// State key for the g + *heap win search: (node, heap, mover).
std::uint64_t sum_state_key(GameId g, int heap, bool left_to_move) {
  return (static_cast<std::uint64_t>(g.raw()) << 32) |
         (static_cast<std::uint64_t>(heap) << 1) |
         static_cast<std::uint64_t>(left_to_move);
}

}  // namespace

const char* to_string(FarStarOrder order) {
  switch (order) {
    case FarStarOrder::Greater: return "Greater";
    case FarStarOrder::Less: return "Less";
    case FarStarOrder::Fuzzy: return "Fuzzy";
  }
  return "?";
}

FarStarOrder far_star_compare(Arena& arena, GameId g) {
  if (!arena.is_all_small(g))
    throw std::invalid_argument("far-star comparison requires an all-small game");
  if (auto it = arena.far_star_memo_.find(g); it != arena.far_star_memo_.end())
    return static_cast<FarStarOrder>(it->second);

  auto& memo = arena.nimber_sum_memo_;
  // Does the mover win g + *heap? The sum is walked componentwise; no
  // canonical sum node is ever built.
  auto wins = [&](auto&& self, GameId id, int heap, bool left_to_move) -> bool {
    const std::uint64_t key = sum_state_key(id, heap, left_to_move);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = false;
    const auto& moves =
        left_to_move ? arena.left_options(id) : arena.right_options(id);
    for (GameId option : moves) {
      if (!self(self, option, heap, !left_to_move)) {
        result = true;
        break;
      }
    }
    if (!result) {
      for (int j = 0; j < heap; ++j) {
        if (!self(self, id, j, !left_to_move)) {
          result = true;
          break;
        }
      }
    }
    memo.emplace(key, result);
    return result;
  };

  auto probe = [&](int heap) -> Outcome {
    const bool left_first = wins(wins, g, heap, true);
    const bool right_first = wins(wins, g, heap, false);
    return left_first ? (right_first ? Outcome::N : Outcome::L)
                      : (right_first ? Outcome::R : Outcome::P);
  };

  const int heap = arena.birthday(g) + 2;
  const Outcome first = probe(heap);
  const Outcome second = probe(heap + 1);
  if (first != second)
    throw std::logic_error("far-star probes disagree between heap sizes");
  FarStarOrder order;
  switch (first) {
    case Outcome::L: order = FarStarOrder::Greater; break;
    case Outcome::R: order = FarStarOrder::Less; break;
    case Outcome::N: order = FarStarOrder::Fuzzy; break;
    default:
      throw std::logic_error("far-star probe returned a previous-player win");
  }
  arena.far_star_memo_.emplace(g, static_cast<std::int8_t>(order));
  return order;
}

bool far_star_equiv(Arena& arena, GameId g, GameId h) {
  const GameId diff = arena.add(g, arena.negate(h));
  if (diff == arena.zero()) return true;  // the relation is reflexive
  if (arena.compare(arena.down_star(), diff) == ComparisonResult::Less &&
      arena.compare(diff, arena.up_star()) == ComparisonResult::Less)
    return true;
  // Boundary cases sit on the unit marks without crossing them; for an
  // all-small difference, confusion with the far star settles those. A
  // difference at or beyond a mark cannot be confused with the far star,
  // so no bound needs rechecking here.
  return arena.is_all_small(diff) &&
         far_star_compare(arena, diff) == FarStarOrder::Fuzzy;
}

GameId product_up(Arena& arena, GameId g) {
  if (g == arena.zero()) return arena.zero();
  if (auto it = arena.product_memo_.find(g); it != arena.product_memo_.end())
    return it->second;
  GameId result;
  if (auto n = arena.as_integer(g)) {
    GameId sum = arena.zero();
    for (int i = 0; i < std::abs(*n); ++i) sum = arena.add(sum, arena.up());
    result = *n > 0 ? sum : arena.negate(sum);
  } else {
    const GameId double_up_star =
        arena.add(arena.add(arena.up(), arena.up()), arena.star());
    const GameId double_down_star = arena.negate(double_up_star);
    std::vector<GameId> left, right;
    for (GameId gl : arena.left_options(g))
      left.push_back(arena.add(product_up(arena, gl), double_up_star));
    for (GameId gr : arena.right_options(g))
      right.push_back(arena.add(product_up(arena, gr), double_down_star));
    result = arena.construct(std::move(left), std::move(right));
  }
  arena.product_memo_.emplace(g, result);
  return result;
}

namespace {

// Smallest integer that is greater than or fuzzy with every game in the set.
int least_over(Arena& arena, const std::vector<GameId>& games) {
  assert(!games.empty());
  int max_birth = 0;
  for (GameId g : games) max_birth = std::max(max_birth, arena.birthday(g));
  for (int n = -max_birth - 1;; ++n) {
    bool over_all = true;
    for (GameId g : games) {
      const ComparisonResult r = arena.compare(arena.integer(n), g);
      if (r != ComparisonResult::Greater && r != ComparisonResult::Fuzzy) {
        over_all = false;
        break;
      }
    }
    if (over_all) return n;
    assert(n <= max_birth + 1);
  }
}

// Greatest integer that is less than or fuzzy with every game in the set.
int greatest_under(Arena& arena, const std::vector<GameId>& games) {
  assert(!games.empty());
  int max_birth = 0;
  for (GameId g : games) max_birth = std::max(max_birth, arena.birthday(g));
  for (int n = max_birth + 1;; --n) {
    bool under_all = true;
    for (GameId g : games) {
      const ComparisonResult r = arena.compare(arena.integer(n), g);
      if (r != ComparisonResult::Less && r != ComparisonResult::Fuzzy) {
        under_all = false;
        break;
      }
    }
    if (under_all) return n;
    assert(n >= -max_birth - 1);
  }
}

}  // namespace

GameId atomic_weight(Arena& arena, GameId g) {
  if (!arena.is_all_small(g))
    throw std::invalid_argument("atomic weight requires an all-small game");
  if (auto it = arena.aw_memo_.find(g); it != arena.aw_memo_.end())
    return it->second;
  GameId result;
  if (g == arena.zero()) {
    result = arena.zero();
  } else {
    const GameId minus_two = arena.integer(-2);
    const GameId plus_two = arena.integer(2);
    // The eccentric branch quantifies over these pre-simplification sets.
    std::vector<GameId> shifted_left, shifted_right;
    for (GameId gl : arena.left_options(g))
      shifted_left.push_back(arena.add(atomic_weight(arena, gl), minus_two));
    for (GameId gr : arena.right_options(g))
      shifted_right.push_back(arena.add(atomic_weight(arena, gr), plus_two));
    const GameId built = arena.construct(shifted_left, shifted_right);
    if (!arena.as_integer(built)) {
      result = built;
    } else {
      switch (far_star_compare(arena, g)) {
        case FarStarOrder::Fuzzy:
          result = arena.zero();
          break;
        case FarStarOrder::Less:
          result = arena.integer(least_over(arena, shifted_left));
          break;
        case FarStarOrder::Greater:
          result = arena.integer(greatest_under(arena, shifted_right));
          break;
      }
    }
  }
  arena.aw_memo_.emplace(g, result);
  return result;
}

}  // namespace bipass
