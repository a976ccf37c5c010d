#pragma once

#include "bipass/game.hpp"

namespace bipass {

/// Order of a game against the far star (an arbitrarily large nim-heap).
/// Equivalence is impossible: the far star is not a short game.
enum class FarStarOrder : std::uint8_t { Greater, Less, Fuzzy };

const char* to_string(FarStarOrder order);

/// Order of the all-small game g against the far star, decided by the stable
/// outcome of g + *N probed at N = birthday(g) + 2 and N + 1. Throws
/// std::invalid_argument when g is not all-small and std::logic_error when
/// the two probes disagree.
FarStarOrder far_star_compare(Arena& arena, GameId g);

/// True when the games differ by strictly less than a unit in either
/// direction: v* < g - h < ^*.
bool far_star_equiv(Arena& arena, GameId g, GameId h);

/// Product of a game with up: 0 maps to 0, integers to iterated sums of ^,
/// anything else to {GL*^ + 2.^*+* | GR*^ + 2.v*+*} canonicalized.
GameId product_up(Arena& arena, GameId g);

/// Atomic weight of an all-small game: the unique G whose product with up is
/// far-star-equivalent to g. Integer-valued on every strip position here.
GameId atomic_weight(Arena& arena, GameId g);

}  // namespace bipass
