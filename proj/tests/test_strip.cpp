#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "bipass/strip.hpp"
#include "bipass/verify.hpp"
#include "naive_game.hpp"

using namespace bipass;

namespace {

// Independent move oracle: interchange semantics (swap the two stones) plus
// a fixpoint normalizer, instead of the shift-and-filter implementation.
std::string fixpoint_normalize(std::string t) {
  for (;;) {
    std::string next;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == 'b') {
        if (t.find('w', i + 1) != std::string::npos) next.push_back('b');
      } else {
        if (t.rfind('b', i) != std::string::npos && t.rfind('b', i) < i)
          next.push_back('w');
      }
    }
    if (next == t) return t;
    t = std::move(next);
  }
}

std::set<Strip> oracle_options(const Strip& s, Player p) {
  const std::string& t = s.text();
  std::set<Strip> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] != 'b' || t[j] != 'w') continue;
      const char blocker = (p == Player::Left) ? 'b' : 'w';
      bool blocked = false;
      for (std::size_t x = i + 1; x < j; ++x) {
        if (t[x] == blocker) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      std::string u = t;
      std::swap(u[i], u[j]);
      out.insert(Strip(fixpoint_normalize(u)));
    }
  }
  return out;
}

std::vector<std::string> all_raw_sequences(int len) {
  std::vector<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::string t;
    for (int bit = len - 1; bit >= 0; --bit)
      t.push_back(((mask >> bit) & 1) != 0 ? 'w' : 'b');
    out.push_back(std::move(t));
  }
  return out;
}

int count_stone(const Strip& s, char c) {
  return static_cast<int>(std::count(s.text().begin(), s.text().end(), c));
}

}  // namespace

TEST_CASE("parsing and liveness normalization") {
  CHECK(parse_strip("bw").text() == "bw");
  CHECK(parse_strip("wbbbw").text() == "bbbw");
  CHECK(parse_strip("wwbb").empty());
  CHECK(parse_strip("BW").text() == "bw");
  CHECK(parse_strip("").empty());
  CHECK_THROWS_AS(parse_strip("bxw"), ParseError);
  try {
    parse_strip("bwx");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("normalization examples") {
  CHECK(Strip("wbbbw").text() == "bbbw");  // stranded leading white dies
  CHECK(Strip("wbbb").empty());            // nobody faces anybody
  CHECK(Strip("bw").text() == "bw");
}

TEST_CASE("alive shape and idempotence over all raw sequences") {
  for (int len = 0; len <= 8; ++len) {
    int alive_count = 0;
    for (const std::string& raw : all_raw_sequences(len)) {
      const Strip s(raw);
      if (!s.empty()) {
        CHECK(s.text().front() == 'b');
        CHECK(s.text().back() == 'w');
      }
      CHECK(Strip(s.text()) == s);
      if (s.text() == raw && len >= 2) ++alive_count;
    }
    // The alive strips of length n are exactly the 2^(n-2) first-black,
    // last-white sequences, so enumeration by shape misses nothing.
    if (len >= 2) CHECK(alive_count == 1 << (len - 2));
  }
}

TEST_CASE("options of small strips") {
  CHECK(options(Strip("bw"), Player::Left) == std::vector<Strip>{Strip("")});
  CHECK(options(Strip("bw"), Player::Right) == std::vector<Strip>{Strip("")});

  SUBCASE("the six-stone showcase strip") {
    const Strip s("bwwwbw");
    const auto left = options(s, Player::Left);
    const auto right = options(s, Player::Right);
    CHECK(left == std::vector<Strip>{Strip("bbw"), Strip("bwbw"),
                                     Strip("bwwbw"), Strip("bwwww")});
    CHECK(right == std::vector<Strip>{Strip("bwwbw"), Strip("bwwww")});
    CHECK(left.size() + right.size() == 6);
  }
}

TEST_CASE("options match the interchange-semantics oracle") {
  for (const Strip& s : enumerate_strips(8)) {
    for (Player p : {Player::Left, Player::Right}) {
      const auto got = options(s, p);
      const std::set<Strip> expected = oracle_options(s, p);
      CHECK(std::set<Strip>(got.begin(), got.end()) == expected);
      CHECK(got.size() == expected.size());  // already deduplicated
    }
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Strip("bw")) == Strip("bw"));
  CHECK(conjugate(Strip("bww")) == Strip("bbw"));
  CHECK(conjugate(Strip("")) == Strip(""));
  for (const Strip& s : enumerate_strips(7)) {
    CHECK(conjugate(conjugate(s)) == s);
    // Move sets swap sides under conjugation.
    const auto left = options(s, Player::Left);
    std::set<Strip> mirrored;
    for (const Strip& t : options(conjugate(s), Player::Right))
      mirrored.insert(conjugate(t));
    CHECK(std::set<Strip>(left.begin(), left.end()) == mirrored);
  }
}

TEST_CASE("excess") {
  CHECK(delta(Strip("bwww")) == 2);
  CHECK(delta(Strip("bbww")) == 0);
  CHECK(delta(Strip("bwwww")) == 3);
  CHECK(delta(Position::parse("bww+bbw")) == 0);
}

TEST_CASE("unit bypass availability") {
  CHECK(has_unit_bypass(Strip("bwbw"), Player::Left));
  CHECK_FALSE(has_unit_bypass(Strip("bww"), Player::Left));
  CHECK_FALSE(has_unit_bypass(Strip("bw"), Player::Left));
  CHECK_FALSE(has_unit_bypass(Strip("bw"), Player::Right));
  CHECK(has_unit_bypass(Strip("bww"), Player::Right));

  // The bypass raises the excess by one: bwbw has a Left option of excess 1.
  const auto opts = options(Strip("bwbw"), Player::Left);
  CHECK(std::count_if(opts.begin(), opts.end(),
                      [](const Strip& t) { return delta(t) == 1; }) == 1);
}

TEST_CASE("excess step bound") {
  for (const Strip& s : enumerate_strips(7)) {
    const int d = delta(s);
    const int blacks = count_stone(s, 'b');
    const int whites = count_stone(s, 'w');

    int raising = 0;
    for (const Strip& t : options(s, Player::Left)) {
      CHECK(delta(t) <= d + 1);
      if (delta(t) == d + 1) ++raising;
    }
    CHECK(raising == (blacks >= 2 ? 1 : 0));

    int lowering = 0;
    for (const Strip& t : options(s, Player::Right)) {
      CHECK(delta(t) >= d - 1);
      if (delta(t) == d - 1) ++lowering;
    }
    CHECK(lowering == (whites >= 2 ? 1 : 0));

    if ((blacks == 1 || whites == 1) && s.size() > 2 &&
        (blacks == 1 ? whites : blacks) > 1) {
      // A larvae longer than bw: every move strictly worsens its owner.
      if (blacks == 1) {
        for (Player p : {Player::Left, Player::Right})
          for (const Strip& t : options(s, p)) CHECK(delta(t) < d);
      } else {
        for (Player p : {Player::Left, Player::Right})
          for (const Strip& t : options(s, p)) CHECK(delta(t) > d);
      }
    }
  }
}

TEST_CASE("larvae classification") {
  CHECK(classify_larvae(Strip("bwww")) == LarvaeKind::BlackHeaded);
  CHECK(classify_larvae(Strip("bbbw")) == LarvaeKind::WhiteHeaded);
  CHECK(classify_larvae(Strip("bw")) == LarvaeKind::Both);
  CHECK(classify_larvae(Strip("bbww")) == LarvaeKind::Neither);
  CHECK_THROWS_AS(classify_larvae(Strip("")), std::invalid_argument);
}

TEST_CASE("single strip outcome rule") {
  CHECK(single_strip_outcome(Strip("")) == Outcome::P);
  CHECK(single_strip_outcome(Strip("bwbw")) == Outcome::N);
  CHECK(single_strip_outcome(Strip("bww")) == Outcome::L);
  CHECK(single_strip_outcome(Strip("bbw")) == Outcome::R);

  Arena a;
  for (const Strip& s : enumerate_strips(7)) {
    CHECK(single_strip_outcome(s) == a.outcome(to_game(a, s)));
  }
}

TEST_CASE("family strips") {
  CHECK(family_strip(0, 0) == Strip("bw"));
  CHECK(family_strip(1, 0) == Strip("bwbw"));
  CHECK(family_strip(0, 2) == Strip("bwww"));
  CHECK(family_strip(2, 1) == Strip("bwwwbbw"));
}

TEST_CASE("positions") {
  const Position p = Position::parse("bbww+bw");
  CHECK(p.strips().size() == 2);
  CHECK(p.text() == "bw+bbww");  // serialized in sorted order
  CHECK(p.total_stones() == 6);
  CHECK(Position::parse(p.text()) == p);
  CHECK(Position::parse("0").empty());
  CHECK(Position::parse("wb+bw").strips().size() == 1);  // dead strip dropped
  CHECK_THROWS_AS(Position::parse(""), ParseError);
  CHECK_THROWS_AS(Position::parse("bw++bw"), ParseError);
  CHECK_THROWS_AS(Position::parse("bw+zz"), ParseError);

  SUBCASE("position moves") {
    const auto left = options(p, Player::Left);
    std::set<Position> expected = {Position::parse("bwbw+bw"),
                                   Position::parse("bww+bw"),
                                   Position::parse("bbww")};
    CHECK(std::set<Position>(left.begin(), left.end()) == expected);
  }
}

TEST_CASE("strip conversion is cached per arena") {
  Arena a;
  const Strip s("bbwww");
  const GameId first = to_game(a, s);
  const std::size_t nodes = a.node_count();
  CHECK(to_game(a, s) == first);
  CHECK(a.node_count() == nodes);  // a second conversion interns nothing new
}

TEST_CASE("strip games") {
  Arena a;
  CHECK(to_game(a, Strip("")) == a.zero());
  CHECK(to_game(a, Position{}) == a.zero());
  CHECK(to_game(a, Strip("bw")) == a.star());
  CHECK(to_game(a, Strip("bwwbw")) == a.up());
  CHECK(a.compare(to_game(a, Strip("bbww")),
                  a.construct({a.star(), a.up()}, {a.star(), a.down()})) ==
        ComparisonResult::Equivalent);
  // Disjunctive sum: the position game is the sum of the strip games.
  CHECK(to_game(a, Position::parse("bww+bbw")) ==
        a.add(to_game(a, Strip("bww")), to_game(a, Strip("bbw"))));
}

TEST_CASE("strip games against the literal-tree reference") {
  Arena a;
  for (const Strip& s : enumerate_strips(5)) {
    CHECK(a.outcome(to_game(a, s)) ==
          naive_outcome(testing::naive_from_strip(s)));
  }
}

namespace {

// Literal normal-play win search over positions; a second route to the
// partial order that never touches canonical forms.
class LiteralSearch {
 public:
  Outcome outcome(const Position& p) {
    const bool left_first = wins_moving(p, Player::Left);
    const bool right_first = wins_moving(p, Player::Right);
    return left_first ? (right_first ? Outcome::N : Outcome::L)
                      : (right_first ? Outcome::R : Outcome::P);
  }

 private:
  bool wins_moving(const Position& p, Player mover) {
    auto& memo = memo_[mover == Player::Left ? 0 : 1];
    const std::string key = p.text();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = false;
    const Player other = mover == Player::Left ? Player::Right : Player::Left;
    for (const Position& q : options(p, mover)) {
      if (!wins_moving(q, other)) {
        result = true;
        break;
      }
    }
    memo.emplace(key, result);
    return result;
  }

  std::unordered_map<std::string, bool> memo_[2];
};

}  // namespace

TEST_CASE("engine order of strips agrees with literal play") {
  Arena a;
  LiteralSearch literal;
  const auto strips = enumerate_strips(5);
  for (const Strip& s : strips) {
    for (const Strip& t : strips) {
      const Outcome via_play = literal.outcome(Position({s, conjugate(t)}));
      ComparisonResult expected;
      switch (via_play) {
        case Outcome::L: expected = ComparisonResult::Greater; break;
        case Outcome::R: expected = ComparisonResult::Less; break;
        case Outcome::P: expected = ComparisonResult::Equivalent; break;
        default: expected = ComparisonResult::Fuzzy; break;
      }
      CHECK(a.compare(to_game(a, s), to_game(a, t)) == expected);
    }
  }
}

TEST_CASE("move duality and all-small shape") {
  Arena a;
  for (const Strip& s : enumerate_strips(7)) {
    CHECK(options(s, Player::Left).empty() ==
          options(s, Player::Right).empty());
    CHECK(a.is_all_small(to_game(a, s)));
  }
}

TEST_CASE("conjugation negates the game") {
  Arena a;
  for (const Strip& s : enumerate_strips(6)) {
    CHECK(to_game(a, conjugate(s)) == a.negate(to_game(a, s)));
  }
}

TEST_CASE("ferrers translation") {
  CHECK(to_ferrers(Strip("bwwwbw")) == Partition{{4, 1}});
  CHECK(to_ferrers(Strip("bw")) == Partition{{1}});
  CHECK(to_ferrers(Strip("")) == Partition{});
  CHECK(from_ferrers(Partition{{4, 1}}) == Strip("bwwwbw"));
  CHECK(from_ferrers(Partition{{1}}) == Strip("bw"));
  CHECK(from_ferrers(Partition{}) == Strip(""));

  SUBCASE("round trip both ways") {
    for (const Strip& s : enumerate_strips(8)) {
      CHECK(from_ferrers(to_ferrers(s)) == s);
    }
    // All partitions with at most 8 boundary steps (rows + first row).
    std::vector<Partition> stack = {Partition{}};
    auto emit = [&](auto&& self, Partition p) -> void {
      const int steps =
          static_cast<int>(p.rows.size()) + (p.rows.empty() ? 0 : p.rows[0]);
      if (steps > 8) return;
      if (!p.rows.empty()) {
        CHECK(to_ferrers(from_ferrers(p)) == p);
      }
      const int cap = p.rows.empty() ? 7 : p.rows.back();
      for (int next = 1; next <= cap; ++next) {
        Partition q = p;
        q.rows.push_back(next);
        self(self, std::move(q));
      }
    };
    emit(emit, Partition{});
  }

  SUBCASE("partition text") {
    CHECK(to_text(Partition{{4, 1}}) == "4,1");
    CHECK(to_text(Partition{}) == "");
    CHECK(parse_partition("4,1") == Partition{{4, 1}});
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS_AS(parse_partition("1,4"), ParseError);
    CHECK_THROWS_AS(parse_partition("4,0"), ParseError);
    CHECK_THROWS_AS(parse_partition("4,x"), ParseError);
  }
}
