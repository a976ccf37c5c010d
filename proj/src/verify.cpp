#include "bipass/verify.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <unordered_map>

#include "json.hpp"

namespace bipass {

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

bool is_larvae(const Strip& s) {
  return classify_larvae(s) != LarvaeKind::Neither;
}

}  // namespace

std::vector<Strip> enumerate_strips(int max_len) {
  std::vector<Strip> out;
  for (int len = 2; len <= max_len; ++len) {
    const int mid = len - 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mid); ++mask) {
      std::string t = "b";
      for (int bit = mid - 1; bit >= 0; --bit)
        t.push_back(((mask >> bit) & 1) != 0 ? 'w' : 'b');
      t.push_back('w');
      out.emplace_back(t);
    }
  }
  return out;
}

std::vector<Position> enumerate_positions(int max_stones) {
  std::vector<Position> out;
  if (max_stones < 2) return out;
  const std::vector<Strip> pool = enumerate_strips(max_stones);
  std::vector<Strip> current;
  auto extend = [&](auto&& self, std::size_t start, int remaining) -> void {
    for (std::size_t i = start; i < pool.size(); ++i) {
      const int size = static_cast<int>(pool[i].size());
      if (size > remaining) break;  // pool is sorted by length
      current.push_back(pool[i]);
      out.push_back(Position(current));
      self(self, i, remaining - size);
      current.pop_back();
    }
  };
  extend(extend, 0, max_stones);
  return out;
}

Report verify_table1(Arena& a) {
  Timer timer;
  Report report;

  const GameId star = a.star();
  const GameId up = a.up();
  const GameId down = a.down();
  const GameId double_up_star = a.add(a.add(up, up), star);
  const GameId triple_up = a.add(a.add(up, up), up);
  const GameId switch_star_up = a.construct({star, up}, {star, down});
  const GameId bwbww_value = a.construct({double_up_star}, {up, switch_star_up});
  const GameId bbwww_value =
      a.construct({a.zero()}, {switch_star_up, bwbww_value});

  struct Row {
    const char* strip;
    Outcome outcome;
    GameId value;
    int delta;
    int aw;
  };
  const Row rows[] = {
      {"bw", Outcome::N, star, 0, 0},
      {"bww", Outcome::L, up, 1, 1},
      {"bwww", Outcome::L, double_up_star, 2, 2},
      {"bwbw", Outcome::N, star, 0, 0},
      {"bbww", Outcome::N, switch_star_up, 0, 0},
      {"bwwww", Outcome::L, triple_up, 3, 3},
      {"bwwbw", Outcome::L, up, 1, 1},
      {"bwbww", Outcome::L, bwbww_value, 1, 1},
      {"bbwww", Outcome::L, bbwww_value, 1, 1},
  };

  for (const Row& row : rows) {
    ++report.checked;
    const Strip s = parse_strip(row.strip);
    const GameId g = to_game(a, s);
    if (a.compare(g, row.value) != ComparisonResult::Equivalent) {
      report.failures.push_back(std::string(row.strip) + ": value is " +
                                a.format_value(g, true) + ", expected " +
                                a.format_value(row.value, true));
    }
    if (a.outcome(g) != row.outcome) {
      report.failures.push_back(std::string(row.strip) + ": outcome is " +
                                to_string(a.outcome(g)) + ", expected " +
                                to_string(row.outcome));
    }
    if (delta(s) != row.delta) {
      report.failures.push_back(std::string(row.strip) + ": excess is " +
                                std::to_string(delta(s)) + ", expected " +
                                std::to_string(row.delta));
    }
    if (atomic_weight(a, g) != a.integer(row.aw)) {
      report.failures.push_back(
          std::string(row.strip) + ": atomic weight is " +
          a.format_value(atomic_weight(a, g), true) + ", expected " +
          std::to_string(row.aw));
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

Report verify_family(Arena& a, int family_max_len, int converse_max_len) {
  Timer timer;
  Report report;

  for (int n = 0; 2 * n + 2 <= family_max_len; ++n) {
    for (int k = 0; 2 * n + k + 2 <= family_max_len; ++k) {
      const Strip s = family_strip(n, k);
      const GameId expected = a.kupstar(k, true);
      ++report.checked;
      if (to_game(a, s) != expected) {
        report.failures.push_back(s.text() + ": value " +
                                  a.format_value(to_game(a, s), true) +
                                  " differs from " +
                                  a.format_value(expected, true));
      }
      ++report.checked;
      const Strip mirrored = conjugate(s);
      if (to_game(a, mirrored) != a.negate(expected)) {
        report.failures.push_back(mirrored.text() +
                                  ": mirrored family value differs from " +
                                  a.format_value(a.negate(expected), true));
      }
    }
  }

  std::unordered_map<GameId, int> family_value;
  std::unordered_map<GameId, int> mirror_value;
  for (int k = 0; k <= converse_max_len; ++k) {
    family_value.emplace(a.kupstar(k, true), k);
    mirror_value.emplace(a.negate(a.kupstar(k, true)), k);
  }

  for (const Strip& s : enumerate_strips(converse_max_len)) {
    const GameId g = to_game(a, s);
    ++report.checked;
    if (auto it = family_value.find(g); it != family_value.end()) {
      const int k = it->second;
      const int twice_n = static_cast<int>(s.size()) - k - 2;
      const bool family_shape = twice_n >= 0 && twice_n % 2 == 0 &&
                                family_strip(twice_n / 2, k) == s;
      if (!family_shape) {
        report.failures.push_back(
            s.text() + ": carries the k=" + std::to_string(k) +
            " family value but is not of family shape");
      }
    }
    if (auto it = mirror_value.find(g);
        it != mirror_value.end() && it->second > 0) {
      const int k = it->second;
      const int twice_n = static_cast<int>(s.size()) - k - 2;
      const bool mirror_shape =
          twice_n >= 0 && twice_n % 2 == 0 &&
          conjugate(family_strip(twice_n / 2, k)) == s;
      if (!mirror_shape) {
        report.failures.push_back(
            s.text() + ": carries the mirrored k=" + std::to_string(k) +
            " family value but is not of mirrored family shape");
      }
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

Report verify_aw_delta(Arena& a, int max_len, int max_sum_stones) {
  Timer timer;
  Report report;
  for (const Strip& s : enumerate_strips(max_len)) {
    ++report.checked;
    const GameId weight = atomic_weight(a, to_game(a, s));
    if (weight != a.integer(delta(s))) {
      report.failures.push_back(s.text() + ": atomic weight " +
                                a.format_value(weight, true) +
                                " differs from excess " +
                                std::to_string(delta(s)));
    }
  }
  for (const Position& p : enumerate_positions(max_sum_stones)) {
    ++report.checked;
    const GameId weight = atomic_weight(a, to_game(a, p));
    if (weight != a.integer(delta(p))) {
      report.failures.push_back(p.text() + ": atomic weight " +
                                a.format_value(weight, true) +
                                " differs from excess " +
                                std::to_string(delta(p)));
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

Report verify_outcome_rules(Arena& a, int max_stones) {
  Timer timer;
  Report report;
  for (const Position& p : enumerate_positions(max_stones)) {
    ++report.checked;
    const int d = delta(p);
    const Outcome o = a.outcome(to_game(a, p));
    if (d >= 2 && o != Outcome::L) {
      report.failures.push_back(p.text() + ": excess " + std::to_string(d) +
                                " but outcome " + to_string(o));
    } else if (d == 1 && o != Outcome::L && o != Outcome::N) {
      report.failures.push_back(p.text() +
                                ": excess 1 but Left loses moving first");
    } else if (d == -1 && o != Outcome::R && o != Outcome::N) {
      report.failures.push_back(p.text() +
                                ": excess -1 but Right loses moving first");
    } else if (d <= -2 && o != Outcome::R) {
      report.failures.push_back(p.text() + ": excess " + std::to_string(d) +
                                " but outcome " + to_string(o));
    }
    if (d == 0) {
      const bool odd = p.strips().size() % 2 == 1;
      if (odd) {
        if (o != Outcome::N) {
          report.failures.push_back(p.text() +
                                    ": zero excess over an odd strip count "
                                    "but outcome " +
                                    std::string(to_string(o)));
        }
      } else if (std::all_of(p.strips().begin(), p.strips().end(),
                             is_larvae)) {
        if (o != Outcome::P) {
          report.failures.push_back(p.text() +
                                    ": zero-excess even larvae sum but "
                                    "outcome " +
                                    std::string(to_string(o)));
        }
      }
    }
  }

  // bbww+bw is a first-player win whose only good Left move swaps inside the
  // four-stone strip, not the unit-bypass.
  const Position fixture = Position::parse("bbww+bw");
  ++report.checked;
  if (a.outcome(to_game(a, fixture)) != Outcome::N) {
    report.failures.push_back("bbww+bw: expected a first-player win");
  }
  std::vector<Position> winning;
  for (const Position& q : options(fixture, Player::Left)) {
    const Outcome o = a.outcome(to_game(a, q));
    if (o == Outcome::L || o == Outcome::P) winning.push_back(q);
  }
  ++report.checked;
  if (winning.size() != 1 || winning[0] != Position::parse("bwbw+bw")) {
    report.failures.push_back(
        "bbww+bw: expected the unique Left winning move to bwbw+bw");
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

Report verify_aw0_bounds(Arena& a, int max_stones) {
  Timer timer;
  Report report;
  const GameId star = a.star();
  const GameId up = a.up();
  const GameId down = a.down();
  const GameId up_star = a.up_star();
  const GameId down_star = a.down_star();
  auto less_or_fuzzy = [](ComparisonResult r) {
    return r == ComparisonResult::Less || r == ComparisonResult::Fuzzy;
  };

  for (const Position& p : enumerate_positions(max_stones)) {
    if (delta(p) != 0) continue;
    ++report.checked;
    const GameId g = to_game(a, p);
    const bool odd = p.strips().size() % 2 == 1;
    auto fail = [&](const std::string& what) {
      report.failures.push_back(p.text() + ": " + what);
    };
    if (odd) {
      if (a.outcome(g) != Outcome::N) fail("not fuzzy with zero");
      const bool all_star = std::all_of(
          p.strips().begin(), p.strips().end(),
          [&](const Strip& s) { return to_game(a, s) == star; });
      if (all_star && g != star) fail("sum of stars is not star");
      if (a.compare(down_star, g) != ComparisonResult::Less)
        fail("not strictly above v*");
      if (a.compare(g, up_star) != ComparisonResult::Less)
        fail("not strictly below ^*");
      if (!less_or_fuzzy(a.compare(down, g))) fail("not above-or-fuzzy v");
      if (!less_or_fuzzy(a.compare(g, up))) fail("not below-or-fuzzy ^");
    } else {
      if (a.compare(g, star) != ComparisonResult::Fuzzy)
        fail("not fuzzy with star");
      const bool all_larvae =
          std::all_of(p.strips().begin(), p.strips().end(), is_larvae);
      if (all_larvae && g != a.zero()) fail("even larvae sum is not zero");
      if (a.compare(down, g) != ComparisonResult::Less)
        fail("not strictly above v");
      if (a.compare(g, up) != ComparisonResult::Less)
        fail("not strictly below ^");
      if (!less_or_fuzzy(a.compare(down_star, g)))
        fail("not above-or-fuzzy v*");
      if (!less_or_fuzzy(a.compare(g, up_star))) fail("not below-or-fuzzy ^*");
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

Report search_star2(Arena& a, int max_stones, int single_strip_max_len) {
  Timer timer;
  Report report;
  const GameId star2 = a.nimber(2);
  for (const Position& p : enumerate_positions(max_stones)) {
    ++report.checked;
    if (to_game(a, p) == star2) {
      report.failures.push_back(p.text() + ": value *2");
    }
  }
  const GameId up_star = a.up_star();
  const Strip empty_strip;
  for (const Strip& s : enumerate_strips(single_strip_max_len)) {
    ++report.checked;
    const GameId g = to_game(a, s);
    if (g == star2) report.failures.push_back(s.text() + ": strip value *2");
    if (g == up_star) report.failures.push_back(s.text() + ": strip value ^*");
    const auto left = options(s, Player::Left);
    const auto right = options(s, Player::Right);
    const bool zero_for_both =
        std::find(left.begin(), left.end(), empty_strip) != left.end() &&
        std::find(right.begin(), right.end(), empty_strip) != right.end();
    if (zero_for_both != (s.text() == "bw")) {
      report.failures.push_back(
          s.text() + ": empty-strip option for both players is exclusive to bw");
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

Report verify_canonical_survival(Arena& a) {
  Timer timer;
  Report report;

  auto check_counts = [&](const char* strip, std::size_t left,
                          std::size_t right) {
    ++report.checked;
    const GameId g = to_game(a, parse_strip(strip));
    if (a.left_options(g).size() != left ||
        a.right_options(g).size() != right) {
      report.failures.push_back(
          std::string(strip) + ": canonical option counts (" +
          std::to_string(a.left_options(g).size()) + "," +
          std::to_string(a.right_options(g).size()) + "), expected (" +
          std::to_string(left) + "," + std::to_string(right) + ")");
    }
  };
  check_counts("bbbwww", 3, 3);
  check_counts("bbbbwwww", 2, 2);

  const Strip showcase = parse_strip("bbbwwwbw");
  const GameId g = to_game(a, showcase);
  ++report.checked;
  if (options(showcase, Player::Left).size() != 4 ||
      options(showcase, Player::Right).size() != 4) {
    report.failures.push_back("bbbwwwbw: expected 4 literal options per side");
  }
  ++report.checked;
  if (a.left_options(g).size() != 4) {
    // Rule-derived play gives (1 Left, 4 Right): the Left unit-bypass to
    // bbbwwww dominates the other three Left moves. The stated count holds
    // for the conjugate strip bwbbbwww, whose canonical form is (4, 1).
    const GameId mirror = to_game(a, conjugate(showcase));
    report.failures.push_back(
        "bbbwwwbw: expected 4 surviving Left options, measured (" +
        std::to_string(a.left_options(g).size()) + " Left, " +
        std::to_string(a.right_options(g).size()) + " Right); conjugate " +
        "bwbbbwww measures (" + std::to_string(a.left_options(mirror).size()) +
        " Left, " + std::to_string(a.right_options(mirror).size()) +
        " Right)");
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

namespace {

// Misere win search over literal positions, memoized per mover on the
// serialized position.
class MisereSearch {
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
    const auto moves = options(p, mover);
    bool result = moves.empty();  // no move available: the mover wins
    if (!result) {
      const Player other =
          mover == Player::Left ? Player::Right : Player::Left;
      for (const Position& q : moves) {
        if (!wins_moving(q, other)) {
          result = true;
          break;
        }
      }
    }
    memo.emplace(key, result);
    return result;
  }

  std::unordered_map<std::string, bool> memo_[2];
};

}  // namespace

Outcome misere_outcome(const Position& p) {
  MisereSearch search;
  return search.outcome(p);
}

Report verify_misere_two_ahead(int max_stones) {
  Timer timer;
  Report report;
  MisereSearch search;
  for (const Position& p : enumerate_positions(max_stones)) {
    const int d = delta(p);
    if (d >= 2) {
      ++report.checked;
      if (search.outcome(p) != Outcome::L) {
        report.failures.push_back(p.text() + ": excess " + std::to_string(d) +
                                  " but misere outcome " +
                                  to_string(search.outcome(p)));
      }
    } else if (d <= -2) {
      ++report.checked;
      if (search.outcome(p) != Outcome::R) {
        report.failures.push_back(p.text() + ": excess " + std::to_string(d) +
                                  " but misere outcome " +
                                  to_string(search.outcome(p)));
      }
    }
  }

  ++report.checked;
  if (search.outcome(Position::parse("bwww")) != Outcome::L) {
    report.failures.push_back("bwww: expected misere outcome L");
  }
  ++report.checked;
  if (search.outcome(Position::parse("bww")) != Outcome::N) {
    report.failures.push_back("bww: expected misere outcome N");
  }

  // Dicot star-pair congruence: appending bw+bw never changes the misere
  // outcome, matching the outcome of the empty position being N.
  ++report.checked;
  if (search.outcome(Position::parse("bw+bw")) != search.outcome(Position{})) {
    report.failures.push_back("bw+bw: misere outcome differs from the empty "
                              "position");
  }
  for (const Position& p : enumerate_positions(max_stones - 4)) {
    ++report.checked;
    std::vector<Strip> padded = p.strips();
    padded.emplace_back("bw");
    padded.emplace_back("bw");
    if (search.outcome(Position(std::move(padded))) != search.outcome(p)) {
      report.failures.push_back(p.text() +
                                ": misere outcome changes when bw+bw is added");
    }
  }
  report.elapsed_seconds = timer.seconds();
  return report;
}

std::vector<CensusRecord> build_census(Arena& a, int max_len, bool pretty) {
  std::vector<CensusRecord> out;
  for (const Strip& s : enumerate_strips(max_len)) {
    const GameId g = to_game(a, s);
    CensusRecord rec;
    rec.strip = s.text();
    rec.length = static_cast<int>(s.size());
    rec.delta = delta(s);
    rec.outcome = a.outcome(g);
    rec.value = a.format_value(g, pretty);
    const auto weight = a.as_integer(atomic_weight(a, g));
    if (!weight || *weight != rec.delta) {
      throw std::logic_error("census row " + rec.strip +
                             ": atomic weight does not match the excess");
    }
    rec.aw = *weight;
    out.push_back(std::move(rec));
  }
  return out;
}

void write_census(const std::vector<CensusRecord>& records,
                  std::ostream& out) {
  for (const CensusRecord& rec : records) {
    nlohmann::ordered_json line;
    line["strip"] = rec.strip;
    line["length"] = rec.length;
    line["delta"] = rec.delta;
    line["outcome"] = to_string(rec.outcome);
    line["value"] = rec.value;
    line["aw"] = rec.aw;
    out << line.dump() << '\n';
    if (!out) throw std::runtime_error("census sink write failed");
  }
  out.flush();
  if (!out) throw std::runtime_error("census sink write failed");
}

std::size_t census(Arena& a, int max_len, std::ostream& sink, bool pretty) {
  const auto records = build_census(a, max_len, pretty);
  write_census(records, sink);
  return records.size();
}

}  // namespace bipass
