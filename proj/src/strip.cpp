#include "bipass/strip.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <set>

namespace bipass {

namespace {

// One simultaneous filtering pass: a black stone survives iff some white
// stone sits to its right, a white stone iff some black sits to its left.
std::string filter_dead(std::string_view raw) {
  std::string alive;
  alive.reserve(raw.size());
  bool black_seen = false;
  std::size_t whites_remaining = static_cast<std::size_t>(
      std::count(raw.begin(), raw.end(), 'w'));
  for (char c : raw) {
    if (c == 'w') {
      --whites_remaining;
      if (black_seen) alive.push_back('w');
    } else {
      if (whites_remaining > 0) alive.push_back('b');
      black_seen = true;
    }
  }
  return alive;
}

}  // namespace

Strip::Strip(std::string_view raw_stones) {
  for (char c : raw_stones) {
    assert(c == 'b' || c == 'w');
    (void)c;
  }
  stones_ = filter_dead(raw_stones);
  assert(filter_dead(stones_) == stones_);  // one pass reaches the fixpoint
  assert(stones_.empty() ||
         (stones_.front() == 'b' && stones_.back() == 'w'));
}

Strip parse_strip(std::string_view text) {
  std::string raw;
  raw.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char lower =
        static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    if (lower != 'b' && lower != 'w')
      throw ParseError("strip stones must be 'b' or 'w'", i);
    raw.push_back(lower);
  }
  return Strip(raw);
}

std::vector<Strip> options(const Strip& s, Player player) {
  const std::string& t = s.text();
  const std::size_t n = t.size();
  std::set<Strip> out;
  if (player == Player::Left) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] != 'b') continue;
      for (std::size_t j = i + 1; j < n && t[j] == 'w'; ++j) {
        std::string u = t;
        for (std::size_t x = i; x < j; ++x) u[x] = 'w';
        u[j] = 'b';
        out.insert(Strip(u));
      }
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      if (t[j] != 'w') continue;
      for (std::size_t i = j; i-- > 0 && t[i] == 'b';) {
        std::string u = t;
        for (std::size_t x = j; x > i; --x) u[x] = 'b';
        u[i] = 'w';
        out.insert(Strip(u));
      }
    }
  }
  return {out.begin(), out.end()};
}

Strip conjugate(const Strip& s) {
  std::string flipped(s.text().rbegin(), s.text().rend());
  for (char& c : flipped) c = (c == 'b') ? 'w' : 'b';
  return Strip(flipped);
}

int delta(const Strip& s) {
  int excess = 0;
  for (char c : s.text()) excess += (c == 'w') ? 1 : -1;
  return excess;
}

bool has_unit_bypass(const Strip& s, Player player) {
  const char own = (player == Player::Left) ? 'b' : 'w';
  return std::count(s.text().begin(), s.text().end(), own) >= 2;
}

LarvaeKind classify_larvae(const Strip& s) {
  if (s.empty())
    throw std::invalid_argument("cannot classify the empty strip");
  const auto blacks = std::count(s.text().begin(), s.text().end(), 'b');
  const auto whites = static_cast<long>(s.size()) - blacks;
  if (blacks == 1 && whites == 1) return LarvaeKind::Both;
  if (blacks == 1) return LarvaeKind::BlackHeaded;
  if (whites == 1) return LarvaeKind::WhiteHeaded;
  return LarvaeKind::Neither;
}

Outcome single_strip_outcome(const Strip& s) {
  if (s.empty()) return Outcome::P;
  const int excess = delta(s);
  if (excess > 0) return Outcome::L;
  if (excess < 0) return Outcome::R;
  return Outcome::N;
}

Strip family_strip(int n, int k) {
  assert(n >= 0 && k >= 0);
  std::string t = "b";
  t.append(static_cast<std::size_t>(n + k), 'w');
  t.append(static_cast<std::size_t>(n), 'b');
  t.push_back('w');
  return Strip(t);
}

Position::Position(std::vector<Strip> strips) {
  for (Strip& s : strips) {
    if (!s.empty()) strips_.push_back(std::move(s));
  }
  std::sort(strips_.begin(), strips_.end());
}

Position Position::parse(std::string_view text) {
  if (text == "0") return Position{};
  if (text.empty()) throw ParseError("empty position text; use \"0\"", 0);
  std::vector<Strip> strips;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = text.find('+', start);
    const std::size_t end = (plus == std::string_view::npos) ? text.size() : plus;
    if (end == start) throw ParseError("empty strip in position", start);
    try {
      strips.push_back(parse_strip(text.substr(start, end - start)));
    } catch (const ParseError& e) {
      throw ParseError("strip stones must be 'b' or 'w'", start + e.position());
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return Position(std::move(strips));
}

int Position::total_stones() const {
  int total = 0;
  for (const Strip& s : strips_) total += static_cast<int>(s.size());
  return total;
}

std::string Position::text() const {
  if (strips_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < strips_.size(); ++i) {
    if (i > 0) out.push_back('+');
    out += strips_[i].text();
  }
  return out;
}

int delta(const Position& p) {
  int excess = 0;
  for (const Strip& s : p.strips()) excess += delta(s);
  return excess;
}

std::vector<Position> options(const Position& p, Player player) {
  std::set<Position> out;
  const auto& strips = p.strips();
  for (std::size_t i = 0; i < strips.size(); ++i) {
    for (const Strip& moved : options(strips[i], player)) {
      std::vector<Strip> next = strips;
      next[i] = moved;
      out.insert(Position(std::move(next)));
    }
  }
  return {out.begin(), out.end()};
}

GameId to_game(Arena& arena, const Strip& s) {
  if (s.empty()) return arena.zero();
  auto& memo = arena.text_memo();
  if (auto it = memo.find(s.text()); it != memo.end()) return it->second;
  std::vector<GameId> left, right;
  for (const Strip& t : options(s, Player::Left))
    left.push_back(to_game(arena, t));
  for (const Strip& t : options(s, Player::Right))
    right.push_back(to_game(arena, t));
  const GameId id = arena.construct(std::move(left), std::move(right));
  memo.emplace(s.text(), id);
  return id;
}

GameId to_game(Arena& arena, const Position& p) {
  GameId sum = arena.zero();
  for (const Strip& s : p.strips()) sum = arena.add(sum, to_game(arena, s));
  return sum;
}

Partition to_ferrers(const Strip& s) {
  Partition out;
  int width = 0;
  for (char c : s.text()) width += (c == 'w') ? 1 : 0;
  for (char c : s.text()) {
    if (c == 'b') {
      out.rows.push_back(width);
    } else {
      --width;
    }
  }
  assert(width == 0);
  return out;
}

Strip from_ferrers(const Partition& p) {
  std::string t;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const int next = (i + 1 < p.rows.size()) ? p.rows[i + 1] : 0;
    assert(p.rows[i] >= next && next >= 0);
    t.push_back('b');
    t.append(static_cast<std::size_t>(p.rows[i] - next), 'w');
  }
  return Strip(t);
}

std::string to_text(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(p.rows[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  Partition out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end =
        (comma == std::string_view::npos) ? text.size() : comma;
    int value = 0;
    const auto result =
        std::from_chars(text.data() + start, text.data() + end, value);
    if (result.ec != std::errc{} || result.ptr != text.data() + end ||
        value < 1)
      throw ParseError("partition rows must be positive integers", start);
    if (!out.rows.empty() && out.rows.back() < value)
      throw ParseError("partition rows must be weakly decreasing", start);
    out.rows.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace bipass
