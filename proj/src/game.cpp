#include "bipass/game.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>

namespace bipass {

namespace {

constexpr std::uint64_t kMixer = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t seed, std::uint64_t value) {
  return seed ^ (value + kMixer + (seed << 6) + (seed >> 2));
}

std::uint64_t pack_pair(GameId a, GameId b) {
  return (static_cast<std::uint64_t>(a.raw()) << 32) | b.raw();
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::L: return "L";
    case Outcome::R: return "R";
    case Outcome::N: return "N";
    case Outcome::P: return "P";
  }
  return "?";
}

const char* to_string(ComparisonResult r) {
  switch (r) {
    case ComparisonResult::Greater: return "Greater";
    case ComparisonResult::Less: return "Less";
    case ComparisonResult::Equivalent: return "Equivalent";
    case ComparisonResult::Fuzzy: return "Fuzzy";
  }
  return "?";
}

bool outcome_at_least(Outcome a, Outcome b) {
  return a == b || a == Outcome::L || b == Outcome::R;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) +
                         ")"),
      position_(position) {}

Arena::Arena() {
  nodes_.push_back(GameNode{{}, {}, 0});
  intern_buckets_[node_hash({}, {})].push_back(GameId{0});
  nimber_ids_.push_back(GameId{0});
}

const GameNode& Arena::node_at(GameId g) const {
  assert(g.raw() < nodes_.size());
  return nodes_[g.raw()];
}

int Arena::birthday(GameId g) const { return node_at(g).birthday; }

const std::vector<GameId>& Arena::left_options(GameId g) const {
  return node_at(g).left;
}

const std::vector<GameId>& Arena::right_options(GameId g) const {
  return node_at(g).right;
}

std::uint64_t Arena::node_hash(const std::vector<GameId>& left,
                               const std::vector<GameId>& right) const {
  std::uint64_t seed = 0;
  for (GameId id : left) seed = mix(seed, id.raw());
  seed = mix(seed, 0x51ed270b99b5f803ULL);  // separates the two sides
  for (GameId id : right) seed = mix(seed, id.raw());
  return seed;
}

void Arena::dedupe_ids(std::vector<GameId>& opts) const {
  std::sort(opts.begin(), opts.end());
  opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
}

bool Arena::leq(GameId a, GameId b) {
  if (a == b) return true;
  const std::uint64_t key = pack_pair(a, b);
  if (auto it = leq_memo_.find(key); it != leq_memo_.end()) return it->second;
  bool result = true;
  for (GameId al : left_options(a)) {
    if (leq(b, al)) {  // some Left option of a is at least b
      result = false;
      break;
    }
  }
  if (result) {
    for (GameId br : right_options(b)) {
      if (leq(br, a)) {
        result = false;
        break;
      }
    }
  }
  leq_memo_.emplace(key, result);
  return result;
}

bool Arena::leq_game_virtual(GameId h, const std::vector<GameId>& left,
                             const std::vector<GameId>& right) {
  for (GameId hl : left_options(h)) {
    if (leq_virtual_game(left, right, hl)) return false;
  }
  for (GameId r : right) {
    if (leq(r, h)) return false;
  }
  return true;
}

bool Arena::leq_virtual_game(const std::vector<GameId>& left,
                             const std::vector<GameId>& right, GameId h) {
  for (GameId l : left) {
    if (leq(h, l)) return false;
  }
  for (GameId hr : right_options(h)) {
    if (leq_game_virtual(hr, left, right)) return false;
  }
  return true;
}

void Arena::prune_dominated(std::vector<GameId>& opts, bool keep_maximal) {
  if (opts.size() < 2) return;
  std::vector<GameId> kept;
  kept.reserve(opts.size());
  for (GameId candidate : opts) {
    bool dominated = false;
    for (GameId other : opts) {
      if (other == candidate) continue;
      if (keep_maximal ? leq(candidate, other) : leq(other, candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(candidate);
  }
  opts = std::move(kept);
}

bool Arena::bypass_reversible_left(std::vector<GameId>& left,
                                   const std::vector<GameId>& right) {
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (GameId glr : right_options(left[i])) {
      if (!leq_game_virtual(glr, left, right)) continue;
      // left[i] reverses out through glr; its Left options replace it
      std::vector<GameId> next;
      const auto& replacement = left_options(glr);
      next.reserve(left.size() - 1 + replacement.size());
      for (std::size_t j = 0; j < left.size(); ++j) {
        if (j != i) next.push_back(left[j]);
      }
      next.insert(next.end(), replacement.begin(), replacement.end());
      dedupe_ids(next);
      left = std::move(next);
      return true;
    }
  }
  return false;
}

bool Arena::bypass_reversible_right(const std::vector<GameId>& left,
                                    std::vector<GameId>& right) {
  for (std::size_t i = 0; i < right.size(); ++i) {
    for (GameId grl : left_options(right[i])) {
      if (!leq_virtual_game(left, right, grl)) continue;
      std::vector<GameId> next;
      const auto& replacement = right_options(grl);
      next.reserve(right.size() - 1 + replacement.size());
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (j != i) next.push_back(right[j]);
      }
      next.insert(next.end(), replacement.begin(), replacement.end());
      dedupe_ids(next);
      right = std::move(next);
      return true;
    }
  }
  return false;
}

GameId Arena::construct(std::vector<GameId> left, std::vector<GameId> right) {
  dedupe_ids(left);
  dedupe_ids(right);
  for (;;) {
    prune_dominated(left, /*keep_maximal=*/true);
    prune_dominated(right, /*keep_maximal=*/false);
    if (bypass_reversible_left(left, right)) continue;
    if (bypass_reversible_right(left, right)) continue;
    break;
  }
  return intern(std::move(left), std::move(right));
}

bool Arena::node_less(GameId a, GameId b) {
  if (a == b) return false;
  const int ba = birthday(a);
  const int bb = birthday(b);
  if (ba != bb) return ba < bb;
  return fmt(a) < fmt(b);  // canonical text is unique per canonical game
}

GameId Arena::intern(std::vector<GameId> left, std::vector<GameId> right) {
  auto canonical_order = [this](GameId a, GameId b) { return node_less(a, b); };
  std::sort(left.begin(), left.end(), canonical_order);
  std::sort(right.begin(), right.end(), canonical_order);

  const std::uint64_t h = node_hash(left, right);
  for (GameId candidate : intern_buckets_[h]) {
    const GameNode& node = node_at(candidate);
    if (node.left == left && node.right == right) return candidate;
  }

  std::int32_t birth = 0;
  for (GameId id : left) birth = std::max(birth, node_at(id).birthday + 1);
  for (GameId id : right) birth = std::max(birth, node_at(id).birthday + 1);

  nodes_.push_back(GameNode{std::move(left), std::move(right), birth});
  const GameId id{static_cast<std::uint32_t>(nodes_.size() - 1)};
  intern_buckets_[h].push_back(id);
  return id;
}

GameId Arena::negate(GameId g) {
  if (g == zero()) return zero();
  if (auto it = negate_memo_.find(g); it != negate_memo_.end())
    return it->second;
  std::vector<GameId> left, right;
  left.reserve(right_options(g).size());
  right.reserve(left_options(g).size());
  for (GameId gr : right_options(g)) left.push_back(negate(gr));
  for (GameId gl : left_options(g)) right.push_back(negate(gl));
  // Negation of a canonical game is canonical, so interning directly is safe.
  GameId result = intern(std::move(left), std::move(right));
  negate_memo_.emplace(g, result);
  negate_memo_.emplace(result, g);
  return result;
}

GameId Arena::add(GameId g, GameId h) {
  if (g == zero()) return h;
  if (h == zero()) return g;
  const std::uint64_t key = pack_pair(g, h);
  if (auto it = add_memo_.find(key); it != add_memo_.end()) return it->second;
  std::vector<GameId> left, right;
  for (GameId gl : left_options(g)) left.push_back(add(gl, h));
  for (GameId hl : left_options(h)) left.push_back(add(g, hl));
  for (GameId gr : right_options(g)) right.push_back(add(gr, h));
  for (GameId hr : right_options(h)) right.push_back(add(g, hr));
  GameId result = construct(std::move(left), std::move(right));
  add_memo_.emplace(key, result);
  return result;
}

ComparisonResult Arena::compare(GameId g, GameId h) {
  switch (outcome(add(g, negate(h)))) {
    case Outcome::P: return ComparisonResult::Equivalent;
    case Outcome::L: return ComparisonResult::Greater;
    case Outcome::R: return ComparisonResult::Less;
    case Outcome::N: return ComparisonResult::Fuzzy;
  }
  throw std::logic_error("unreachable outcome tag");
}

Outcome Arena::outcome(GameId g) {
  if (auto it = outcome_memo_.find(g); it != outcome_memo_.end())
    return it->second;
  bool left_first_wins = false;
  for (GameId gl : left_options(g)) {
    const Outcome o = outcome(gl);
    if (o == Outcome::L || o == Outcome::P) {
      left_first_wins = true;
      break;
    }
  }
  bool right_first_wins = false;
  for (GameId gr : right_options(g)) {
    const Outcome o = outcome(gr);
    if (o == Outcome::R || o == Outcome::P) {
      right_first_wins = true;
      break;
    }
  }
  const Outcome result =
      left_first_wins ? (right_first_wins ? Outcome::N : Outcome::L)
                      : (right_first_wins ? Outcome::R : Outcome::P);
  outcome_memo_.emplace(g, result);
  return result;
}

GameId Arena::nimber(int n) {
  if (n < 0) throw std::invalid_argument("nimber index must be nonnegative");
  while (static_cast<int>(nimber_ids_.size()) <= n) {
    std::vector<GameId> opts(nimber_ids_.begin(), nimber_ids_.end());
    GameId id = construct(opts, opts);
    nimber_ids_.push_back(id);
  }
  return nimber_ids_[static_cast<std::size_t>(n)];
}

GameId Arena::integer(int n) {
  if (n == 0) return zero();
  if (auto it = integer_memo_.find(n); it != integer_memo_.end())
    return it->second;
  GameId result = n > 0 ? construct({integer(n - 1)}, {})
                        : construct({}, {integer(n + 1)});
  integer_memo_.emplace(n, result);
  return result;
}

std::optional<int> Arena::as_integer(GameId g) const {
  if (g == zero()) return 0;
  const GameNode& node = node_at(g);
  if (node.right.empty() && node.left.size() == 1) {
    if (auto sub = as_integer(node.left[0]); sub && *sub >= 0) return *sub + 1;
  }
  if (node.left.empty() && node.right.size() == 1) {
    if (auto sub = as_integer(node.right[0]); sub && *sub <= 0) return *sub - 1;
  }
  return std::nullopt;
}

GameId Arena::up() {
  if (!up_) up_ = construct({zero()}, {star()});
  return *up_;
}

GameId Arena::kupstar(int k, bool plus_star) {
  if (k < 0) throw std::invalid_argument("kupstar count must be nonnegative");
  if (kup_plain_.empty()) {
    kup_plain_.push_back(zero());
    kup_star_.push_back(star());
  }
  while (static_cast<int>(kup_plain_.size()) <= k) {
    GameId next = add(kup_plain_.back(), up_star());
    kup_plain_.push_back(next);
    kup_star_.push_back(add(next, star()));
  }
  const auto index = static_cast<std::size_t>(k);
  return plus_star ? kup_star_[index] : kup_plain_[index];
}

bool Arena::is_all_small(GameId g) {
  if (auto it = all_small_memo_.find(g); it != all_small_memo_.end())
    return it->second;
  const GameNode& node = node_at(g);
  bool result = node.left.empty() == node.right.empty();
  if (result) {
    for (GameId gl : node.left) {
      if (!is_all_small(gl)) {
        result = false;
        break;
      }
    }
  }
  if (result) {
    for (GameId gr : node.right) {
      if (!is_all_small(gr)) {
        result = false;
        break;
      }
    }
  }
  all_small_memo_.emplace(g, result);
  return result;
}

int Arena::nim_value(GameId g) {
  if (g == zero()) return 0;
  if (auto it = nim_memo_.find(g); it != nim_memo_.end()) return it->second;
  const GameNode& node = node_at(g);
  int result = -1;
  if (node.left == node.right) {
    const int k = static_cast<int>(node.left.size());
    result = k;
    for (int i = 0; i < k; ++i) {
      // options sorted by birthday, so a nimber's options read *0, *1, ...
      if (nim_value(node.left[static_cast<std::size_t>(i)]) != i) {
        result = -1;
        break;
      }
    }
  }
  nim_memo_.emplace(g, result);
  return result;
}

const std::string& Arena::fmt(GameId g) {
  if (auto it = fmt_memo_.find(g); it != fmt_memo_.end()) return it->second;
  std::string text;
  const int nv = nim_value(g);
  if (nv == 0) {
    text = "0";
  } else if (nv == 1) {
    text = "*";
  } else if (nv > 1) {
    text = "*" + std::to_string(nv);
  } else {
    text.push_back('{');
    bool first = true;
    for (GameId gl : left_options(g)) {
      if (!first) text.push_back(',');
      text += fmt(gl);
      first = false;
    }
    text.push_back('|');
    first = true;
    for (GameId gr : right_options(g)) {
      if (!first) text.push_back(',');
      text += fmt(gr);
      first = false;
    }
    text.push_back('}');
  }
  return fmt_memo_.emplace(g, std::move(text)).first->second;
}

void Arena::ensure_aliases(int up_to_k) {
  for (int k = alias_built_ + 1; k <= up_to_k; ++k) {
    const GameId plain = kupstar(k, false);
    const GameId with_star = kupstar(k, true);
    const std::string prefix = std::to_string(k) + ".";
    alias_.emplace(plain, k == 1 ? "^*" : prefix + "^*");
    alias_.emplace(with_star, k == 1 ? "^" : prefix + "^*+*");
    alias_.emplace(negate(plain), k == 1 ? "v*" : prefix + "v*");
    alias_.emplace(negate(with_star), k == 1 ? "v" : prefix + "v*+*");
  }
  alias_built_ = std::max(alias_built_, up_to_k);
}

const std::string& Arena::pretty_fmt(GameId g) {
  if (auto it = pretty_memo_.find(g); it != pretty_memo_.end())
    return it->second;
  std::string text;
  if (auto it = alias_.find(g); it != alias_.end()) {
    text = it->second;
  } else if (nim_value(g) >= 0) {
    text = fmt(g);
  } else {
    text.push_back('{');
    bool first = true;
    for (GameId gl : left_options(g)) {
      if (!first) text.push_back(',');
      text += pretty_fmt(gl);
      first = false;
    }
    text.push_back('|');
    first = true;
    for (GameId gr : right_options(g)) {
      if (!first) text.push_back(',');
      text += pretty_fmt(gr);
      first = false;
    }
    text.push_back('}');
  }
  return pretty_memo_.emplace(g, std::move(text)).first->second;
}

std::string Arena::format_value(GameId g, bool pretty) {
  if (!pretty) return fmt(g);
  // Alias candidates for g or any of its subvalues are born no later than g,
  // so this coverage makes the cached pretty strings stable.
  ensure_aliases(birthday(g) + 2);
  return pretty_fmt(g);
}

namespace {

struct ValueParser {
  Arena& arena;
  std::string_view text;
  std::size_t pos = 0;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  int digits() {
    const std::size_t start = pos;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    int value = 0;
    const auto result =
        std::from_chars(text.data() + start, text.data() + pos, value);
    if (result.ec != std::errc{}) fail("nimber index out of range");
    return value;
  }

  GameId value() {
    const char c = peek();
    if (c == '0') {
      ++pos;
      return arena.zero();
    }
    if (c == '*') {
      ++pos;
      if (std::isdigit(static_cast<unsigned char>(peek())))
        return arena.nimber(digits());
      return arena.nimber(1);
    }
    if (c == '{') {
      ++pos;
      std::vector<GameId> left = list('|');
      expect('|');
      std::vector<GameId> right = list('}');
      expect('}');
      return arena.construct(std::move(left), std::move(right));
    }
    fail("expected a value");
  }

  std::vector<GameId> list(char terminator) {
    std::vector<GameId> items;
    if (peek() == terminator) return items;
    items.push_back(value());
    while (peek() == ',') {
      ++pos;
      items.push_back(value());
    }
    return items;
  }
};

}  // namespace

GameId Arena::parse_value(std::string_view text) {
  ValueParser parser{*this, text};
  GameId g = parser.value();
  if (parser.pos != text.size()) parser.fail("trailing characters");
  return g;
}

}  // namespace bipass
