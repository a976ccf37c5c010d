// Acceptance suite: runs every release criterion end to end and prints one
// PASS/FAIL line per criterion. Exit status 0 only when all of them hold.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "bipass/verify.hpp"

using namespace bipass;

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

bool g_all_ok = true;

void line(int index, bool ok, const std::string& name,
          const std::string& detail, double seconds) {
  g_all_ok = g_all_ok && ok;
  std::printf("[%2d] %s  %s (%s, %.2f s)\n", index, ok ? "PASS" : "FAIL",
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
}

void report_line(int index, const std::string& name, const Report& report,
                 double budget_seconds) {
  const bool in_budget = report.elapsed_seconds < budget_seconds;
  std::string detail = std::to_string(report.checked) + " checks, " +
                       std::to_string(report.failures.size()) + " failures";
  if (!in_budget) detail += ", over time budget";
  line(index, report.ok() && in_budget, name, detail, report.elapsed_seconds);
  for (const std::string& failure : report.failures)
    std::printf("      counterexample: %s\n", failure.c_str());
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

Report property_suites(Arena& a) {
  Timer timer;
  Report report;
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };

  // Conjugation / negation duality.
  for (const Strip& s : enumerate_strips(8)) {
    ++report.checked;
    if (to_game(a, conjugate(s)) != a.negate(to_game(a, s)))
      fail(s.text() + ": conjugate game is not the negation");
  }

  // Liveness filtering reaches its fixpoint in one pass.
  for (int len = 0; len <= 10; ++len) {
    for (const std::string& raw : all_raw_sequences(len)) {
      ++report.checked;
      const Strip once(raw);
      if (Strip(once.text()) != once)
        fail(raw + ": normalization is not idempotent");
      if (!once.empty() &&
          (once.text().front() != 'b' || once.text().back() != 'w'))
        fail(raw + ": normalized strip is not alive-shaped");
    }
  }

  // Excess step bound: one raising Left option exactly when two blacks exist.
  for (const Strip& s : enumerate_strips(10)) {
    ++report.checked;
    const int d = delta(s);
    const auto blacks =
        std::count(s.text().begin(), s.text().end(), 'b');
    int raising = 0;
    for (const Strip& t : options(s, Player::Left)) {
      if (delta(t) > d + 1) fail(s.text() + ": Left move raised excess by 2+");
      if (delta(t) == d + 1) ++raising;
    }
    if (raising != (blacks >= 2 ? 1 : 0))
      fail(s.text() + ": wrong number of excess-raising Left moves");
    if (blacks == 1 && s.size() > 2) {
      for (Player p : {Player::Left, Player::Right})
        for (const Strip& t : options(s, p))
          if (delta(t) >= d)
            fail(s.text() + ": larvae move failed to lower the excess");
    }
  }

  // Ferrers round trip, both directions.
  for (const Strip& s : enumerate_strips(10)) {
    ++report.checked;
    if (from_ferrers(to_ferrers(s)) != s)
      fail(s.text() + ": ferrers round trip failed");
  }
  {
    auto emit = [&](auto&& self, Partition p) -> void {
      const int steps =
          static_cast<int>(p.rows.size()) + (p.rows.empty() ? 0 : p.rows[0]);
      if (steps > 10) return;
      if (!p.rows.empty()) {
        ++report.checked;
        if (to_ferrers(from_ferrers(p)) != p)
          fail("partition " + to_text(p) + ": round trip failed");
      }
      const int cap = p.rows.empty() ? 9 : p.rows.back();
      for (int next = 1; next <= cap; ++next) {
        Partition q = p;
        q.rows.push_back(next);
        self(self, std::move(q));
      }
    };
    emit(emit, Partition{});
  }

  // Comparison against zero coheres with the outcome, and the arithmetic
  // single-strip rule agrees with the game-tree outcome.
  for (const Strip& s : enumerate_strips(8)) {
    ++report.checked;
    const GameId g = to_game(a, s);
    const Outcome o = a.outcome(g);
    const ComparisonResult r = a.compare(g, a.zero());
    const bool coherent = (r == ComparisonResult::Greater && o == Outcome::L) ||
                          (r == ComparisonResult::Less && o == Outcome::R) ||
                          (r == ComparisonResult::Equivalent && o == Outcome::P) ||
                          (r == ComparisonResult::Fuzzy && o == Outcome::N);
    if (!coherent) fail(s.text() + ": comparison and outcome disagree");
  }
  for (const Strip& s : enumerate_strips(10)) {
    ++report.checked;
    if (single_strip_outcome(s) != a.outcome(to_game(a, s)))
      fail(s.text() + ": arithmetic outcome rule disagrees with the engine");
  }

  // Far-star probes stay stable across both heap sizes.
  for (const Strip& s : enumerate_strips(10)) {
    ++report.checked;
    try {
      far_star_compare(a, to_game(a, s));
    } catch (const std::exception& e) {
      fail(s.text() + ": " + e.what());
    }
  }

  // Enumeration self-check: 2^(n-2) strips of each length.
  for (int len = 2; len <= 10; ++len) {
    ++report.checked;
    std::size_t expected = 0;
    for (int n = 2; n <= len; ++n) expected += std::size_t{1} << (n - 2);
    if (enumerate_strips(len).size() != expected)
      fail("length " + std::to_string(len) + ": strip count is off");
  }

  // Value texts round-trip for every census game.
  for (const Strip& s : enumerate_strips(10)) {
    ++report.checked;
    const GameId g = to_game(a, s);
    if (a.parse_value(a.format_value(g, false)) != g)
      fail(s.text() + ": value text does not parse back");
  }

  // Rebuilding a canonical node from its own options changes nothing.
  for (const Strip& s : enumerate_strips(8)) {
    ++report.checked;
    const GameId g = to_game(a, s);
    if (a.construct(a.left_options(g), a.right_options(g)) != g)
      fail(s.text() + ": canonical construction is not idempotent");
  }

  // k units plus star match the one-sided recurrence.
  for (int k = 1; k <= 8; ++k) {
    ++report.checked;
    if (a.kupstar(k, true) != a.construct({a.zero()}, {a.kupstar(k - 1, true)}))
      fail("k=" + std::to_string(k) + ": unit recurrence failed");
  }

  report.elapsed_seconds = timer.seconds();
  return report;
}

}  // namespace

int main() {
  Timer total;
  Arena arena;  // shared deliberately: criteria build on the same caches

  report_line(1, "small-strip table reproduction", verify_table1(arena), 1.0);
  report_line(2, "k.^*+* family, forward to 12 and converse to 10",
              verify_family(arena, 12, 10), 120.0);
  report_line(3, "atomic weight equals excess (strips 10, positions 8)",
              verify_aw_delta(arena, 10, 8), 120.0);

  {
    Timer timer;
    Report report;
    for (const Strip& s : enumerate_strips(6)) {
      ++report.checked;
      const GameId g = to_game(arena, s);
      if (!far_star_equiv(arena, product_up(arena, atomic_weight(arena, g)), g))
        report.failures.push_back(s.text() +
                                  ": weight times up is not far-star "
                                  "equivalent to the game");
    }
    report.elapsed_seconds = timer.seconds();
    report_line(4, "defining property of the atomic weight", report, 300.0);
  }

  report_line(5, "no value *2 (positions 8, single strips 10)",
              search_star2(arena, 8, 10), 300.0);
  report_line(6, "outcome laws and the bbww+bw fixture",
              verify_outcome_rules(arena, 8), 300.0);
  report_line(7, "zero-excess bounds, all six items",
              verify_aw0_bounds(arena, 8), 300.0);
  report_line(8, "misere two-ahead rule", verify_misere_two_ahead(8), 300.0);
  report_line(9, "canonical option survival", verify_canonical_survival(arena),
              300.0);
  report_line(10, "property suites", property_suites(arena), 300.0);

  {
    Timer timer;
    std::ostringstream sink;
    std::string detail;
    bool ok = true;
    std::size_t rows = 0;
    try {
      rows = census(arena, 10, sink);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    if (ok && rows != 511) {
      ok = false;
      detail = "expected 511 rows, got " + std::to_string(rows);
    }
    const double elapsed = total.seconds();
    if (ok) {
      detail = "511 census rows, total " + std::to_string(elapsed) + " s";
    }
    ok = ok && elapsed < 300.0;
    line(11, ok, "census to length 10 and total runtime under 5 minutes",
         detail, timer.seconds());
  }

  return g_all_ok ? 0 : 1;
}
