// Command-line front end for the BIPASS engine: values, outcomes, atomic
// weights, the census, and the verification commands, with stable output.

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bipass/verify.hpp"

namespace {

using bipass::Arena;
using bipass::GameId;
using bipass::Position;
using bipass::Report;

int emit_report(const Report& report, const std::string& name, bool json) {
  if (json) {
    nlohmann::ordered_json out;
    out["command"] = name;
    out["checked"] = report.checked;
    out["failures"] = report.failures;
    out["elapsed_seconds"] = report.elapsed_seconds;
    out["ok"] = report.ok();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << name << ": checked " << report.checked << " case(s) in "
              << std::fixed << std::setprecision(2) << report.elapsed_seconds
              << " s\n";
    for (const std::string& failure : report.failures)
      std::cout << "  counterexample: " << failure << "\n";
    std::cout << (report.ok() ? "PASS" : "FAIL") << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BIPASS: values, outcomes and atomic weights for strip games"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json appear after the subcommand name

  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  std::function<int()> action;

  // value POS
  {
    auto* cmd = app.add_subcommand("value", "canonical value of a position");
    auto pos_text = std::make_shared<std::string>();
    auto pretty = std::make_shared<bool>(true);
    cmd->add_option("position", *pos_text, "strips joined by '+', or 0")
        ->required();
    cmd->add_flag("--pretty,!--no-pretty", *pretty, "use value aliases");
    cmd->callback([&, pos_text, pretty] {
      action = [&, pos_text, pretty] {
        Arena arena;
        const Position p = Position::parse(*pos_text);
        const GameId g = to_game(arena, p);
        if (json) {
          nlohmann::ordered_json out;
          out["value"] = arena.format_value(g, *pretty);
          out["delta"] = delta(p);
          out["aw"] =
              arena.as_integer(atomic_weight(arena, g)).value();
          out["outcome"] = to_string(arena.outcome(g));
          std::cout << out.dump() << "\n";
        } else {
          std::cout << arena.format_value(g, *pretty) << "\n";
        }
        return 0;
      };
    });
  }

  // aw POS
  {
    auto* cmd = app.add_subcommand("aw", "atomic weight of a position");
    auto pos_text = std::make_shared<std::string>();
    cmd->add_option("position", *pos_text, "strips joined by '+', or 0")
        ->required();
    cmd->callback([&, pos_text] {
      action = [&, pos_text] {
        Arena arena;
        const Position p = Position::parse(*pos_text);
        const GameId weight = atomic_weight(arena, to_game(arena, p));
        const auto n = arena.as_integer(weight);
        if (json) {
          nlohmann::ordered_json out;
          if (n)
            out["aw"] = *n;
          else
            out["aw"] = arena.format_value(weight, true);
          std::cout << out.dump() << "\n";
        } else if (n) {
          std::cout << *n << "\n";
        } else {
          std::cout << arena.format_value(weight, true) << "\n";
        }
        return 0;
      };
    });
  }

  // outcome POS
  {
    auto* cmd = app.add_subcommand("outcome", "who wins a position");
    auto pos_text = std::make_shared<std::string>();
    cmd->add_option("position", *pos_text, "strips joined by '+', or 0")
        ->required();
    cmd->callback([&, pos_text] {
      action = [&, pos_text] {
        Arena arena;
        const auto o = arena.outcome(to_game(arena, Position::parse(*pos_text)));
        if (json) {
          nlohmann::ordered_json out;
          out["outcome"] = to_string(o);
          std::cout << out.dump() << "\n";
        } else {
          std::cout << to_string(o) << "\n";
        }
        return 0;
      };
    });
  }

  // compare POS POS
  {
    auto* cmd = app.add_subcommand("compare", "order of two positions");
    auto first = std::make_shared<std::string>();
    auto second = std::make_shared<std::string>();
    cmd->add_option("first", *first)->required();
    cmd->add_option("second", *second)->required();
    cmd->callback([&, first, second] {
      action = [&, first, second] {
        Arena arena;
        const auto r = arena.compare(to_game(arena, Position::parse(*first)),
                                     to_game(arena, Position::parse(*second)));
        if (json) {
          nlohmann::ordered_json out;
          out["comparison"] = to_string(r);
          std::cout << out.dump() << "\n";
        } else {
          std::cout << to_string(r) << "\n";
        }
        return 0;
      };
    });
  }

  // census --max-len N --out FILE
  {
    auto* cmd = app.add_subcommand("census", "one JSONL record per strip");
    auto max_len = std::make_shared<int>(10);
    auto out_file = std::make_shared<std::string>();
    auto pretty = std::make_shared<bool>(true);
    cmd->add_option("--max-len", *max_len, "largest strip length")
        ->check(CLI::Range(2, 24));
    cmd->add_option("--out", *out_file, "output file (default: stdout)");
    cmd->add_flag("--pretty,!--no-pretty", *pretty, "use value aliases");
    cmd->callback([&, max_len, out_file, pretty] {
      action = [&, max_len, out_file, pretty] {
        Arena arena;
        if (out_file->empty()) {
          bipass::census(arena, *max_len, std::cout, *pretty);
        } else {
          std::ofstream out(*out_file);
          if (!out) throw std::runtime_error("cannot open " + *out_file);
          const std::size_t n = bipass::census(arena, *max_len, out, *pretty);
          std::cout << "wrote " << n << " records to " << *out_file << "\n";
        }
        return 0;
      };
    });
  }

  // search-star2 --max-stones N
  {
    auto* cmd =
        app.add_subcommand("search-star2", "scan for positions of value *2");
    auto max_stones = std::make_shared<int>(8);
    auto max_len = std::make_shared<int>(10);
    cmd->add_option("--max-stones", *max_stones, "position size bound")
        ->check(CLI::Range(2, 16));
    cmd->add_option("--max-len", *max_len, "single-strip scan bound")
        ->check(CLI::Range(2, 16));
    cmd->callback([&, max_stones, max_len] {
      action = [&, max_stones, max_len] {
        Arena arena;
        return emit_report(bipass::search_star2(arena, *max_stones, *max_len),
                           "search-star2", json);
      };
    });
  }

  // table1
  {
    auto* cmd =
        app.add_subcommand("table1", "check the built-in small-strip table");
    cmd->callback([&] {
      action = [&] {
        Arena arena;
        return emit_report(bipass::verify_table1(arena), "table1", json);
      };
    });
  }

  // family --max-len N
  {
    auto* cmd = app.add_subcommand(
        "family", "check the k.^*+* family characterization");
    auto max_len = std::make_shared<int>(12);
    auto converse_len = std::make_shared<int>(10);
    cmd->add_option("--max-len", *max_len, "family strip length bound")
        ->check(CLI::Range(2, 20));
    cmd->add_option("--converse-len", *converse_len,
                    "exhaustive converse scan bound")
        ->check(CLI::Range(2, 14));
    cmd->callback([&, max_len, converse_len] {
      action = [&, max_len, converse_len] {
        Arena arena;
        return emit_report(
            bipass::verify_family(arena, *max_len, *converse_len), "family",
            json);
      };
    });
  }

  // misere POS
  {
    auto* cmd = app.add_subcommand("misere", "misere-play outcome");
    auto pos_text = std::make_shared<std::string>();
    cmd->add_option("position", *pos_text, "strips joined by '+', or 0")
        ->required();
    cmd->callback([&, pos_text] {
      action = [&, pos_text] {
        const auto o = bipass::misere_outcome(Position::parse(*pos_text));
        if (json) {
          nlohmann::ordered_json out;
          out["misere_outcome"] = to_string(o);
          std::cout << out.dump() << "\n";
        } else {
          std::cout << to_string(o) << "\n";
        }
        return 0;
      };
    });
  }

  // misere-two-ahead --max-stones N
  {
    auto* cmd = app.add_subcommand("misere-two-ahead",
                                   "misere wins at excess two or more");
    auto max_stones = std::make_shared<int>(8);
    cmd->add_option("--max-stones", *max_stones, "position size bound")
        ->check(CLI::Range(2, 14));
    cmd->callback([&, max_stones] {
      action = [&, max_stones] {
        return emit_report(bipass::verify_misere_two_ahead(*max_stones),
                           "misere-two-ahead", json);
      };
    });
  }

  // ferrers STRIP | --from ROWS
  {
    auto* cmd = app.add_subcommand(
        "ferrers", "translate between strips and partition rows");
    auto strip_text = std::make_shared<std::string>();
    auto rows_text = std::make_shared<std::string>();
    auto* strip_opt = cmd->add_option("strip", *strip_text, "strip text");
    auto* from_opt =
        cmd->add_option("--from", *rows_text, "comma-separated row lengths");
    strip_opt->excludes(from_opt);
    cmd->callback([&, strip_text, rows_text, strip_opt, from_opt] {
      const bool have_strip = strip_opt->count() > 0;
      const bool have_rows = from_opt->count() > 0;
      action = [&, strip_text, rows_text, have_strip, have_rows] {
        if (have_strip == have_rows)
          throw CLI::ValidationError(
              "ferrers", "provide either a strip or --from rows");
        if (have_strip) {
          const auto rows = to_ferrers(bipass::parse_strip(*strip_text));
          if (json) {
            nlohmann::ordered_json out;
            out["rows"] = to_text(rows);
            std::cout << out.dump() << "\n";
          } else {
            std::cout << to_text(rows) << "\n";
          }
        } else {
          const auto strip =
              bipass::from_ferrers(bipass::parse_partition(*rows_text));
          if (json) {
            nlohmann::ordered_json out;
            out["strip"] = strip.text();
            std::cout << out.dump() << "\n";
          } else {
            std::cout << strip.text() << "\n";
          }
        }
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
    return action();
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const bipass::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
