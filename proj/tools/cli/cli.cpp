#include "cli/cli.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/cache.hpp"
#include "cli/verify.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/formulas.hpp"
#include "coxlen/reflength.hpp"
#include "coxlen/rewrite.hpp"
#include "coxlen/word.hpp"

namespace coxlen::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string group;
  std::string word;
  std::string format = "plain";
  std::string cache_path;
  SearchLimits limits;
  // reflen
  bool all = false;
  bool witness = false;
  std::string oracle = "matrix";
  // powers-table
  long long max_lambda = 8;
  // bounds
  long long lambda = 1;
  int remainder = 0;
  // verify
  std::string suite;
};

// What one command hands back to the renderer.
struct Emission {
  json input = json::object();
  json result = json::object();
  std::vector<std::string> plain;
  std::string csv;  // preformatted; empty means derive key,value rows
  int exit = kExitOk;
};

json positions_json(const DeletionSet& d) {
  json a = json::array();
  for (std::size_t p : d) a.push_back(p + 1);  // 1-based in all output
  return a;
}

std::string positions_text(const DeletionSet& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(d[i] + 1);
  }
  return s + "}";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// Fallback CSV shape for scalar-result commands: one key,value row per
// result field.
std::string keyvalue_csv(const json& result) {
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [key, value] : result.items()) {
    std::string text = value.is_string() ? value.get<std::string>()
                                         : value.dump();
    out << csv_field(key) << ',' << csv_field(text) << '\n';
  }
  return out.str();
}

std::string quoted_word(const Word& w) {
  return w.empty() ? "(empty)" : w.render();
}

// Canonical form used as the persistent cache key; nullopt when the orbit
// walk exceeds its budget (caching is then skipped, never the result).
std::optional<std::string> cache_key(const Word& reduced,
                                     const CoxeterSystem& sys,
                                     const Options& o, SearchStats* stats) {
  try {
    return canonical_form(reduced, sys, o.limits, stats).render();
  } catch (const OrbitLimitExceeded&) {
    return std::nullopt;
  }
}

Word reduced_form(const Word& w, const CoxeterSystem& sys, const Options& o,
                  SearchStats* stats) {
  if (sys.is_universal()) return Word(nil_reduce(w.raw()));
  return reduce(w, sys, o.limits, stats).word;
}

Emission cmd_reduce(const Options& o, const CoxeterSystem& sys,
                    ResultCache& cache, SearchStats* stats) {
  Word w = parse_word_powers(o.word, sys);
  ReduceResult r = reduce(w, sys, o.limits, stats);
  std::size_t nil_moves = r.trace.moves.size() - r.trace.braid_count;

  Emission e;
  e.input = {{"word", o.word}};
  e.result = {{"input_length", w.size()},
              {"reduced", r.word.render()},
              {"length", r.word.size()},
              {"braid_moves", r.trace.braid_count},
              {"nil_moves", nil_moves},
              {"is_identity", r.word.empty()}};
  e.plain = {"input:       " + quoted_word(w),
             "reduced:     " + quoted_word(r.word),
             "length:      " + std::to_string(r.word.size()),
             "braid moves: " + std::to_string(r.trace.braid_count),
             "nil moves:   " + std::to_string(nil_moves),
             "identity:    " + std::string(r.word.empty() ? "yes" : "no")};

  if (cache.enabled()) {
    if (auto key = cache_key(r.word, sys, o, stats)) {
      CacheVerdicts v;
      v.is_identity = r.word.empty();
      cache.record(sys.digest(), *key, v);
    }
  }
  return e;
}

Emission cmd_reflen(const Options& o, const CoxeterSystem& sys,
                    ResultCache& cache, SearchStats* stats) {
  Word w = parse_word_powers(o.word, sys);
  Emission e;
  e.input = {{"word", o.word},
             {"all", o.all},
             {"witness", o.witness},
             {"oracle", o.oracle}};

  Word red = reduced_form(w, sys, o, stats);
  bool want_sets = o.all || o.witness;

  std::optional<std::string> key;
  if (cache.enabled() && o.oracle == "matrix")
    key = cache_key(red, sys, o, stats);

  long long q = 0;
  DeletionSet wit;
  bool computed = false;

  if (o.oracle == "tits") {
    auto [qq, dd] = reflection_length_rewriting(red, sys, o.limits, stats);
    q = qq;
    wit = std::move(dd);
    computed = true;
  } else if (o.oracle == "both") {
    auto m = reflection_length(red, sys, o.limits, stats);
    auto t = reflection_length_rewriting(red, sys, o.limits, stats);
    bool agree = m.first == t.first && m.second == t.second;
    q = m.first;
    wit = std::move(m.second);
    computed = true;
    e.result["oracle_check"] = {{"matrix", m.first},
                                {"rewriting", t.first},
                                {"agree", agree}};
    if (!agree) e.exit = kExitVerifyFail;
  } else {
    if (!want_sets && key) {
      if (auto v = cache.lookup(sys.digest(), *key);
          v && v->reflection_length) {
        q = *v->reflection_length;
        cache.count_hit();
      } else {
        computed = true;
      }
    } else {
      computed = true;
    }
    if (computed) {
      auto [qq, dd] = reflection_length(red, sys, o.limits, stats);
      q = qq;
      wit = std::move(dd);
    }
  }

  e.result["reflection_length"] = q;
  e.result["coxeter_length"] = red.size();
  e.plain.push_back("reflection length: " + std::to_string(q));
  e.plain.push_back("coxeter length:    " + std::to_string(red.size()));

  if (want_sets) {
    e.result["witness"] = positions_json(wit);
    e.plain.push_back("witness:           " + positions_text(wit) +
                      "  (1-based positions in " + quoted_word(red) + ")");
  }
  if (o.all) {
    auto sets = all_deletion_sets(red, sys, int(q), o.limits, stats);
    json arr = json::array();
    for (const auto& d : sets) arr.push_back(positions_json(d));
    e.result["deletion_sets"] = arr;
    e.result["deletion_set_count"] = sets.size();
    e.plain.push_back("deletion sets:     " + std::to_string(sets.size()));
    for (const auto& d : sets) e.plain.push_back("  " + positions_text(d));
  }
  if (o.oracle == "both") {
    bool agree = e.result["oracle_check"]["agree"].get<bool>();
    e.plain.push_back(std::string("oracles agree:     ") +
                      (agree ? "yes" : "NO"));
  }

  if (computed && key && (o.oracle == "matrix" || o.oracle == "both")) {
    CacheVerdicts v;
    v.reflection_length = q;
    v.is_identity = red.empty();
    cache.record(sys.digest(), *key, v);
  }
  return e;
}

Emission cmd_powers_table(const Options& o, const CoxeterSystem& sys,
                          ResultCache& cache, SearchStats* stats) {
  if (o.max_lambda < 1) throw ParseError("--max must be >= 1");
  Emission e;
  e.input = {{"max", o.max_lambda}};
  json rows = json::array();
  std::ostringstream csv, plain;
  csv << "lambda,reflection_length\n";

  for (long long lambda = 1; lambda <= o.max_lambda; ++lambda) {
    Word w = coxeter_power_word(sys, int(lambda), 0);
    std::optional<std::string> key;
    std::optional<long long> q;
    Word red = reduced_form(w, sys, o, stats);
    if (cache.enabled()) {
      key = cache_key(red, sys, o, stats);
      if (key) {
        if (auto v = cache.lookup(sys.digest(), *key);
            v && v->reflection_length) {
          q = *v->reflection_length;
          cache.count_hit();
        }
      }
    }
    if (!q) {
      q = reflection_length(red, sys, o.limits, stats).first;
      if (key) {
        CacheVerdicts v;
        v.reflection_length = *q;
        cache.record(sys.digest(), *key, v);
      }
    }
    rows.push_back({{"lambda", lambda}, {"reflection_length", *q}});
    csv << lambda << ',' << *q << '\n';
  }

  e.result = {{"rows", rows}};
  e.csv = csv.str();
  e.plain.push_back("lambda  reflection_length");
  for (const auto& row : rows) {
    std::ostringstream line;
    line << std::setw(6) << row["lambda"].get<long long>() << "  "
         << row["reflection_length"].get<long long>();
    e.plain.push_back(line.str());
  }
  return e;
}

Emission cmd_bounds(const Options& o, const CoxeterSystem& sys,
                    ResultCache&, SearchStats* stats) {
  int k = sys.uniform_label();
  int n = sys.rank();
  if (k <= 0 || n < 3)
    throw ParseError(
        "bounds needs a single-braided group of rank >= 3 with a finite "
        "label (e.g. -g single:3:5)");
  if (o.lambda < 0) throw ParseError("--power must be >= 0");
  if (o.remainder < 0 || o.remainder > n)
    throw ParseError("--remainder must lie in 0.." + std::to_string(n));

  BoundReport rep = make_bound_report({n, k, o.lambda, o.remainder});

  Emission e;
  e.input = {{"lambda", o.lambda}, {"r", o.remainder}};
  e.result = {{"n", n},
              {"k", k},
              {"lambda", o.lambda},
              {"r", o.remainder},
              {"chi", rep.chi_value},
              {"upper", rep.upper},
              {"unbounded_family", rep.unbounded}};
  e.result["closed_form_lower"] =
      rep.closed_form_lower ? json(*rep.closed_form_lower) : json(nullptr);

  std::optional<long long> realized;
  std::string realized_note;
  try {
    Word w = coxeter_power_word(sys, int(o.lambda), o.remainder);
    realized = reflection_length(w, sys, o.limits, stats).first;
  } catch (const SubsetBudgetExceeded& ex) {
    realized_note = ex.what();
  } catch (const OrbitLimitExceeded& ex) {
    realized_note = ex.what();
  }
  e.result["realized"] = realized ? json(*realized) : json(nullptr);

  bool violated = false;
  if (realized) {
    if (*realized > rep.upper) violated = true;
    if (rep.closed_form_lower && *rep.closed_form_lower > *realized) violated = true;
  }
  e.result["bounds_hold"] = realized ? json(!violated) : json(nullptr);
  if (violated) e.exit = kExitVerifyFail;

  e.plain = {"group:            single-braided, n=" + std::to_string(n) +
                 ", k=" + std::to_string(k),
             "word:             (s_1...s_" + std::to_string(n) + ")^" +
                 std::to_string(o.lambda) + " s_1...s_" +
                 std::to_string(o.remainder),
             "chi:              " + std::to_string(rep.chi_value),
             "upper bound:      " + std::to_string(rep.upper),
             "lower bound:      " +
                 (rep.closed_form_lower ? std::to_string(*rep.closed_form_lower)
                                     : std::string("n/a")),
             "unbounded family: " + std::string(rep.unbounded ? "yes" : "no")};
  if (realized) {
    e.plain.push_back("realized length:  " + std::to_string(*realized));
    e.plain.push_back("bounds hold:      " +
                      std::string(violated ? "NO" : "yes"));
  } else {
    e.plain.push_back("realized length:  skipped (" + realized_note + ")");
  }
  return e;
}

Emission cmd_conjecture_scan(const Options& o, const CoxeterSystem& sys,
                             ResultCache&, SearchStats* stats) {
  Word w = parse_word_powers(o.word, sys);
  Word red = reduced_form(w, sys, o, stats);
  ConjectureScan scan = conjecture_scan(red, sys, o.limits, stats);

  Emission e;
  e.input = {{"word", o.word}};
  json wits = json::array();
  for (std::size_t pos : scan.witnesses) wits.push_back(pos + 1);
  e.result = {{"word", red.render()},
              {"reflection_length", scan.reflection_len},
              {"universal_length", scan.universal_len},
              {"witnesses", wits},
              {"verdict", scan.verdict}};

  DeletionSet as_set(scan.witnesses.begin(), scan.witnesses.end());
  e.plain = {"scanned word:       " + quoted_word(red),
             "reflection length:  " + std::to_string(scan.reflection_len),
             "universal length:   " + std::to_string(scan.universal_len),
             "descent positions:  " + positions_text(as_set) +
                 "  (drop both lengths by 1)",
             "verdict:            " +
                 std::string(scan.verdict ? "witness found" : "no witness")};
  return e;
}

Emission cmd_verify(const Options& o, const CoxeterSystem& sys, ResultCache&,
                    SearchStats* stats) {
  VerifyReport rep = run_verify(o.suite, sys, o.limits, stats);

  Emission e;
  e.input = {{"suite", o.suite}};
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  e.result = {{"suite", rep.suite},
              {"checks", checks},
              {"passed", rep.passed()},
              {"total", rep.total()},
              {"ok", rep.ok()}};
  for (const auto& c : rep.checks)
    e.plain.push_back(std::string(c.pass ? "PASS " : "FAIL ") + c.name +
                      " (" + c.detail + ")");
  e.plain.push_back("suite " + rep.suite + ": " +
                    std::to_string(rep.passed()) + "/" +
                    std::to_string(rep.total()) + " checks passed");
  if (!rep.ok()) e.exit = kExitVerifyFail;
  return e;
}

void render(const std::string& command, const CoxeterSystem& sys,
            const Options& o, const Emission& e, const SearchStats& stats,
            long long elapsed_ms, std::uint64_t file_hits, std::ostream& out) {
  if (o.format == "json") {
    json doc{{"command", command},
             {"group",
              {{"spec", sys.describe()},
               {"rank", sys.rank()},
               {"digest", sys.digest()}}},
             {"input", e.input},
             {"result", e.result},
             {"stats",
              {{"elapsed_ms", elapsed_ms},
               {"subsets_tested", stats.subsets_tested},
               {"orbit_states", stats.orbit_states},
               {"cache_hits", stats.cache_hits + file_hits}}}};
    out << doc.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << (e.csv.empty() ? keyvalue_csv(e.result) : e.csv);
  } else {
    for (const auto& line : e.plain) out << line << '\n';
  }
}

int execute(const std::string& command, Options& o, std::ostream& out,
            std::ostream& err) {
  try {
    CoxeterSystem sys = parse_group(o.group);
    ResultCache cache(o.cache_path, err);
    SearchStats stats;
    auto t0 = std::chrono::steady_clock::now();

    Emission e;
    if (command == "reduce")
      e = cmd_reduce(o, sys, cache, &stats);
    else if (command == "reflen")
      e = cmd_reflen(o, sys, cache, &stats);
    else if (command == "powers-table")
      e = cmd_powers_table(o, sys, cache, &stats);
    else if (command == "bounds")
      e = cmd_bounds(o, sys, cache, &stats);
    else if (command == "conjecture-scan")
      e = cmd_conjecture_scan(o, sys, cache, &stats);
    else if (command == "verify")
      e = cmd_verify(o, sys, cache, &stats);
    else
      throw ParseError("unknown command " + command);

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    render(command, sys, o, e, stats, elapsed, cache.hits(), out);
    return e.exit;
  } catch (const OrbitLimitExceeded& ex) {
    err << "budget exhausted: " << ex.what() << '\n';
    return kExitBudget;
  } catch (const SubsetBudgetExceeded& ex) {
    err << "budget exhausted: " << ex.what() << '\n';
    return kExitBudget;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitInput;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "coxlen: word problem, reflection length, and closed-form bounds for "
      "finitely presented Coxeter groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "coxlen 0.1.0");

  Options o;

  auto add_common = [&o](CLI::App* sub, bool with_word) {
    sub->add_option("-g,--group", o.group,
                    "Group: universal:<n> | single:<n>:<k> | "
                    "triangle:<p>:<q>:<r> | JSON {\"rank\",\"matrix\"} "
                    "(0 or \"inf\" = infinite label)")
        ->required();
    if (with_word)
      sub->add_option("-w,--word", o.word,
                      "Word: 1-based generator tokens, powers allowed, e.g. "
                      "\"(123)^4 1 2\" (default: the identity)");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--max-orbit", o.limits.max_orbit,
                    "Braid-orbit state budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-subsets", o.limits.max_subsets,
                    "Deletion-subset candidate budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-cache", o.limits.max_cache,
                    "In-process identity-verdict memo capacity")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--after-dyer-max", o.limits.after_dyer_max,
                    "Largest deletion set whose subsets are checked "
                    "exhaustively")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--threads", o.limits.threads,
                    "Worker threads for the deletion-subset scan")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--cache", o.cache_path,
                    "Persistent result cache (JSON lines file)")
        ->envname("COXLEN_CACHE");
  };

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Rewrite a word to an S-reduced form with a move trace");
  add_common(reduce, true);

  CLI::App* reflen = app.add_subcommand(
      "reflen", "Reflection length via minimal deletion sets");
  add_common(reflen, true);
  reflen->add_flag("--all", o.all,
                   "Enumerate every minimal deletion set (colex order)");
  reflen->add_flag("--witness", o.witness,
                   "Report the colex-least minimal deletion set");
  reflen
      ->add_option("--oracle", o.oracle,
                   "Identity engine for the subset search: matrix "
                   "(geometric representation), tits (pure rewriting), or "
                   "both (cross-check; mismatch exits 1)")
      ->check(CLI::IsMember({"matrix", "tits", "both"}))
      ->capture_default_str();

  CLI::App* powers = app.add_subcommand(
      "powers-table",
      "Reflection lengths of Coxeter-element powers (CSV-friendly)");
  add_common(powers, false);
  powers->add_option("--max", o.max_lambda, "Largest exponent in the table")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* bounds = app.add_subcommand(
      "bounds",
      "Closed-form bounds for (s_1...s_n)^lambda s_1...s_r in single-braided "
      "groups, compared with the realized length");
  add_common(bounds, false);
  bounds->add_option("-l,--power", o.lambda, "Exponent lambda")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bounds
      ->add_option("-r,--remainder", o.remainder,
                   "Trailing partial Coxeter element s_1...s_r (0..n)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  CLI::App* scan = app.add_subcommand(
      "conjecture-scan",
      "Scan an S-reduced word for single-letter deletions lowering both the "
      "group's and the universal reflection length by one");
  add_common(scan, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite and report PASS/FAIL per check");
  add_common(verify, false);
  verify
      ->add_option("suite", o.suite,
                   "invariants | table1 | bounds | twisted")
      ->required()
      ->check(CLI::IsMember({"invariants", "table1", "bounds", "twisted"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("coxlen");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto& parsed = app.get_subcommands();
  if (parsed.empty()) {
    err << app.help();
    return kExitInput;
  }
  return execute(parsed.front()->get_name(), o, out, err);
}

}  // namespace coxlen::cli
