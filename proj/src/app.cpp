#include "knotproj/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "knotproj/corpus.hpp"
#include "knotproj/decompose.hpp"
#include "knotproj/embedding.hpp"
#include "knotproj/explore.hpp"
#include "knotproj/invariants.hpp"
#include "knotproj/knots.hpp"
#include "knotproj/moves.hpp"
#include "knotproj/serialize.hpp"
#include "knotproj/verify.hpp"

namespace knotproj {

namespace {

// Thrown from command bodies; carries the exit code.
struct CommandFailure {
  int code;
  std::string message;
};

Word read_word(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    throw CommandFailure{kExitUsage, "malformed word: " + std::string(e.what())};
  }
}

Word read_realizable(const std::string& text) {
  Word word = read_word(text);
  if (!is_realizable(word)) {
    throw CommandFailure{kExitNotRealizable,
                         "'" + text + "' is not realizable on S²"};
  }
  return word;
}

MoveSet read_moves(const std::string& text) {
  const auto moves = move_family_from_string(text);
  if (!moves) throw CommandFailure{kExitUsage, "unknown move family " + text};
  return *moves;
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  try {
    return load_corpus(path);
  } catch (const CorpusError& e) {
    throw CommandFailure{kExitUsage, e.what()};
  }
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string show(const Word& word) {
  return word.empty() ? std::string("(empty)") : word.to_string();
}

std::string report_line(const InvariantReport& r) {
  std::ostringstream line;
  line << "n=" << r.n << " X=" << r.x << " X_mod3=" << r.x_mod3
       << " tr=" << r.tr << " H=" << r.h
       << " trefoil_summands=" << r.trefoil_summands
       << " reduced=" << show(r.reduced_word);
  return line.str();
}

std::string join_factors(const std::vector<Word>& factors) {
  if (factors.empty()) return "-";
  std::string text;
  for (const auto& f : factors) {
    if (!text.empty()) text += " + ";
    text += "[" + f.to_string() + "]";
  }
  return text;
}

// --- invariants -----------------------------------------------------------

struct InvariantsArgs {
  std::string word;
  std::string corpus;
  bool json = false;
};

int cmd_invariants(const InvariantsArgs& a, bool have_word, std::ostream& out) {
  if (have_word == !a.corpus.empty()) {
    throw CommandFailure{kExitUsage, "give either a word or --corpus"};
  }
  if (have_word) {
    const InvariantReport report = compute_invariants(read_realizable(a.word));
    if (a.json) {
      print_json(out, report);
    } else {
      out << report_line(report) << '\n';
    }
    return kExitOk;
  }
  Json rows = Json::array();
  for (const auto& entry : read_corpus(a.corpus)) {
    const InvariantReport report = compute_invariants(entry.word);
    if (a.json) {
      rows.push_back({{"name", entry.name}, {"report", report}});
    } else {
      out << entry.name << ": " << report_line(report) << '\n';
    }
  }
  if (a.json) print_json(out, rows);
  return kExitOk;
}

// --- table ----------------------------------------------------------------

int cmd_table(const std::string& path, bool json, std::ostream& out) {
  struct Row {
    CorpusEntry entry;
    Word canonical;
    InvariantReport report;
    std::vector<Word> factors;
  };
  std::vector<Row> rows;
  for (auto& entry : read_corpus(path)) {
    Word canonical = canonicalize(entry.word);
    InvariantReport report = compute_invariants(entry.word);
    std::vector<Word> factors = prime_decompose(entry.word);
    rows.push_back({std::move(entry), std::move(canonical), std::move(report),
                    std::move(factors)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.canonical < b.canonical;
  });

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<Word>> targets;
  for (const auto& row : rows) targets.push_back(one_third_move_targets(row.canonical));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const Word ri = reduce_r1(rows[i].canonical);
      const Word rj = reduce_r1(rows[j].canonical);
      if (std::binary_search(targets[i].begin(), targets[i].end(), rj) ||
          std::binary_search(targets[j].begin(), targets[j].end(), ri)) {
        edges.emplace_back(rows[i].entry.name, rows[j].entry.name);
      }
    }
  }

  if (json) {
    Json j;
    j["rows"] = Json::array();
    for (const auto& row : rows) {
      j["rows"].push_back({{"name", row.entry.name},
                           {"word", row.canonical},
                           {"n", row.report.n},
                           {"tr", row.report.tr},
                           {"X", row.report.x},
                           {"X_mod3", row.report.x_mod3},
                           {"H", row.report.h},
                           {"prime_factors", row.factors}});
    }
    j["adjacent"] = Json::array();
    for (const auto& [a, b] : edges) j["adjacent"].push_back({a, b});
    print_json(out, j);
    return kExitOk;
  }
  out << "name\tn\ttr\tX\tX_mod3\tH\tprime factors\n";
  for (const auto& row : rows) {
    out << row.entry.name << '\t' << row.report.n << '\t' << row.report.tr
        << '\t' << row.report.x << '\t' << row.report.x_mod3 << '\t'
        << row.report.h << '\t' << join_factors(row.factors) << '\n';
  }
  if (!edges.empty()) {
    out << "\nrelated by first moves and one third move:\n";
    for (const auto& [a, b] : edges) out << a << " -- " << b << '\n';
  }
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const std::string& suite, std::optional<std::size_t> max_n,
               bool json, std::ostream& out) {
  VerifyOptions options;
  options.max_n = max_n;
  const SuiteReport report = run_suite(suite, options);
  if (json) {
    Json j{{"suite", report.suite},
           {"passed", report.passed},
           {"checked", report.checked},
           {"max_n", report.max_n},
           {"counterexample", nullptr},
           {"detail", report.detail},
           {"rows", report.rows}};
    if (report.counterexample) j["counterexample"] = *report.counterexample;
    print_json(out, j);
  } else {
    out << report.suite << ": " << (report.passed ? "PASS" : "FAIL")
        << " (checked " << report.checked << ", max_n " << report.max_n
        << ")\n";
    for (const auto& row : report.rows) out << "  " << row << '\n';
    if (report.counterexample) {
      out << "counterexample: " << show(parse_word(*report.counterexample))
          << "\n  " << report.detail << '\n';
    }
  }
  return report.passed ? kExitOk : kExitCheckFailed;
}

// --- moves ----------------------------------------------------------------

std::vector<MoveSite> filtered_sites(const Word& word, MoveSet moves) {
  std::vector<MoveSite> sites = find_sites(word);
  std::erase_if(sites, [&](const MoveSite& s) { return !moves.contains(s.kind); });
  return sites;
}

int cmd_moves_list(const Word& word, MoveSet moves, bool json,
                   std::ostream& out) {
  const auto sites = filtered_sites(word, moves);
  const long x = static_cast<long>(cross_chord_number(word));
  Json rows = Json::array();
  for (std::size_t k = 0; k < sites.size(); ++k) {
    const Word result = apply(word, sites[k]);
    const long dx = static_cast<long>(cross_chord_number(result)) - x;
    if (json) {
      rows.push_back({{"index", k},
                      {"site", sites[k]},
                      {"result", result},
                      {"delta_X", dx}});
    } else {
      out << k << '\t' << describe(sites[k]) << "\t-> " << show(result)
          << "\tdX=" << dx << '\n';
    }
  }
  if (json) print_json(out, rows);
  return kExitOk;
}

int cmd_moves_apply(const Word& word, MoveSet moves, std::size_t index,
                    bool json, std::ostream& out) {
  const auto sites = filtered_sites(word, moves);
  if (index >= sites.size()) {
    throw CommandFailure{kExitUsage, "site " + std::to_string(index) +
                                         " out of range (" +
                                         std::to_string(sites.size()) +
                                         " sites)"};
  }
  const Word result = apply(word, sites[index]);
  if (json) {
    print_json(out, {{"site", sites[index]},
                     {"result", result},
                     {"canonical", canonicalize(result)}});
  } else {
    out << show(result) << '\n';
  }
  return kExitOk;
}

// --- explore --------------------------------------------------------------

struct ExploreArgs {
  std::string word;
  std::string other;
  std::string moves;
  std::size_t max_n = 7;
  std::size_t max_states = 1'000'000;
  std::optional<std::uint64_t> seed;
  bool json = false;
};

int cmd_explore_class(const ExploreArgs& a, std::ostream& out) {
  const Word start = read_realizable(a.word);
  SearchConfig config;
  config.allowed = read_moves(a.moves);
  config.max_crossings = a.max_n;
  config.max_states = a.max_states;
  config.shuffle_seed = a.seed;
  if (start.crossings() > a.max_n) {
    throw CommandFailure{kExitUsage, "start word exceeds --max-n"};
  }
  const ClassResult result = bfs_class(start, config);
  const char* status = result.complete ? "complete" : "unknown-complete";
  if (a.json) {
    Json j = result;
    j["status"] = status;
    print_json(out, j);
  } else {
    out << "# " << result.words.size() << " words, " << status << '\n';
    for (const auto& w : result.words) out << show(w) << '\n';
  }
  return kExitOk;
}

int cmd_explore_equiv(const ExploreArgs& a, std::ostream& out) {
  const Word p = read_realizable(a.word);
  const Word q = read_realizable(a.other);
  SearchConfig config;
  config.max_crossings = a.max_n;
  config.max_states = a.max_states;
  config.shuffle_seed = a.seed;
  const ClassCertificate cert =
      equivalence_query(p, q, read_moves(a.moves), config);
  if (a.json) {
    print_json(out, cert);
    return kExitOk;
  }
  out << to_string(cert.verdict) << '\n';
  if (cert.separation) {
    out << "separated by " << cert.separation->invariant << ": "
        << cert.separation->source_value << " vs "
        << cert.separation->target_value << '\n';
  }
  if (cert.verdict == Verdict::Equivalent) {
    out << "path (" << cert.path.size() << " moves):\n";
    out << "  " << show(cert.source) << '\n';
    for (const auto& step : cert.path) {
      out << "  " << describe(step.site) << " -> " << show(step.word) << '\n';
    }
  }
  if (!cert.note.empty()) out << "note: " << cert.note << '\n';
  return kExitOk;
}

int cmd_explore_family(const std::string& family, std::size_t n, bool json,
                       std::ostream& out) {
  if (family != "T") {
    throw CommandFailure{kExitUsage, "unknown family " + family +
                                         " (only T is defined)"};
  }
  if (n == 0) throw CommandFailure{kExitUsage, "family index must be >= 1"};
  const Word word = twist_family(n);
  const InvariantReport report = compute_invariants(word);
  if (json) {
    print_json(out, {{"family", family}, {"n", n}, {"word", word},
                     {"report", report}});
  } else {
    out << show(word) << '\n' << report_line(report) << '\n';
  }
  return kExitOk;
}

// --- knots ----------------------------------------------------------------

SignedDiagram resolve(const std::string& text) {
  return positive_resolution(KnotProjection(read_realizable(text)));
}

int cmd_knots(const std::string& what, const std::string& text, bool json,
              std::ostream& out) {
  const SignedDiagram diagram = resolve(text);
  if (what == "resolve") {
    if (json) {
      print_json(out, diagram);
      return kExitOk;
    }
    for (Label label = 0; label < diagram.word.crossings(); ++label) {
      out << label_name(label) << ": over="
          << (diagram.over_first[label] ? "first" : "second") << " sign="
          << (diagram.sign[label] > 0 ? "+1" : "-1") << '\n';
    }
    out << "writhe " << diagram.writhe() << '\n';
  } else if (what == "bracket") {
    const LaurentPoly bracket = kauffman_bracket(diagram);
    const LaurentPoly normalized = jones_normalized(diagram);
    if (json) {
      print_json(out, {{"bracket", bracket}, {"normalized", normalized}});
    } else {
      out << "bracket: " << bracket.to_string() << '\n'
          << "normalized: " << normalized.to_string() << '\n';
    }
  } else {
    const std::uint64_t det = determinant(diagram);
    if (json) {
      print_json(out, {{"determinant", det}});
    } else {
      out << det << '\n';
    }
  }
  return kExitOk;
}

// --- faces ----------------------------------------------------------------

int cmd_faces(const std::string& text, bool json, std::ostream& out) {
  const KnotProjection projection(read_realizable(text));
  const FaceInventory inventory =
      faces(projection.word(), projection.embedding());
  if (json) {
    print_json(out, {{"embedding", projection.embedding()},
                     {"faces", inventory}});
    return kExitOk;
  }
  out << "embedding bits:";
  for (auto b : projection.embedding().bits) out << ' ' << int(b);
  out << '\n';
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> lengths;
  for (const auto& face : inventory.faces) {
    auto& [all, coherent] = lengths[face.length];
    ++all;
    coherent += face.coherent;
  }
  for (const auto& [length, counts] : lengths) {
    out << length << "-gons: " << counts.first << " (coherent "
        << counts.second << ")\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Knot projections as Gauss words: invariants, moves, search"};
  app.name("knotproj");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  bool json = false;
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "Print JSON");
  };

  InvariantsArgs inv;
  auto* invariants = app.add_subcommand("invariants", "n, X, tr, H of a word");
  auto* inv_word = invariants->add_option("word", inv.word, "Gauss code");
  invariants->add_option("--corpus", inv.corpus, "Corpus file");
  add_json(invariants);

  std::string table_path = default_corpus_path().string();
  auto* table = app.add_subcommand("table", "Invariant table of a corpus");
  table->add_option("--corpus", table_path, "Corpus file")
      ->capture_default_str();
  add_json(table);

  std::string suite;
  std::optional<std::size_t> verify_max_n;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", verify_max_n, "Crossing bound");
  add_json(verify);

  std::string move_word;
  std::string move_family = "both";
  std::size_t site_index = 0;
  auto* moves = app.add_subcommand("moves", "Move sites of a word");
  moves->require_subcommand(1);
  auto* moves_list = moves->add_subcommand("list", "List move sites");
  auto* moves_apply = moves->add_subcommand("apply", "Apply one site");
  for (auto* cmd : {moves_list, moves_apply}) {
    cmd->add_option("word", move_word, "Gauss code")->required();
    cmd->add_option("--moves", move_family, "strong|weak|both|r1")
        ->capture_default_str();
    add_json(cmd);
  }
  moves_apply->add_option("--site", site_index, "Index from 'moves list'")
      ->required();

  ExploreArgs ex;
  auto* explore = app.add_subcommand("explore", "Bounded move-graph search");
  explore->require_subcommand(1);
  auto* ex_class = explore->add_subcommand("class", "Words reachable from one");
  ex_class->add_option("word", ex.word, "Gauss code")->required();
  auto* ex_equiv = explore->add_subcommand("equiv", "Compare two words");
  ex_equiv->add_option("first", ex.word, "Gauss code")->required();
  ex_equiv->add_option("second", ex.other, "Gauss code")->required();
  for (auto* cmd : {ex_class, ex_equiv}) {
    cmd->add_option("--moves", ex.moves, "strong|weak|both|r1");
    cmd->add_option("--max-n", ex.max_n, "Crossing cap")->capture_default_str();
    cmd->add_option("--max-states", ex.max_states, "State cap")
        ->capture_default_str();
    cmd->add_option("--seed", ex.seed, "Shuffle expansion order");
    add_json(cmd);
  }
  std::string family;
  std::size_t family_n = 1;
  auto* ex_family = explore->add_subcommand("family", "Twist projections");
  ex_family->add_option("name", family, "Family name (T)")->required();
  ex_family->add_option("n", family_n, "Index")->required();
  add_json(ex_family);

  std::string knot_word;
  auto* knots = app.add_subcommand("knots", "Positive resolution and bracket");
  knots->require_subcommand(1);
  std::string knot_action;
  for (const char* name : {"resolve", "bracket", "det"}) {
    auto* cmd = knots->add_subcommand(name, "");
    cmd->add_option("word", knot_word, "Gauss code")->required();
    add_json(cmd);
    cmd->callback([&knot_action, name] { knot_action = name; });
  }
  knots->get_subcommand("resolve")->description("Over/under data and signs");
  knots->get_subcommand("bracket")->description("Kauffman bracket");
  knots->get_subcommand("det")->description("Knot determinant");

  std::string face_word;
  auto* face_cmd = app.add_subcommand("faces", "Embedding and face lengths");
  face_cmd->add_option("word", face_word, "Gauss code")->required();
  add_json(face_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (invariants->parsed()) {
      inv.json = json;
      return cmd_invariants(inv, inv_word->count() > 0, out);
    }
    if (table->parsed()) return cmd_table(table_path, json, out);
    if (verify->parsed()) return cmd_verify(suite, verify_max_n, json, out);
    if (moves_list->parsed()) {
      return cmd_moves_list(read_realizable(move_word),
                            read_moves(move_family), json, out);
    }
    if (moves_apply->parsed()) {
      return cmd_moves_apply(read_realizable(move_word),
                             read_moves(move_family), site_index, json, out);
    }
    if (ex_class->parsed()) {
      if (ex.moves.empty()) ex.moves = "strong";
      ex.json = json;
      return cmd_explore_class(ex, out);
    }
    if (ex_equiv->parsed()) {
      if (ex.moves.empty()) ex.moves = "weak";
      ex.json = json;
      return cmd_explore_equiv(ex, out);
    }
    if (ex_family->parsed()) {
      return cmd_explore_family(family, family_n, json, out);
    }
    if (knots->parsed()) return cmd_knots(knot_action, knot_word, json, out);
    if (face_cmd->parsed()) return cmd_faces(face_word, json, out);
  } catch (const CommandFailure& failure) {
    err << "error: " << failure.message << '\n';
    return failure.code;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace knotproj
