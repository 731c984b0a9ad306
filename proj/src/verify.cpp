#include "knotproj/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "knotproj/decompose.hpp"
#include "knotproj/embedding.hpp"
#include "knotproj/explore.hpp"
#include "knotproj/invariants.hpp"
#include "knotproj/knots.hpp"
#include "knotproj/moves.hpp"

namespace knotproj {

namespace {

void fail(SuiteReport& report, const Word& word, std::string detail) {
  if (!report.passed) return;
  report.passed = false;
  report.counterexample = word.to_string();
  report.detail = std::move(detail);
}

// Invariants the move checks compare.
struct Snapshot {
  long x = 0;
  long tr = 0;
  int h = 0;
};

Snapshot snapshot(const Word& word) {
  return {static_cast<long>(cross_chord_number(word)),
          static_cast<long>(trivializing_number(word)), h_invariant(word)};
}

void run_parity(SuiteReport& report) {
  for (const Word& word : enumerate_realizable(report.max_n)) {
    ++report.checked;
    try {
      if (trivializing_number(word) % 2 != 0) fail(report, word, "odd tr");
    } catch (const ConsistencyError& e) {
      fail(report, word, e.what());
    }
  }
}

void run_deltas(SuiteReport& report) {
  for (const Word& word : enumerate_realizable(report.max_n)) {
    const Snapshot before = snapshot(word);
    for (const MoveSite& site : find_sites(word)) {
      ++report.checked;
      const Word after_word = apply_unchecked(word, site);
      const std::string where = describe(site) + ": ";
      if (!is_realizable(after_word)) {
        fail(report, word, where + "result not realizable");
        continue;
      }
      const Snapshot after = snapshot(after_word);
      const long dx = after.x - before.x;
      const long dtr = after.tr - before.tr;
      const int dh = after.h - before.h;
      const std::string deltas = "dX=" + std::to_string(dx) +
                                 " dtr=" + std::to_string(dtr) +
                                 " dH=" + std::to_string(dh);
      bool ok = true;
      switch (site.kind) {
        case MoveKind::R1Add:
        case MoveKind::R1Del:
          ok = dx == 0 && dtr == 0 && dh == 0;
          break;
        case MoveKind::R3Weak:
          ok = (dx == 1 || dx == -1) && dtr == 0;
          break;
        case MoveKind::R3StrongContract:
        case MoveKind::R3StrongExpand:
          ok = (dx == 3 || dx == -3) && (dtr == 0 || dtr == 2 || dtr == -2) &&
               dh == 0;
          break;
      }
      if (!ok) fail(report, word, where + deltas);
    }
  }
}

void run_twist(SuiteReport& report) {
  std::optional<std::size_t> previous_x;
  for (std::size_t n = 1; n <= report.max_n; ++n) {
    ++report.checked;
    const Word word = twist_family(n);
    const std::size_t tr = trivializing_number(word);
    const std::size_t x = cross_chord_number(word);
    report.rows.push_back("n=" + std::to_string(n) + " tr=" +
                          std::to_string(tr) + " X=" + std::to_string(x));
    if (tr != 2) fail(report, word, "tr = " + std::to_string(tr));
    // One extra twist adds a single cross chord when it turns an odd
    // twist count even.
    if (previous_x && n % 2 == 0 && x != *previous_x + 1) {
      fail(report, word,
           "X grew by " + std::to_string(static_cast<long>(x) -
                                         static_cast<long>(*previous_x)));
    }
    previous_x = x;
  }
}

void run_strong_trivial(SuiteReport& report) {
  SearchConfig config;
  config.max_crossings = report.max_n;
  config.allowed = MoveSet::strong();
  const ClassResult reached = bfs_class(Word{}, config);
  if (!reached.complete) fail(report, Word{}, "state cap reached");
  for (const Word& word : reached.words) {
    ++report.checked;
    if (!strong_trivial_test(word).holds) {
      fail(report, word, "reached word is not a sum of curls and trefoils");
    }
  }
  // Sums of at most two trefoils and at most one curl.
  std::set<Word> expected{Word{}, canonicalize(curl_word()),
                          canonicalize(trefoil_word())};
  std::vector<Word> layer{Word{}, trefoil_word()};
  for (const Word& sum : connected_sum_variants(trefoil_word(),
                                                trefoil_word())) {
    layer.push_back(sum);
  }
  for (const Word& base : layer) {
    if (base.crossings() <= report.max_n) expected.insert(canonicalize(base));
    if (base.crossings() + 1 <= report.max_n) {
      for (const Word& sum : connected_sum_variants(base, curl_word())) {
        expected.insert(sum);
      }
    }
  }
  for (const Word& word : expected) {
    if (word.crossings() > report.max_n) continue;
    ++report.checked;
    if (!std::binary_search(reached.words.begin(), reached.words.end(),
                            word)) {
      fail(report, word, "expected sum not reached");
    }
  }
}

void run_bracket(SuiteReport& report) {
  for (const Word& word : enumerate_realizable(report.max_n)) {
    ++report.checked;
    const LaurentPoly jones =
        jones_normalized(positive_resolution(KnotProjection(word)));
    const std::uint64_t det = determinant_of(jones);
    if (det % 2 == 0) {
      fail(report, word, "even determinant " + std::to_string(det));
    }
    for (const MoveSite& site : find_sites(word)) {
      if (is_strong(site.kind)) continue;
      const Word moved = apply_unchecked(word, site);
      if (moved.crossings() > report.max_n + 1) continue;
      const LaurentPoly other =
          jones_normalized(positive_resolution(KnotProjection(moved)));
      if (other != jones) {
        fail(report, word, describe(site) + " changes the normalized bracket");
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"deltas", "parity", "twist",
                                              "strong-trivial", "bracket"};
  return names;
}

std::size_t default_max_n(std::string_view suite) {
  if (suite == "twist") return 8;
  if (suite == "strong-trivial") return 7;
  if (suite == "bracket") return 5;
  return 6;
}

SuiteReport run_suite(std::string_view suite, const VerifyOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  SuiteReport report;
  report.suite = std::string(suite);
  report.max_n = options.max_n.value_or(default_max_n(suite));
  if (suite == "parity") {
    run_parity(report);
  } else if (suite == "deltas") {
    run_deltas(report);
  } else if (suite == "twist") {
    run_twist(report);
  } else if (suite == "strong-trivial") {
    run_strong_trivial(report);
  } else {
    run_bracket(report);
  }
  return report;
}

}  // namespace knotproj
