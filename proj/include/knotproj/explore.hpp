#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotproj/moves.hpp"
#include "knotproj/word.hpp"

namespace knotproj {

struct SearchConfig {
  std::size_t max_crossings = 7;
  MoveSet allowed = MoveSet::strong();
  std::size_t max_states = 1'000'000;
  std::optional<std::size_t> max_depth;
  // When set, neighbours are expanded in a shuffled order. Reached sets do
  // not depend on it; discovery order and witness paths may.
  std::optional<std::uint64_t> shuffle_seed;
};

// Every canonical sphere-realizable word with at most n_max crossings,
// sorted by (n, word).
std::vector<Word> enumerate_realizable(std::size_t n_max);

// Every canonical double occurrence word with exactly n crossings,
// realizable or not.
std::vector<Word> enumerate_canonical_words(std::size_t n);

// Breadth-first exploration of the move graph over canonical words.
struct SearchTree {
  struct Entry {
    Word word;
    std::optional<std::size_t> parent;  // index into states
    std::optional<Neighbor> step;       // move taken from the parent
    std::size_t depth = 0;
  };
  std::vector<Entry> states;  // in discovery order
  // False when the state cap stopped the search early.
  bool complete = true;
};

SearchTree bfs_tree(const Word& start, const SearchConfig& config);

struct ClassResult {
  std::vector<Word> words;  // sorted
  bool complete = true;
};

// Canonical words reachable from `start` without exceeding the crossing
// cap. The start word is not re-validated.
ClassResult bfs_class(const Word& start, const SearchConfig& config);

struct FactorTest {
  bool holds = false;
  std::vector<Word> factors;  // canonical prime factors examined
};

// Whether the word is a connected sum of curls and trefoils, the form of
// every projection strongly (1,3) homotopic to the trivial one.
FactorTest strong_trivial_test(const Word& word);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Empty when `base` has no 1-gon, coherent 2-gon or coherent 3-gon on its
// chosen embedding; otherwise a description of the offending face.
std::optional<std::string> base_projection_defect(const Word& base);

// Whether `word` is `base` connected-summed with curls and trefoils. Throws
// PreconditionError when `base` fails base_projection_defect.
FactorTest base_summand_test(const Word& word, const Word& base);

// Twist projection: a two-crossing clasp plus n twist crossings. Validated
// to be realizable, prime and of trivializing number 2.
Word twist_family(std::size_t n);

enum class Verdict { Equivalent, Inequivalent, Unknown };

std::string_view to_string(Verdict verdict);

struct PathStep {
  MoveKind kind = MoveKind::R1Add;
  MoveSite site;  // relative to the canonical word before the step
  Word word;      // canonical word after the step
};

struct Separation {
  std::string invariant;
  std::string source_value;
  std::string target_value;
};

struct ClassCertificate {
  Verdict verdict = Verdict::Unknown;
  Word source;  // canonical
  Word target;  // canonical
  MoveSet moves;
  std::size_t max_crossings = 0;
  std::vector<PathStep> path;
  std::optional<Separation> separation;
  std::string note;
};

// Separates by invariants first (X mod 3 and H when weak moves are excluded;
// tr and the normalized bracket of the positive resolution when strong moves
// are excluded; the R1-reduced word for R1 alone), then searches from both
// ends. `moves` is closed under inverses before use.
ClassCertificate equivalence_query(const Word& source, const Word& target,
                                   MoveSet moves, SearchConfig config);

// Re-applies the witness path; true when it leads from source to target.
bool replay(const ClassCertificate& certificate);

// Whether q is obtained from p by first moves (adding at most
// `extra_curls` curls beyond p's reduced size) and exactly one third move,
// compared after R1 reduction.
// R1-reduced results of one third move applied to a member of p's first-move
// class with at most `extra_curls` curls beyond its reduced size; sorted.
std::vector<Word> one_third_move_targets(const Word& p,
                                         std::size_t extra_curls = 2);

bool related_by_one_third_move(const Word& p, const Word& q,
                               std::size_t extra_curls = 2);

}  // namespace knotproj
