#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotproj {

// Crossing labels are dense: a word with n crossings uses exactly 0..n-1.
using Label = std::uint32_t;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal cross-check between two independent routes fails.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Printable token for a label: a..z, then aa, ab, ... Ordering tokens by
// (length, text) reproduces the numeric order of the labels.
std::string label_name(Label id);

// Ordering used to assign dense labels to arbitrary input tokens.
bool token_less(std::string_view lhs, std::string_view rhs);

// Cyclic Gauss code of a knot projection: every crossing label occurs
// exactly twice. The empty word is the trivial projection.
class DoubleOccurrenceWord {
 public:
  DoubleOccurrenceWord() = default;

  // Throws std::invalid_argument unless `letters` uses every label in
  // 0..n-1 exactly twice.
  explicit DoubleOccurrenceWord(std::vector<Label> letters);

  // Builds a word from labels that occur twice each but need not be dense;
  // labels are renumbered preserving their relative order.
  static DoubleOccurrenceWord compacted(std::span<const Label> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t crossings() const noexcept { return letters_.size() / 2; }
  bool empty() const noexcept { return letters_.empty(); }

  Label operator[](std::size_t pos) const { return letters_[pos]; }
  std::span<const Label> letters() const noexcept { return letters_; }

  // Positions of the two occurrences, first < second.
  const std::array<std::size_t, 2>& occurrences(Label label) const {
    return occurrences_[label];
  }

  // Letters starting at `shift` (cyclically).
  DoubleOccurrenceWord rotated(std::size_t shift) const;
  DoubleOccurrenceWord reversed() const;

  std::string to_string() const;

  friend bool operator==(const DoubleOccurrenceWord& lhs,
                         const DoubleOccurrenceWord& rhs) {
    return lhs.letters_ == rhs.letters_;
  }
  // Shorter words first, then lexicographic on labels.
  friend std::strong_ordering operator<=>(const DoubleOccurrenceWord& lhs,
                                          const DoubleOccurrenceWord& rhs);

 private:
  std::vector<Label> letters_;
  std::vector<std::array<std::size_t, 2>> occurrences_;
};

using Word = DoubleOccurrenceWord;

struct WordHash {
  std::size_t operator()(const Word& word) const noexcept;
};

// For each label, the two positions of its chord on the circle of 2n points.
struct ChordDiagram {
  std::size_t points = 0;
  std::vector<std::array<std::size_t, 2>> chords;
};

ChordDiagram chord_diagram(const Word& word);

// Whitespace-separated tokens, each appearing exactly twice; '#' starts a
// comment that runs to the end of the line.
Word parse_word(std::string_view text);

// Lexicographically least relabeled word over all rotations and both
// orientations, labels assigned in order of first occurrence.
Word canonicalize(const Word& word);

bool is_canonical(const Word& word);

// The one-crossing curve "a a" and the trefoil projection "a b c a b c".
const Word& curl_word();
const Word& trefoil_word();

}  // namespace knotproj
