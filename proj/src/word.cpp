#include "knotproj/word.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace knotproj {

std::string label_name(Label id) {
  // Bijective base-26 with a length offset so that shorter names come first.
  std::size_t width = 1;
  std::uint64_t block = 26;
  std::uint64_t rest = id;
  while (rest >= block) {
    rest -= block;
    block *= 26;
    ++width;
  }
  std::string name(width, 'a');
  for (std::size_t i = width; i-- > 0;) {
    name[i] = static_cast<char>('a' + rest % 26);
    rest /= 26;
  }
  return name;
}

bool token_less(std::string_view lhs, std::string_view rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

DoubleOccurrenceWord::DoubleOccurrenceWord(std::vector<Label> letters)
    : letters_(std::move(letters)) {
  if (letters_.size() % 2 != 0) {
    throw std::invalid_argument("word length must be even");
  }
  const std::size_t n = letters_.size() / 2;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  occurrences_.assign(n, {unset, unset});
  for (std::size_t pos = 0; pos < letters_.size(); ++pos) {
    const Label label = letters_[pos];
    if (label >= n) throw std::invalid_argument("label out of range");
    auto& occ = occurrences_[label];
    if (occ[0] == unset) {
      occ[0] = pos;
    } else if (occ[1] == unset) {
      occ[1] = pos;
    } else {
      throw std::invalid_argument("label " + label_name(label) +
                                  " occurs more than twice");
    }
  }
  for (Label label = 0; label < n; ++label) {
    if (occurrences_[label][1] == unset) {
      throw std::invalid_argument("label " + label_name(label) +
                                  " does not occur twice");
    }
  }
}

DoubleOccurrenceWord DoubleOccurrenceWord::compacted(
    std::span<const Label> letters) {
  std::vector<Label> distinct(letters.begin(), letters.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<Label> out;
  out.reserve(letters.size());
  for (Label label : letters) {
    out.push_back(static_cast<Label>(
        std::lower_bound(distinct.begin(), distinct.end(), label) -
        distinct.begin()));
  }
  return DoubleOccurrenceWord(std::move(out));
}

DoubleOccurrenceWord DoubleOccurrenceWord::rotated(std::size_t shift) const {
  if (letters_.empty()) return *this;
  std::vector<Label> out(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    out[i] = letters_[(i + shift) % letters_.size()];
  }
  return DoubleOccurrenceWord(std::move(out));
}

DoubleOccurrenceWord DoubleOccurrenceWord::reversed() const {
  return DoubleOccurrenceWord(
      std::vector<Label>(letters_.rbegin(), letters_.rend()));
}

std::string DoubleOccurrenceWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += label_name(letters_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const DoubleOccurrenceWord& lhs,
                                 const DoubleOccurrenceWord& rhs) {
  if (auto cmp = lhs.letters_.size() <=> rhs.letters_.size(); cmp != 0) {
    return cmp;
  }
  return lhs.letters_ <=> rhs.letters_;
}

std::size_t WordHash::operator()(const Word& word) const noexcept {
  // FNV-1a over the labels.
  std::uint64_t h = 1469598103934665603ull;
  for (Label label : word.letters()) {
    h ^= label;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

ChordDiagram chord_diagram(const Word& word) {
  ChordDiagram diagram;
  diagram.points = word.size();
  diagram.chords.reserve(word.crossings());
  for (Label label = 0; label < word.crossings(); ++label) {
    diagram.chords.push_back(word.occurrences(label));
  }
  return diagram;
}

Word parse_word(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string token;
    while (words >> token) tokens.push_back(token);
  }

  std::map<std::string, std::size_t> counts;
  std::vector<std::string> first_seen;
  for (const auto& token : tokens) {
    if (counts[token]++ == 0) first_seen.push_back(token);
  }
  for (const auto& token : first_seen) {
    const std::size_t count = counts[token];
    if (count == 1) throw ParseError(token + " occurs once");
    if (count > 2) {
      throw ParseError(token + " occurs " + std::to_string(count) + " times");
    }
  }
  if (tokens.size() % 2 != 0) throw ParseError("odd number of tokens");

  std::vector<std::string> order = first_seen;
  std::sort(order.begin(), order.end(),
            [](const std::string& a, const std::string& b) {
              return token_less(a, b);
            });
  std::map<std::string, Label> ids;
  for (std::size_t i = 0; i < order.size(); ++i) {
    ids[order[i]] = static_cast<Label>(i);
  }
  std::vector<Label> letters;
  letters.reserve(tokens.size());
  for (const auto& token : tokens) letters.push_back(ids[token]);
  return Word(std::move(letters));
}

namespace {

constexpr Label kUnassigned = static_cast<Label>(-1);

// Compares the relabeled traversal (start, step) against `best`, writing it
// into `best` when strictly smaller. `relabel` is scratch of size n.
bool improve(const Word& word, std::size_t start, bool backwards,
             std::vector<Label>& best, std::vector<Label>& candidate,
             std::vector<Label>& relabel) {
  const std::size_t len = word.size();
  std::fill(relabel.begin(), relabel.end(), kUnassigned);
  Label next = 0;
  bool decided = best.empty();
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t pos = backwards ? (start + len - k) % len
                                      : (start + k) % len;
    Label& mapped = relabel[word[pos]];
    if (mapped == kUnassigned) mapped = next++;
    candidate[k] = mapped;
    if (!decided) {
      if (candidate[k] > best[k]) return false;
      if (candidate[k] < best[k]) decided = true;
    }
  }
  if (!decided) return false;
  best = candidate;
  return true;
}

}  // namespace

Word canonicalize(const Word& word) {
  if (word.empty()) return word;
  const std::size_t len = word.size();
  std::vector<Label> best;
  std::vector<Label> candidate(len);
  std::vector<Label> relabel(word.crossings());
  for (std::size_t start = 0; start < len; ++start) {
    improve(word, start, false, best, candidate, relabel);
    improve(word, start, true, best, candidate, relabel);
  }
  return Word(std::move(best));
}

bool is_canonical(const Word& word) {
  if (word.empty()) return true;
  std::vector<Label> best(word.letters().begin(), word.letters().end());
  std::vector<Label> candidate(word.size());
  std::vector<Label> relabel(word.crossings());
  for (std::size_t start = 0; start < word.size(); ++start) {
    if (improve(word, start, false, best, candidate, relabel) ||
        improve(word, start, true, best, candidate, relabel)) {
      return false;
    }
  }
  return true;
}

const Word& curl_word() {
  static const Word word({0, 0});
  return word;
}

const Word& trefoil_word() {
  static const Word word({0, 1, 2, 0, 1, 2});
  return word;
}

}  // namespace knotproj
