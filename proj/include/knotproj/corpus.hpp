#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotproj/word.hpp"

namespace knotproj {

struct CorpusEntry {
  std::string name;
  Word word;
  std::string source;  // "path:line"

  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

// Carries the offending line number (1-based) when known.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& message, std::size_t line)
      : std::runtime_error(message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Lines of "name: <gauss code>". Blank lines and lines starting with '#' are
// skipped; a '#' after the code starts a comment. Names must be unique and
// every word sphere-realizable.
std::vector<CorpusEntry> parse_corpus(std::string_view text,
                                      std::string_view origin = "<input>");

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);

// Gauss word of a Dowker-Thistlethwaite code (even labels for the odd
// positions 1, 3, 5, ...; signs ignored).
Word word_from_dt_code(const std::vector<int>& code);

// Location of the bundled prime projection table.
std::filesystem::path default_corpus_path();

}  // namespace knotproj
