#include "knotproj/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "knotproj/embedding.hpp"

namespace knotproj {

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text,
                                      std::string_view origin) {
  std::vector<CorpusEntry> entries;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto where = std::string(origin) + ":" + std::to_string(number);
    const auto colon = stripped.find(':');
    if (colon == std::string::npos) {
      throw CorpusError(where + ": expected 'name: gauss code'", number);
    }
    std::string name = trim(std::string_view(stripped).substr(0, colon));
    if (name.empty()) throw CorpusError(where + ": empty name", number);
    if (!names.insert(name).second) {
      throw CorpusError(where + ": duplicate name '" + name + "'", number);
    }
    Word word;
    try {
      word = parse_word(std::string_view(stripped).substr(colon + 1));
    } catch (const ParseError& e) {
      throw CorpusError(where + ": " + e.what(), number);
    }
    if (!is_realizable(word)) {
      throw CorpusError(where + ": " + name + " is not realizable on S²",
                        number);
    }
    entries.push_back({std::move(name), std::move(word), where});
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path.string(), 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str(), path.string());
}

Word word_from_dt_code(const std::vector<int>& code) {
  const std::size_t n = code.size();
  std::vector<Label> letters(2 * n, static_cast<Label>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    const int partner = code[i] < 0 ? -code[i] : code[i];
    if (partner < 2 || partner % 2 != 0 ||
        static_cast<std::size_t>(partner) > 2 * n) {
      throw ParseError("bad DT code entry " + std::to_string(code[i]));
    }
    const std::size_t other = static_cast<std::size_t>(partner) - 1;
    if (letters[2 * i] != static_cast<Label>(-1) ||
        letters[other] != static_cast<Label>(-1)) {
      throw ParseError("DT code repeats a position");
    }
    letters[2 * i] = static_cast<Label>(i);
    letters[other] = static_cast<Label>(i);
  }
  return Word::compacted(letters);
}

std::filesystem::path default_corpus_path() {
  return std::filesystem::path(KNOTPROJ_DATA_DIR) / "prime_projections.txt";
}

}  // namespace knotproj
