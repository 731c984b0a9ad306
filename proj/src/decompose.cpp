#include "knotproj/decompose.hpp"

#include <algorithm>

namespace knotproj {

std::optional<std::pair<std::size_t, std::size_t>> find_split(
    const Word& word) {
  const std::size_t len = word.size();
  if (len < 4) return std::nullopt;
  std::vector<std::uint8_t> seen(word.crossings());
  for (std::size_t start = 0; start < len; ++start) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t open = 0;
    for (std::size_t length = 1; length + 1 < len; ++length) {
      const Label label = word[(start + length - 1) % len];
      if (seen[label]) {
        --open;
      } else {
        seen[label] = 1;
        ++open;
      }
      if (open == 0) return std::make_pair(start, length);
    }
  }
  return std::nullopt;
}

bool is_prime(const Word& word) { return !find_split(word).has_value(); }

namespace {

void decompose_into(const Word& word, std::vector<Word>& factors) {
  if (word.empty()) return;
  const auto split = find_split(word);
  if (!split) {
    factors.push_back(canonicalize(word));
    return;
  }
  const auto [start, length] = *split;
  const Word rotated = word.rotated(start);
  const auto letters = rotated.letters();
  decompose_into(Word::compacted(letters.subspan(0, length)), factors);
  decompose_into(Word::compacted(letters.subspan(length)), factors);
}

}  // namespace

std::vector<Word> prime_decompose(const Word& word) {
  std::vector<Word> factors;
  decompose_into(word, factors);
  std::sort(factors.begin(), factors.end());
  return factors;
}

Word connected_sum(const Word& u, const Word& v, std::size_t slot_u,
                   std::size_t slot_v) {
  if (slot_u > u.size()) throw std::out_of_range("slot_u out of range");
  if (slot_v >= std::max<std::size_t>(v.size(), 1)) {
    throw std::out_of_range("slot_v out of range");
  }
  const auto offset = static_cast<Label>(u.crossings());
  std::vector<Label> letters(u.letters().begin(),
                             u.letters().begin() + slot_u);
  for (std::size_t i = 0; i < v.size(); ++i) {
    letters.push_back(v[(slot_v + i) % v.size()] + offset);
  }
  letters.insert(letters.end(), u.letters().begin() + slot_u,
                 u.letters().end());
  return Word(std::move(letters));
}

std::vector<Word> connected_sum_variants(const Word& u, const Word& v) {
  std::vector<Word> out;
  const std::size_t u_slots = std::max<std::size_t>(u.size(), 1);
  const std::size_t v_slots = std::max<std::size_t>(v.size(), 1);
  for (const Word& summand : {v, v.reversed()}) {
    for (std::size_t su = 0; su < u_slots; ++su) {
      for (std::size_t sv = 0; sv < v_slots; ++sv) {
        out.push_back(canonicalize(connected_sum(u, summand, su, sv)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace knotproj
