#include "knotproj/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "knotproj/embedding.hpp"
#include "knotproj/invariants.hpp"

namespace knotproj {

namespace {

constexpr std::array<std::string_view, kMoveKindCount> kKindNames = {
    "R1Add", "R1Del", "R3StrongContract", "R3StrongExpand", "R3Weak"};

}  // namespace

std::string_view to_string(MoveKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<MoveKind> move_kind_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == text) return static_cast<MoveKind>(i);
  }
  return std::nullopt;
}

bool is_triangle_move(MoveKind kind) {
  return kind != MoveKind::R1Add && kind != MoveKind::R1Del;
}

bool is_strong(MoveKind kind) {
  return kind == MoveKind::R3StrongContract ||
         kind == MoveKind::R3StrongExpand;
}

MoveKind inverse(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add: return MoveKind::R1Del;
    case MoveKind::R1Del: return MoveKind::R1Add;
    case MoveKind::R3StrongContract: return MoveKind::R3StrongExpand;
    case MoveKind::R3StrongExpand: return MoveKind::R3StrongContract;
    case MoveKind::R3Weak: return MoveKind::R3Weak;
  }
  return kind;
}

std::vector<MoveKind> MoveSet::kinds() const {
  std::vector<MoveKind> out;
  for (std::size_t i = 0; i < kMoveKindCount; ++i) {
    const auto kind = static_cast<MoveKind>(i);
    if (contains(kind)) out.push_back(kind);
  }
  return out;
}

std::optional<MoveSet> move_family_from_string(std::string_view text) {
  if (text == "strong") return MoveSet::strong();
  if (text == "weak") return MoveSet::weak();
  if (text == "both") return MoveSet::all();
  if (text == "r1") return MoveSet::r1();
  return std::nullopt;
}

std::string describe(const MoveSite& site) {
  std::ostringstream out;
  out << to_string(site.kind);
  switch (site.kind) {
    case MoveKind::R1Add:
      out << " slot " << site.slot;
      break;
    case MoveKind::R1Del:
      out << ' ' << label_name(site.letters.at(0));
      break;
    default:
      out << " {";
      for (std::size_t i = 0; i < site.letters.size(); ++i) {
        out << (i ? "," : "") << label_name(site.letters[i]);
      }
      out << "} sides";
      for (std::size_t pos : site.side_factors) out << ' ' << pos;
      out << " internal " << site.internal_crossings;
      break;
  }
  return out.str();
}

namespace {

bool cyclically_adjacent(const Word& word, Label label) {
  const auto [first, second] = word.occurrences(label);
  return second == first + 1 || (first == 0 && second + 1 == word.size());
}

MoveKind classify_triangle(int internal) {
  if (internal == 3) return MoveKind::R3StrongContract;
  if (internal == 0) return MoveKind::R3StrongExpand;
  return MoveKind::R3Weak;
}

std::size_t cyclic_gap(std::size_t from, std::size_t to, std::size_t len) {
  return (to + len - from) % len;
}

}  // namespace

std::vector<MoveSite> find_r1_sites(const Word& word) {
  std::vector<MoveSite> sites;
  for (Label label = 0; label < word.crossings(); ++label) {
    if (cyclically_adjacent(word, label)) {
      MoveSite site;
      site.kind = MoveKind::R1Del;
      site.letters = {label};
      sites.push_back(std::move(site));
    }
  }
  const std::size_t slots = std::max<std::size_t>(word.size(), 1);
  for (std::size_t slot = 0; slot < slots; ++slot) {
    MoveSite site;
    site.kind = MoveKind::R1Add;
    site.slot = slot;
    sites.push_back(std::move(site));
  }
  return sites;
}

std::vector<MoveSite> find_triangles(const Word& word) {
  std::vector<MoveSite> sites;
  const std::size_t len = word.size();
  if (len < 6) return sites;
  std::vector<std::size_t> starts;
  for (std::size_t s = 0; s < len; ++s) {
    if (word[s] != word[(s + 1) % len]) starts.push_back(s);
  }
  auto pair_of = [&](std::size_t s) {
    Label x = word[s];
    Label y = word[(s + 1) % len];
    return x < y ? std::array<Label, 2>{x, y} : std::array<Label, 2>{y, x};
  };
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const auto p = pair_of(starts[i]);
    for (std::size_t j = i + 1; j < starts.size(); ++j) {
      if (starts[j] - starts[i] < 2) continue;
      const auto q = pair_of(starts[j]);
      if (q == p) continue;
      // The two sides must share exactly one corner.
      Label shared;
      if (q[0] == p[0] || q[0] == p[1]) {
        shared = q[0];
      } else if (q[1] == p[0] || q[1] == p[1]) {
        shared = q[1];
      } else {
        continue;
      }
      const Label a = p[0] == shared ? p[1] : p[0];
      const Label b = q[0] == shared ? q[1] : q[0];
      const std::array<Label, 2> wanted =
          a < b ? std::array<Label, 2>{a, b} : std::array<Label, 2>{b, a};
      for (std::size_t k = j + 1; k < starts.size(); ++k) {
        if (starts[k] - starts[j] < 2) continue;
        if (cyclic_gap(starts[k], starts[i], len) < 2) continue;
        if (pair_of(starts[k]) != wanted) continue;
        MoveSite site;
        site.letters = {a, b, shared};
        std::sort(site.letters.begin(), site.letters.end());
        site.side_factors = {starts[i], starts[j], starts[k]};
        site.internal_crossings =
            interleaved(word, site.letters[0], site.letters[1]) +
            interleaved(word, site.letters[0], site.letters[2]) +
            interleaved(word, site.letters[1], site.letters[2]);
        site.kind = classify_triangle(site.internal_crossings);
        sites.push_back(std::move(site));
      }
    }
  }
  return sites;
}

std::vector<MoveSite> find_sites(const Word& word) {
  auto sites = find_r1_sites(word);
  auto triangles = find_triangles(word);
  sites.insert(sites.end(), std::make_move_iterator(triangles.begin()),
               std::make_move_iterator(triangles.end()));
  return sites;
}

std::vector<std::pair<Label, Label>> find_coherent_bigons(const Word& word) {
  std::vector<std::pair<Label, Label>> out;
  const std::size_t len = word.size();
  if (len < 4) return out;
  for (Label a = 0; a < word.crossings(); ++a) {
    for (Label b = a + 1; b < word.crossings(); ++b) {
      // Need factors "ab" and "ba" at disjoint positions.
      bool forward = false;
      bool backward = false;
      for (std::size_t s = 0; s < len; ++s) {
        const Label x = word[s];
        const Label y = word[(s + 1) % len];
        forward |= x == a && y == b;
        backward |= x == b && y == a;
      }
      // Overlapping sides ("aba" or "bab") would make a and b interleave,
      // so the nesting test also keeps the two sides disjoint.
      if (forward && backward && !interleaved(word, a, b)) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

Word apply_unchecked(const Word& word, const MoveSite& site) {
  std::vector<Label> letters(word.letters().begin(), word.letters().end());
  switch (site.kind) {
    case MoveKind::R1Del: {
      const Label label = site.letters.at(0);
      if (label >= word.crossings() || !cyclically_adjacent(word, label)) {
        throw std::invalid_argument("no isolated chord at " + describe(site));
      }
      std::erase(letters, label);
      return Word::compacted(letters);
    }
    case MoveKind::R1Add: {
      if (site.slot > word.size()) {
        throw std::invalid_argument("slot out of range in " + describe(site));
      }
      const auto fresh = static_cast<Label>(word.crossings());
      letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(site.slot),
                     {fresh, fresh});
      return Word(std::move(letters));
    }
    default: {
      const std::size_t len = word.size();
      if (site.side_factors.size() != 3) {
        throw std::invalid_argument("triangle site needs three sides");
      }
      for (std::size_t s : site.side_factors) {
        if (s >= len) throw std::invalid_argument("side outside word");
        std::swap(letters[s], letters[(s + 1) % len]);
      }
      return Word(std::move(letters));
    }
  }
}

Word apply(const Word& word, const MoveSite& site) {
  if (is_triangle_move(site.kind)) {
    // The site must describe a genuine triangle of this word.
    const auto found = find_triangles(word);
    const bool known = std::any_of(found.begin(), found.end(),
                                   [&](const MoveSite& other) {
                                     return other.side_factors ==
                                                site.side_factors &&
                                            other.kind == site.kind;
                                   });
    if (!known) {
      throw std::invalid_argument("no triangle at " + describe(site));
    }
  }
  Word result = apply_unchecked(word, site);

  const long before = static_cast<long>(cross_chord_number(word));
  const long after = static_cast<long>(cross_chord_number(result));
  const long delta = after - before;
  long expected = 0;
  if (is_triangle_move(site.kind)) expected = 3 - 2L * site.internal_crossings;
  if (delta != expected) {
    throw MoveError(describe(site) + " on " + word.to_string() +
                    " changed the cross chord number by " +
                    std::to_string(delta));
  }
  if (!is_realizable(result)) {
    throw MoveError(describe(site) + " on " + word.to_string() +
                    " produced the non-spherical word " + result.to_string());
  }
  return result;
}

std::vector<Neighbor> neighbors(const Word& word, MoveSet allowed,
                                std::size_t max_crossings) {
  std::vector<Neighbor> out;
  if (allowed.empty()) return out;
  std::map<std::pair<Word, MoveKind>, std::size_t> seen;
  std::vector<MoveSite> sites;
  if (allowed.contains(MoveKind::R1Add) || allowed.contains(MoveKind::R1Del)) {
    sites = find_r1_sites(word);
  }
  if (allowed.contains(MoveKind::R3StrongContract) ||
      allowed.contains(MoveKind::R3StrongExpand) ||
      allowed.contains(MoveKind::R3Weak)) {
    auto triangles = find_triangles(word);
    sites.insert(sites.end(), triangles.begin(), triangles.end());
  }
  for (const auto& site : sites) {
    if (!allowed.contains(site.kind)) continue;
    if (site.kind == MoveKind::R1Add && word.crossings() + 1 > max_crossings) {
      continue;
    }
    Word result = canonicalize(apply(word, site));
    auto key = std::make_pair(result, site.kind);
    if (seen.contains(key)) continue;
    seen.emplace(std::move(key), out.size());
    out.push_back(Neighbor{std::move(result), site.kind, site});
  }
  std::sort(out.begin(), out.end(), [](const Neighbor& x, const Neighbor& y) {
    if (x.word != y.word) return x.word < y.word;
    return x.kind < y.kind;
  });
  return out;
}

}  // namespace knotproj
