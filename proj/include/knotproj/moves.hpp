#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotproj/word.hpp"

namespace knotproj {

// R1Add/R1Del are (1a)/(1b). The strong third move creates three cross
// chords when expanding (3a) and removes them when contracting (3b).
enum class MoveKind : std::uint8_t {
  R1Add,
  R1Del,
  R3StrongContract,
  R3StrongExpand,
  R3Weak,
};

inline constexpr std::size_t kMoveKindCount = 5;

std::string_view to_string(MoveKind kind);
std::optional<MoveKind> move_kind_from_string(std::string_view text);

bool is_triangle_move(MoveKind kind);
bool is_strong(MoveKind kind);
MoveKind inverse(MoveKind kind);

class MoveSet {
 public:
  constexpr MoveSet() = default;
  constexpr MoveSet(std::initializer_list<MoveKind> kinds) {
    for (MoveKind kind : kinds) bits_ |= bit(kind);
  }

  constexpr bool contains(MoveKind kind) const { return bits_ & bit(kind); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr MoveSet operator|(MoveSet other) const {
    MoveSet out;
    out.bits_ = bits_ | other.bits_;
    return out;
  }
  std::vector<MoveKind> kinds() const;

  friend constexpr bool operator==(MoveSet, MoveSet) = default;

  static constexpr MoveSet r1() { return {MoveKind::R1Add, MoveKind::R1Del}; }
  static constexpr MoveSet strong() {
    return r1() | MoveSet{MoveKind::R3StrongContract, MoveKind::R3StrongExpand};
  }
  static constexpr MoveSet weak() { return r1() | MoveSet{MoveKind::R3Weak}; }
  static constexpr MoveSet all() { return strong() | weak(); }

 private:
  static constexpr std::uint8_t bit(MoveKind kind) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(kind));
  }
  std::uint8_t bits_ = 0;
};

// Parses "strong", "weak", "both" or "r1".
std::optional<MoveSet> move_family_from_string(std::string_view text);

struct MoveSite {
  MoveKind kind = MoveKind::R1Add;
  // The deleted label for R1Del; the three triangle labels, sorted, for
  // third moves; empty for R1Add.
  std::vector<Label> letters;
  // Triangle sides: start positions of three disjoint cyclic factors of
  // length two, sorted.
  std::vector<std::size_t> side_factors;
  // Insertion point for R1Add: the new letters go before position `slot`.
  std::size_t slot = 0;
  // Interleaved pairs among the three triangle chords.
  int internal_crossings = 0;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string describe(const MoveSite& site);

class MoveError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// R1Del sites for labels with cyclically adjacent occurrences, then one
// R1Add site per inter-letter slot (a single slot for the empty word).
std::vector<MoveSite> find_r1_sites(const Word& word);

// One site per set of three pairwise-disjoint cyclic factors reading
// {ab, bc, ca} in some letter order. A triple can carry two sites (both
// triangular faces of the trefoil, for instance).
std::vector<MoveSite> find_triangles(const Word& word);

// All R1 and triangle sites.
std::vector<MoveSite> find_sites(const Word& word);

// Word-level coherent 2-gons: pairs {a, b} with disjoint cyclic factors
// "ab" and "ba", whose sides run around the bigon in one direction.
std::vector<std::pair<Label, Label>> find_coherent_bigons(const Word& word);

// Applies the move. R1Add uses label n for the new crossing. The result is
// re-checked: it must be sphere-realizable and the cross chord number must
// change by 0 (R1), ±3 (strong) or ±1 (weak), else MoveError.
Word apply(const Word& word, const MoveSite& site);

// Same rewrite without the post-checks.
Word apply_unchecked(const Word& word, const MoveSite& site);

struct Neighbor {
  Word word;  // canonical
  MoveKind kind;
  MoveSite site;
};

// Canonical results of every allowed move, deduplicated on (word, kind) and
// sorted. R1Add is skipped when the result would exceed `max_crossings`.
std::vector<Neighbor> neighbors(const Word& word, MoveSet allowed,
                                std::size_t max_crossings = SIZE_MAX);

}  // namespace knotproj
