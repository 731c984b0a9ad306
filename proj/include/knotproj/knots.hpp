#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "knotproj/embedding.hpp"
#include "knotproj/laurent.hpp"
#include "knotproj/word.hpp"

namespace knotproj {

// A projection with over/under data at every crossing.
//
// Sign convention: a crossing is positive when the outgoing over-strand,
// turned a quarter counterclockwise, points along the outgoing under-strand.
// "Counterclockwise" is the cyclic order given by rotation_at. Flipping that
// orientation mirrors every diagram, which leaves the determinant alone.
struct SignedDiagram {
  Word word;
  RotationChoice embedding;
  // 1 when the first passage through the crossing (in word order) is over.
  std::vector<std::uint8_t> over_first;
  std::vector<int> sign;  // +1 or -1 per crossing

  int writhe() const;

  friend bool operator==(const SignedDiagram&, const SignedDiagram&) = default;
};

int crossing_sign(const Word& word, const RotationChoice& embedding,
                  Label label, bool over_first);

// Builds the diagram with the given over/under choice and computes signs.
SignedDiagram make_diagram(const Word& word, const RotationChoice& embedding,
                           std::vector<std::uint8_t> over_first);

// Makes every crossing positive.
SignedDiagram positive_resolution(const KnotProjection& projection);

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBracketCap = 16;

// Number of loops in the state that smooths crossing i with an A-smoothing
// when bit i of `state` is 0 and a B-smoothing otherwise.
std::size_t state_loops(const SignedDiagram& diagram, std::uint64_t state);

// Kauffman bracket in the variable A, normalized so that the crossingless
// circle is 1.
LaurentPoly kauffman_bracket(const SignedDiagram& diagram,
                             std::size_t cap = kDefaultBracketCap);

// (-A^3)^(-writhe) times the bracket: the Jones polynomial with t = A^-4.
LaurentPoly jones_normalized(const SignedDiagram& diagram,
                             std::size_t cap = kDefaultBracketCap);

// |V(-1)|, always odd for a knot.
std::uint64_t determinant(const SignedDiagram& diagram,
                          std::size_t cap = kDefaultBracketCap);

// Same value read off a normalized bracket.
std::uint64_t determinant_of(const LaurentPoly& normalized);

}  // namespace knotproj
