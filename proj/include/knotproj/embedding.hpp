#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "knotproj/word.hpp"

namespace knotproj {

// Half-edges of the 4-regular graph underlying a word of length 2n.
// Edge e runs from position e to position e+1 (mod 2n); half-edge 2e is its
// start, 2e+1 its end. A half-edge names the dart that leaves its vertex
// along its edge, so 2e traverses e forwards and 2e+1 backwards.
using HalfEdge = std::size_t;

constexpr HalfEdge opposite_end(HalfEdge h) noexcept { return h ^ 1u; }
constexpr std::size_t edge_of(HalfEdge h) noexcept { return h >> 1; }
constexpr bool is_forward(HalfEdge h) noexcept { return (h & 1u) == 0; }

inline HalfEdge outgoing_at(std::size_t pos) { return 2 * pos; }
inline HalfEdge incoming_at(std::size_t pos, std::size_t len) {
  return 2 * ((pos + len - 1) % len) + 1;
}

// One bit per crossing. Transversality fixes the strands to alternate around
// the vertex; the bit picks which of the two remaining cyclic orders is used.
//   bit 0: in_p, out_q, out_p, in_q      bit 1: in_p, in_q, out_p, out_q
// where p and q are the first and second occurrence of the crossing.
struct RotationChoice {
  std::vector<std::uint8_t> bits;

  friend bool operator==(const RotationChoice&,
                         const RotationChoice&) = default;
};

// Cyclic order of the four half-edges at a crossing.
std::array<HalfEdge, 4> rotation_at(const Word& word,
                                    const RotationChoice& choice, Label label);

struct Face {
  std::size_t length = 0;
  // Darts around the face, in tracing order.
  std::vector<HalfEdge> boundary;
  // Every side traversed in the direction of the curve (or every side
  // against it).
  bool coherent = false;
};

struct FaceInventory {
  std::vector<Face> faces;

  std::size_t count_of_length(std::size_t length) const;
  std::size_t total_length() const;
};

class NotRealizableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of faces traced by the combinatorial map; 2 for the empty word.
std::size_t face_count(const Word& word, const RotationChoice& choice);

// First rotation choice (bits read as a binary number, crossing 0 least
// significant) whose map has n + 2 faces, i.e. lies on the sphere.
std::optional<RotationChoice> realize(const Word& word);

bool is_realizable(const Word& word);

// Throws NotRealizableError if `choice` does not embed the word in S^2.
FaceInventory faces(const Word& word, const RotationChoice& choice);

// For each half-edge, the index of the face it bounds in `inventory`.
std::vector<std::size_t> face_index_of_half_edges(const Word& word,
                                                  const FaceInventory& inventory);

// A sphere-realizable word together with its chosen embedding.
class KnotProjection {
 public:
  // Throws NotRealizableError when the word has no sphere embedding.
  explicit KnotProjection(Word word);

  const Word& word() const noexcept { return word_; }
  const RotationChoice& embedding() const noexcept { return embedding_; }
  const Word& canonical() const noexcept { return canonical_; }
  std::size_t crossings() const noexcept { return word_.crossings(); }

 private:
  Word word_;
  RotationChoice embedding_;
  Word canonical_;
};

}  // namespace knotproj
