#include "knotproj/embedding.hpp"

#include <algorithm>

namespace knotproj {

std::array<HalfEdge, 4> rotation_at(const Word& word,
                                    const RotationChoice& choice,
                                    Label label) {
  const auto [p, q] = word.occurrences(label);
  const std::size_t len = word.size();
  const HalfEdge in_p = incoming_at(p, len);
  const HalfEdge out_p = outgoing_at(p);
  const HalfEdge in_q = incoming_at(q, len);
  const HalfEdge out_q = outgoing_at(q);
  if (choice.bits[label] == 0) return {in_p, out_q, out_p, in_q};
  return {in_p, in_q, out_p, out_q};
}

namespace {

// next[h] = successor of h in the rotation at its vertex.
std::vector<HalfEdge> rotation_successor(const Word& word,
                                         const RotationChoice& choice) {
  std::vector<HalfEdge> next(2 * word.size());
  for (Label label = 0; label < word.crossings(); ++label) {
    const auto rot = rotation_at(word, choice, label);
    for (std::size_t i = 0; i < 4; ++i) next[rot[i]] = rot[(i + 1) % 4];
  }
  return next;
}

// Faces are the orbits of h -> next(opposite_end(h)): walk along the edge,
// then turn to the next half-edge around the vertex reached.
template <typename Visit>
std::size_t trace_orbits(const std::vector<HalfEdge>& next, Visit&& visit) {
  std::vector<std::uint8_t> seen(next.size(), 0);
  std::size_t orbits = 0;
  for (HalfEdge start = 0; start < next.size(); ++start) {
    if (seen[start]) continue;
    HalfEdge h = start;
    while (!seen[h]) {
      seen[h] = 1;
      visit(orbits, h);
      h = next[opposite_end(h)];
    }
    ++orbits;
  }
  return orbits;
}

void check_choice(const Word& word, const RotationChoice& choice) {
  if (choice.bits.size() != word.crossings()) {
    throw std::invalid_argument("rotation choice has wrong number of bits");
  }
}

}  // namespace

std::size_t face_count(const Word& word, const RotationChoice& choice) {
  check_choice(word, choice);
  if (word.empty()) return 2;
  return trace_orbits(rotation_successor(word, choice),
                      [](std::size_t, HalfEdge) {});
}

std::optional<RotationChoice> realize(const Word& word) {
  const std::size_t n = word.crossings();
  if (n == 0) return RotationChoice{};
  if (n > 30) throw std::invalid_argument("too many crossings to realize");
  // Complementing every bit mirrors the embedding without changing the face
  // count, so the first realizing mask always has its top bit clear.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  RotationChoice choice;
  choice.bits.assign(n, 0);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    for (std::size_t i = 0; i < n; ++i) choice.bits[i] = (mask >> i) & 1u;
    if (face_count(word, choice) == n + 2) return choice;
  }
  return std::nullopt;
}

bool is_realizable(const Word& word) { return realize(word).has_value(); }

std::size_t FaceInventory::count_of_length(std::size_t length) const {
  std::size_t count = 0;
  for (const auto& face : faces) count += face.length == length;
  return count;
}

std::size_t FaceInventory::total_length() const {
  std::size_t total = 0;
  for (const auto& face : faces) total += face.length;
  return total;
}

FaceInventory faces(const Word& word, const RotationChoice& choice) {
  check_choice(word, choice);
  FaceInventory inventory;
  if (word.empty()) {
    inventory.faces.resize(2);
    return inventory;
  }
  trace_orbits(rotation_successor(word, choice),
               [&](std::size_t orbit, HalfEdge h) {
                 if (orbit == inventory.faces.size()) {
                   inventory.faces.emplace_back();
                 }
                 inventory.faces[orbit].boundary.push_back(h);
               });
  if (inventory.faces.size() != word.crossings() + 2) {
    throw NotRealizableError("rotation choice does not embed " +
                             word.to_string() + " in the sphere");
  }
  for (auto& face : inventory.faces) {
    face.length = face.boundary.size();
    const bool first = is_forward(face.boundary.front());
    face.coherent = std::all_of(
        face.boundary.begin(), face.boundary.end(),
        [first](HalfEdge h) { return is_forward(h) == first; });
  }
  return inventory;
}

std::vector<std::size_t> face_index_of_half_edges(
    const Word& word, const FaceInventory& inventory) {
  std::vector<std::size_t> index(2 * word.size());
  for (std::size_t f = 0; f < inventory.faces.size(); ++f) {
    for (HalfEdge h : inventory.faces[f].boundary) index[h] = f;
  }
  return index;
}

KnotProjection::KnotProjection(Word word) : word_(std::move(word)) {
  auto choice = realize(word_);
  if (!choice) {
    throw NotRealizableError(word_.to_string() + " is not realizable on S²");
  }
  embedding_ = std::move(*choice);
  canonical_ = canonicalize(word_);
}

}  // namespace knotproj
