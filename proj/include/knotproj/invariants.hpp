#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "knotproj/word.hpp"

namespace knotproj {

// Chord a interleaves chord b when exactly one occurrence of b lies strictly
// between the two occurrences of a.
bool interleaved(const Word& word, Label a, Label b);

// Vertices are chord labels; an edge joins every pair of interleaved chords.
class InterlacementGraph {
 public:
  explicit InterlacementGraph(const Word& word);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  bool adjacent(Label a, Label b) const {
    return (adjacency_[a] >> b) & 1u;
  }
  std::uint64_t neighbours(Label v) const { return adjacency_[v]; }
  std::vector<std::pair<Label, Label>> edges() const;

 private:
  std::vector<std::uint64_t> adjacency_;
  std::size_t edges_ = 0;
};

InterlacementGraph interlacement(const Word& word);

// Number of interleaved chord pairs.
std::size_t cross_chord_number(const Word& word);

// Exact minimum vertex cover of the graph, returned as a vertex bitmask.
std::uint64_t minimum_vertex_cover(const InterlacementGraph& graph);

// Fewest chords whose deletion leaves no cross chords. Throws
// ConsistencyError if the count is odd, which cannot happen for a
// sphere-realizable word.
std::size_t trivializing_number(const Word& word);

// Whether some chord crosses two chords that do not cross each other.
bool has_h_chord(const InterlacementGraph& graph);
// Whether every connected component of the graph is a clique.
bool is_clique_union(const InterlacementGraph& graph);

// 1 if the chord diagram contains the H sub-diagram. Computes both
// characterizations above and throws ConsistencyError if they disagree.
int h_invariant(const Word& word);

// Deletes isolated chords (cyclically adjacent equal letters) until none
// remain; returns the canonical form of the result.
Word reduce_r1(const Word& word);

// Number of prime factors equal to the trefoil word once curls are removed.
std::size_t trefoil_summand_count(const Word& word);

struct InvariantReport {
  std::size_t n = 0;
  std::size_t x = 0;
  int x_mod3 = 0;
  std::size_t tr = 0;
  int h = 0;
  Word reduced_word;
  std::size_t trefoil_summands = 0;

  friend bool operator==(const InvariantReport&,
                         const InvariantReport&) = default;
};

// Expects a sphere-realizable word (the trivializing number check fails
// otherwise).
InvariantReport compute_invariants(const Word& word);

}  // namespace knotproj
