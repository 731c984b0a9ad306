#include "knotproj/knots.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace knotproj {

int SignedDiagram::writhe() const {
  return std::accumulate(sign.begin(), sign.end(), 0);
}

int crossing_sign(const Word& word, const RotationChoice& embedding,
                  Label label, bool over_first) {
  (void)word;
  // bit 0 puts out_p right before in_q and out_q right before out_p; bit 1
  // puts out_p right before out_q.
  const bool bit = embedding.bits.at(label) != 0;
  return over_first == bit ? 1 : -1;
}

SignedDiagram make_diagram(const Word& word, const RotationChoice& embedding,
                           std::vector<std::uint8_t> over_first) {
  if (over_first.size() != word.crossings() ||
      embedding.bits.size() != word.crossings()) {
    throw std::invalid_argument("diagram data does not match the word");
  }
  SignedDiagram diagram{word, embedding, std::move(over_first), {}};
  diagram.sign.reserve(word.crossings());
  for (Label label = 0; label < word.crossings(); ++label) {
    diagram.sign.push_back(
        crossing_sign(word, embedding, label, diagram.over_first[label] != 0));
  }
  return diagram;
}

SignedDiagram positive_resolution(const KnotProjection& projection) {
  const auto& bits = projection.embedding().bits;
  std::vector<std::uint8_t> over_first(bits.begin(), bits.end());
  return make_diagram(projection.word(), projection.embedding(),
                      std::move(over_first));
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

void check_cap(const SignedDiagram& diagram, std::size_t cap) {
  if (diagram.word.crossings() > cap) {
    throw CapExceededError("bracket needs " +
                           std::to_string(diagram.word.crossings()) +
                           " crossings, cap is " + std::to_string(cap));
  }
}

}  // namespace

std::size_t state_loops(const SignedDiagram& diagram, std::uint64_t state) {
  const Word& word = diagram.word;
  if (word.empty()) return 1;
  const std::size_t darts = 2 * word.size();
  DisjointSets sets(darts);
  std::size_t components = darts;
  for (HalfEdge h = 0; h < darts; h += 2) {
    components -= sets.unite(h, opposite_end(h));
  }
  for (Label label = 0; label < word.crossings(); ++label) {
    const auto rot = rotation_at(word, diagram.embedding, label);
    // rot[0] and rot[2] belong to the first passage.
    const bool over_even = diagram.over_first[label] != 0;
    const bool a_smoothing = ((state >> label) & 1u) == 0;
    // The A-regions are the corners swept when the over-strand turns
    // counterclockwise; an A-smoothing merges them, so the strands that
    // remain joined bound the other two corners.
    const bool join_01 = over_even != a_smoothing;
    if (join_01) {
      components -= sets.unite(rot[0], rot[1]);
      components -= sets.unite(rot[2], rot[3]);
    } else {
      components -= sets.unite(rot[1], rot[2]);
      components -= sets.unite(rot[3], rot[0]);
    }
  }
  return components;
}

LaurentPoly kauffman_bracket(const SignedDiagram& diagram, std::size_t cap) {
  check_cap(diagram, cap);
  const std::size_t n = diagram.word.crossings();
  // Tally states by (#A - #B, loops) before expanding powers of delta.
  std::map<std::pair<int, std::size_t>, std::int64_t> tally;
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t state = 0; state < states; ++state) {
    const int b_count = std::popcount(state);
    const int a_minus_b = static_cast<int>(n) - 2 * b_count;
    ++tally[{a_minus_b, state_loops(diagram, state)}];
  }
  const LaurentPoly delta =
      LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  LaurentPoly result;
  for (const auto& [key, count] : tally) {
    const auto& [exponent, loops] = key;
    result += LaurentPoly::monomial(count, exponent) *
              delta.pow(static_cast<unsigned>(loops - 1));
  }
  return result;
}

LaurentPoly jones_normalized(const SignedDiagram& diagram, std::size_t cap) {
  const int w = diagram.writhe();
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const LaurentPoly factor = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return factor * kauffman_bracket(diagram, cap);
}

std::uint64_t determinant_of(const LaurentPoly& normalized) {
  std::int64_t value = 0;
  for (const auto& [exponent, coefficient] : normalized.terms()) {
    if (exponent % 4 != 0) {
      throw ConsistencyError("normalized bracket has exponent " +
                             std::to_string(exponent) +
                             " not divisible by 4");
    }
    // A^(4k) = t^(-k) and t = -1.
    value += (exponent / 4) % 2 == 0 ? coefficient : -coefficient;
  }
  return static_cast<std::uint64_t>(value < 0 ? -value : value);
}

std::uint64_t determinant(const SignedDiagram& diagram, std::size_t cap) {
  return determinant_of(jones_normalized(diagram, cap));
}

}  // namespace knotproj
