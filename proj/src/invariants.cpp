#include "knotproj/invariants.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "knotproj/decompose.hpp"

namespace knotproj {

bool interleaved(const Word& word, Label a, Label b) {
  const auto [a0, a1] = word.occurrences(a);
  const auto [b0, b1] = word.occurrences(b);
  const bool first_inside = a0 < b0 && b0 < a1;
  const bool second_inside = a0 < b1 && b1 < a1;
  return first_inside != second_inside;
}

InterlacementGraph::InterlacementGraph(const Word& word)
    : adjacency_(word.crossings(), 0) {
  const std::size_t n = word.crossings();
  if (n > 64) throw std::invalid_argument("interlacement limited to 64 chords");
  // Sweep positions keeping the set of open chords; closing chord c
  // interleaves exactly the chords opened after c and still open.
  std::vector<std::size_t> open_order;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const Label label = word[pos];
    const auto [first, second] = word.occurrences(label);
    if (pos == first) {
      open_order.push_back(label);
      continue;
    }
    (void)second;
    auto it = std::find(open_order.begin(), open_order.end(), label);
    for (auto later = it + 1; later != open_order.end(); ++later) {
      adjacency_[label] |= std::uint64_t{1} << *later;
      adjacency_[*later] |= std::uint64_t{1} << label;
      ++edges_;
    }
    open_order.erase(it);
  }
}

std::vector<std::pair<Label, Label>> InterlacementGraph::edges() const {
  std::vector<std::pair<Label, Label>> out;
  for (Label a = 0; a < vertex_count(); ++a) {
    for (Label b = a + 1; b < vertex_count(); ++b) {
      if (adjacent(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

InterlacementGraph interlacement(const Word& word) {
  return InterlacementGraph(word);
}

std::size_t cross_chord_number(const Word& word) {
  return InterlacementGraph(word).edge_count();
}

namespace {

class VertexCoverSearch {
 public:
  explicit VertexCoverSearch(const InterlacementGraph& graph) : graph_(graph) {}

  std::uint64_t run() {
    std::uint64_t all = 0;
    for (Label v = 0; v < graph_.vertex_count(); ++v) {
      all |= std::uint64_t{1} << v;
    }
    best_ = greedy(all);
    best_size_ = std::popcount(best_);
    branch(all, 0);
    return best_;
  }

 private:
  int degree(Label v, std::uint64_t alive) const {
    return std::popcount(graph_.neighbours(v) & alive);
  }

  std::uint64_t greedy(std::uint64_t alive) const {
    std::uint64_t cover = 0;
    while (true) {
      int best_degree = 0;
      Label pick = 0;
      for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
        const auto v = static_cast<Label>(std::countr_zero(rest));
        const int d = degree(v, alive);
        if (d > best_degree) {
          best_degree = d;
          pick = v;
        }
      }
      if (best_degree == 0) return cover;
      cover |= std::uint64_t{1} << pick;
      alive &= ~(std::uint64_t{1} << pick);
    }
  }

  // Size of a greedy maximal matching: every cover needs one endpoint of
  // each matched edge.
  int matching_bound(std::uint64_t alive) const {
    int bound = 0;
    for (std::uint64_t rest = alive; rest;) {
      const auto v = static_cast<Label>(std::countr_zero(rest));
      rest &= ~(std::uint64_t{1} << v);
      const std::uint64_t nb = graph_.neighbours(v) & rest;
      if (nb) {
        rest &= ~(std::uint64_t{1} << std::countr_zero(nb));
        ++bound;
      }
    }
    return bound;
  }

  void branch(std::uint64_t alive, std::uint64_t chosen) {
    const int size = std::popcount(chosen);
    if (size + matching_bound(alive) >= best_size_) return;
    int best_degree = 0;
    Label pivot = 0;
    for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
      const auto v = static_cast<Label>(std::countr_zero(rest));
      const int d = degree(v, alive);
      if (d == 1) {
        // Taking the neighbour of a leaf is never worse.
        const std::uint64_t nb = graph_.neighbours(v) & alive;
        branch(alive & ~nb, chosen | nb);
        return;
      }
      if (d > best_degree) {
        best_degree = d;
        pivot = v;
      }
    }
    if (best_degree == 0) {
      best_ = chosen;
      best_size_ = size;
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << pivot;
    branch(alive & ~bit, chosen | bit);
    const std::uint64_t nb = graph_.neighbours(pivot) & alive;
    branch(alive & ~(nb | bit), chosen | nb);
  }

  const InterlacementGraph& graph_;
  std::uint64_t best_ = 0;
  int best_size_ = 0;
};

}  // namespace

std::uint64_t minimum_vertex_cover(const InterlacementGraph& graph) {
  return VertexCoverSearch(graph).run();
}

std::size_t trivializing_number(const Word& word) {
  const auto cover = minimum_vertex_cover(InterlacementGraph(word));
  const auto tr = static_cast<std::size_t>(std::popcount(cover));
  if (tr % 2 != 0) {
    throw ConsistencyError("odd trivializing number " + std::to_string(tr) +
                           " for " + word.to_string() +
                           "; the word is not a spherical curve");
  }
  return tr;
}

bool has_h_chord(const InterlacementGraph& graph) {
  for (Label a = 0; a < graph.vertex_count(); ++a) {
    const std::uint64_t nb = graph.neighbours(a);
    for (std::uint64_t rest = nb; rest; rest &= rest - 1) {
      const auto b = static_cast<Label>(std::countr_zero(rest));
      // Some other neighbour of a that b does not cross.
      const std::uint64_t others = nb & ~(std::uint64_t{1} << b);
      if (others & ~graph.neighbours(b)) return true;
    }
  }
  return false;
}

bool is_clique_union(const InterlacementGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<int> component(n, -1);
  for (Label root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    std::uint64_t members = std::uint64_t{1} << root;
    std::uint64_t frontier = members;
    while (frontier) {
      const auto v = static_cast<Label>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      const std::uint64_t fresh = graph.neighbours(v) & ~members;
      members |= fresh;
      frontier |= fresh;
    }
    for (std::uint64_t rest = members; rest; rest &= rest - 1) {
      const auto v = static_cast<Label>(std::countr_zero(rest));
      component[v] = static_cast<int>(root);
      const std::uint64_t self = std::uint64_t{1} << v;
      if ((graph.neighbours(v) | self) != members) return false;
    }
  }
  return true;
}

int h_invariant(const Word& word) {
  const InterlacementGraph graph(word);
  const bool pattern = has_h_chord(graph);
  const bool clusters = is_clique_union(graph);
  if (pattern == clusters) {
    throw ConsistencyError("H sub-chord search and clique-union test disagree on " +
                           word.to_string());
  }
  return pattern ? 1 : 0;
}

Word reduce_r1(const Word& word) {
  std::vector<Label> letters(word.letters().begin(), word.letters().end());
  bool changed = true;
  while (changed && !letters.empty()) {
    changed = false;
    const std::size_t len = letters.size();
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t j = (i + 1) % len;
      if (letters[i] == letters[j]) {
        const Label label = letters[i];
        std::erase(letters, label);
        changed = true;
        break;
      }
    }
  }
  return canonicalize(Word::compacted(letters));
}

std::size_t trefoil_summand_count(const Word& word) {
  std::size_t count = 0;
  for (const auto& factor : prime_decompose(reduce_r1(word))) {
    count += factor == trefoil_word();
  }
  return count;
}

InvariantReport compute_invariants(const Word& word) {
  InvariantReport report;
  report.n = word.crossings();
  report.x = cross_chord_number(word);
  report.x_mod3 = static_cast<int>(report.x % 3);
  report.tr = trivializing_number(word);
  report.h = h_invariant(word);
  report.reduced_word = reduce_r1(word);
  report.trefoil_summands = trefoil_summand_count(word);
  return report;
}

}  // namespace knotproj
