#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "knotproj/word.hpp"

namespace knotproj {

// A proper cyclic interval [start, start + length) whose labels all have both
// occurrences inside it, i.e. a point where the word splits as u·v with u, v
// nonempty and label-disjoint. Returns the first one found scanning starts in
// increasing order and lengths increasing.
std::optional<std::pair<std::size_t, std::size_t>> find_split(const Word& word);

bool is_prime(const Word& word);

// Canonical prime factors, sorted. The empty word has no factors.
std::vector<Word> prime_decompose(const Word& word);

// Splices v (relabeled past u's labels, rotated to start at slot_v) into u
// at slot_u. slot_u ranges over [0, |u|], slot_v over [0, max(|v|, 1)).
Word connected_sum(const Word& u, const Word& v, std::size_t slot_u = 0,
                   std::size_t slot_v = 0);

// Canonical forms of every connected sum of u and v over all splice points
// and both relative orientations, sorted and deduplicated.
std::vector<Word> connected_sum_variants(const Word& u, const Word& v);

}  // namespace knotproj
