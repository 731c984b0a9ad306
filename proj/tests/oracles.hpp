#pragma once

// Slow, independent re-implementations used only to check the library.
// None of these call the library's algorithms beyond the Word container.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "knotproj/knots.hpp"
#include "knotproj/word.hpp"

namespace oracle {

using knotproj::Label;
using knotproj::Word;

inline bool crosses(const Word& w, Label a, Label b) {
  std::size_t a0 = w.size(), a1 = 0, b0 = w.size(), b1 = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == a) { a0 = std::min(a0, i); a1 = std::max(a1, i); }
    if (w[i] == b) { b0 = std::min(b0, i); b1 = std::max(b1, i); }
  }
  return (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
}

inline std::size_t cross_count(const Word& w) {
  std::size_t count = 0;
  for (Label a = 0; a < w.crossings(); ++a)
    for (Label b = a + 1; b < w.crossings(); ++b) count += crosses(w, a, b);
  return count;
}

// Smallest number of chords whose removal leaves no crossing pair, by
// trying every subset.
inline std::size_t min_deletion(const Word& w) {
  const std::size_t n = w.crossings();
  std::vector<std::pair<Label, Label>> pairs;
  for (Label a = 0; a < n; ++a)
    for (Label b = a + 1; b < n; ++b)
      if (crosses(w, a, b)) pairs.emplace_back(a, b);
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool covers = true;
    for (auto [a, b] : pairs) {
      if (!((mask >> a) & 1u) && !((mask >> b) & 1u)) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

// Three chords a, b, c with a crossing both b and c while b, c do not cross.
inline int h_by_triples(const Word& w) {
  const std::size_t n = w.crossings();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = b + 1; c < n; ++c)
        if (a != b && a != c && crosses(w, a, b) && crosses(w, a, c) &&
            !crosses(w, b, c))
          return 1;
  return 0;
}

// Every double occurrence word on n letters, labels in first-occurrence
// order (so (2n-1)!! of them).
inline void all_words_rec(std::size_t n, std::vector<int>& letters,
                          std::size_t next, std::vector<Word>& out) {
  const auto pos = std::find(letters.begin(), letters.end(), -1);
  if (pos == letters.end()) {
    out.emplace_back(std::vector<Label>(letters.begin(), letters.end()));
    return;
  }
  *pos = static_cast<int>(next);
  for (auto partner = pos + 1; partner != letters.end(); ++partner) {
    if (*partner != -1) continue;
    *partner = static_cast<int>(next);
    all_words_rec(n, letters, next + 1, out);
    *partner = -1;
  }
  *pos = -1;
}

inline std::vector<Word> all_words(std::size_t n) {
  std::vector<int> letters(2 * n, -1);
  std::vector<Word> out;
  all_words_rec(n, letters, 0, out);
  return out;
}

// Canonical representative by listing every rotation and reflection as a
// relabeled string.
inline std::vector<Label> naive_canonical(const Word& w) {
  const std::size_t len = w.size();
  std::vector<Label> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < len; ++s) {
      std::vector<Label> seq;
      for (std::size_t k = 0; k < len; ++k) {
        seq.push_back(dir == 0 ? w[(s + k) % len] : w[(s + len - k) % len]);
      }
      std::vector<Label> map(w.crossings(), Label(-1));
      Label next = 0;
      for (auto& x : seq) {
        if (map[x] == Label(-1)) map[x] = next++;
        x = map[x];
      }
      if (best.empty() || seq < best) best = seq;
    }
  }
  return best;
}

// Rotation systems built directly from the curve: each crossing has four
// darts (position p or q, leaving forwards or backwards). A face walk uses
// the inverse rotation, so this traces the faces of the mirror map, which
// has the same count.
inline std::size_t faces_for_mask(const Word& w, std::uint64_t mask) {
  const std::size_t len = w.size();
  // dart 2p: leave position p forwards; dart 2p+1: leave position p backwards.
  std::vector<std::size_t> prev_in_rotation(2 * len);
  for (Label c = 0; c < w.crossings(); ++c) {
    std::size_t p = len, q = len;
    for (std::size_t i = 0; i < len; ++i) {
      if (w[i] == c) (p == len ? p : q) = i;
    }
    const std::size_t fp = 2 * p, bp = 2 * p + 1, fq = 2 * q, bq = 2 * q + 1;
    std::vector<std::size_t> ccw;
    if ((mask >> c) & 1u) ccw = {bp, bq, fp, fq};
    else ccw = {bp, fq, fp, bq};
    for (int i = 0; i < 4; ++i) prev_in_rotation[ccw[(i + 1) % 4]] = ccw[i];
  }
  // Walking dart d to the far end gives the dart pointing back.
  auto arrive = [&](std::size_t d) {
    const std::size_t p = d / 2;
    return (d % 2 == 0) ? 2 * ((p + 1) % len) + 1 : 2 * ((p + len - 1) % len);
  };
  std::vector<char> seen(2 * len, 0);
  std::size_t count = 0;
  for (std::size_t d = 0; d < 2 * len; ++d) {
    if (seen[d]) continue;
    ++count;
    for (std::size_t e = d; !seen[e]; e = prev_in_rotation[arrive(e)]) seen[e] = 1;
  }
  return count;
}

inline bool realizable(const Word& w) {
  const std::size_t n = w.crossings();
  if (n == 0) return true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (faces_for_mask(w, mask) == n + 2) return true;
  }
  return false;
}

// Fraction-free Gaussian elimination.
inline long long bareiss_det(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Determinant of the knot from a Goeritz matrix of the diagram. Faces are
// traced from the diagram's rotation data, checkerboard coloured, and each
// crossing contributes +-1 between the two shaded faces meeting at it,
// according to whether those corners are the ones the over-strand sweeps
// turning counterclockwise.
inline long long goeritz_determinant(const knotproj::SignedDiagram& d) {
  const Word& w = d.word;
  const std::size_t len = w.size();
  if (len == 0) return 1;
  // Half-edge numbering as in the library: 2e leaves the start of edge e,
  // 2e+1 leaves its end. Rotation lists are rebuilt here from the bits.
  std::vector<std::array<std::size_t, 4>> rot(w.crossings());
  std::vector<std::size_t> succ(2 * len);
  for (Label c = 0; c < w.crossings(); ++c) {
    const auto [p, q] = w.occurrences(c);
    const std::size_t in_p = 2 * ((p + len - 1) % len) + 1, out_p = 2 * p;
    const std::size_t in_q = 2 * ((q + len - 1) % len) + 1, out_q = 2 * q;
    rot[c] = d.embedding.bits[c] ? std::array{in_p, in_q, out_p, out_q}
                                 : std::array{in_p, out_q, out_p, in_q};
    for (int i = 0; i < 4; ++i) succ[rot[c][i]] = rot[c][(i + 1) % 4];
  }
  std::vector<std::size_t> face(2 * len, std::size_t(-1));
  std::size_t faces = 0;
  for (std::size_t h = 0; h < 2 * len; ++h) {
    if (face[h] != std::size_t(-1)) continue;
    for (std::size_t g = h; face[g] == std::size_t(-1); g = succ[g ^ 1u]) face[g] = faces;
    ++faces;
  }
  // Faces on the two sides of an edge get opposite colours.
  std::vector<int> colour(faces, -1);
  colour[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < len; ++e) {
      const std::size_t f = face[2 * e], g = face[2 * e + 1];
      if (colour[f] >= 0 && colour[g] < 0) { colour[g] = 1 - colour[f]; changed = true; }
      if (colour[g] >= 0 && colour[f] < 0) { colour[f] = 1 - colour[g]; changed = true; }
    }
  }
  std::vector<std::size_t> shaded;
  for (std::size_t f = 0; f < faces; ++f) if (colour[f] == 0) shaded.push_back(f);
  auto index_of = [&](std::size_t f) {
    return static_cast<std::size_t>(
        std::find(shaded.begin(), shaded.end(), f) - shaded.begin());
  };
  const std::size_t m = shaded.size();
  std::vector<std::vector<long long>> g(m, std::vector<long long>(m, 0));
  for (Label c = 0; c < w.crossings(); ++c) {
    const auto& x = rot[c];
    // Corner (x_i, x_{i+1}) lies in the face of x_{i+1}.
    auto corner_face = [&](int i) { return face[x[(i + 1) % 4]]; };
    const int first = colour[corner_face(0)] == 0 ? 0 : 1;
    const std::size_t f1 = corner_face(first), f2 = corner_face(first + 2);
    // The first passage holds slots 0 and 2; turning it counterclockwise
    // sweeps corners 0 and 2, otherwise the over-strand sweeps 1 and 3.
    const int swept = d.over_first[c] ? 0 : 1;
    const long long eta = first == swept ? 1 : -1;
    if (f1 == f2) continue;
    const std::size_t i = index_of(f1), j = index_of(f2);
    g[i][j] -= eta;
    g[j][i] -= eta;
    g[i][i] += eta;
    g[j][j] += eta;
  }
  std::vector<std::vector<long long>> minor(m - 1, std::vector<long long>(m - 1));
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j < m; ++j) minor[i - 1][j - 1] = g[i][j];
  return std::llabs(bareiss_det(minor));
}

}  // namespace oracle
