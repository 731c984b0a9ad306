#include "knotproj/explore.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "knotproj/decompose.hpp"
#include "knotproj/embedding.hpp"
#include "knotproj/invariants.hpp"
#include "knotproj/knots.hpp"

namespace knotproj {

namespace {

// All words of length 2n whose labels appear in first-occurrence order;
// each chord diagram on 2n marked points appears exactly once.
void for_each_normalized_word(std::size_t n,
                              const std::function<void(const Word&)>& visit) {
  std::vector<Label> letters;
  letters.reserve(2 * n);
  std::vector<Label> open;
  Label next = 0;
  std::function<void()> extend = [&]() {
    if (letters.size() == 2 * n) {
      visit(Word(letters));
      return;
    }
    const std::size_t remaining = 2 * n - letters.size();
    if (open.size() < remaining && next < n) {
      letters.push_back(next);
      open.push_back(next);
      ++next;
      extend();
      --next;
      open.pop_back();
      letters.pop_back();
    }
    for (std::size_t i = 0; i < open.size(); ++i) {
      const Label label = open[i];
      letters.push_back(label);
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
      extend();
      open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), label);
      letters.pop_back();
    }
  };
  extend();
}

}  // namespace

std::vector<Word> enumerate_canonical_words(std::size_t n) {
  std::vector<Word> out;
  for_each_normalized_word(n, [&](const Word& word) {
    if (is_canonical(word)) out.push_back(word);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_realizable(std::size_t n_max) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (auto& word : enumerate_canonical_words(n)) {
      if (is_realizable(word)) out.push_back(std::move(word));
    }
  }
  return out;
}

SearchTree bfs_tree(const Word& start, const SearchConfig& config) {
  SearchTree tree;
  std::unordered_map<Word, std::size_t, WordHash> index;
  const Word root = canonicalize(start);
  tree.states.push_back({root, std::nullopt, std::nullopt, 0});
  index.emplace(root, 0);
  std::optional<std::mt19937_64> rng;
  if (config.shuffle_seed) rng.emplace(*config.shuffle_seed);
  for (std::size_t cursor = 0; cursor < tree.states.size(); ++cursor) {
    const std::size_t depth = tree.states[cursor].depth;
    if (config.max_depth && depth >= *config.max_depth) continue;
    const Word current = tree.states[cursor].word;
    auto step = neighbors(current, config.allowed, config.max_crossings);
    if (rng) std::shuffle(step.begin(), step.end(), *rng);
    for (auto& next : step) {
      if (next.word.crossings() > config.max_crossings) continue;
      if (index.contains(next.word)) continue;
      if (tree.states.size() >= config.max_states) {
        tree.complete = false;
        return tree;
      }
      index.emplace(next.word, tree.states.size());
      Word word = next.word;
      tree.states.push_back({std::move(word), cursor, std::move(next),
                             depth + 1});
    }
  }
  return tree;
}

ClassResult bfs_class(const Word& start, const SearchConfig& config) {
  const SearchTree tree = bfs_tree(start, config);
  ClassResult result;
  result.complete = tree.complete;
  result.words.reserve(tree.states.size());
  for (const auto& entry : tree.states) result.words.push_back(entry.word);
  std::sort(result.words.begin(), result.words.end());
  return result;
}

namespace {

std::vector<Word> factors_without_curls(const Word& word) {
  std::vector<Word> factors = prime_decompose(reduce_r1(word));
  // A curl can survive reduction when both sides of its loop carry other
  // summands (x T x T'); it is still an infinity-shaped factor.
  std::erase(factors, curl_word());
  return factors;
}

}  // namespace

FactorTest strong_trivial_test(const Word& word) {
  FactorTest test;
  test.factors = factors_without_curls(word);
  test.holds = std::all_of(test.factors.begin(), test.factors.end(),
                           [](const Word& f) { return f == trefoil_word(); });
  return test;
}

std::optional<std::string> base_projection_defect(const Word& base) {
  const auto choice = realize(base);
  if (!choice) return "not realizable on S²";
  const FaceInventory inventory = faces(base, *choice);
  for (const auto& face : inventory.faces) {
    if (face.length == 1) return std::string("has a 1-gon");
    if (face.coherent && (face.length == 2 || face.length == 3)) {
      return "has a coherent " + std::to_string(face.length) + "-gon";
    }
  }
  return std::nullopt;
}

FactorTest base_summand_test(const Word& word, const Word& base) {
  if (auto defect = base_projection_defect(base)) {
    throw PreconditionError("base projection " + base.to_string() + " " +
                            *defect);
  }
  FactorTest test;
  test.factors = factors_without_curls(word);
  std::vector<Word> rest = test.factors;
  std::erase(rest, trefoil_word());
  test.holds = rest == prime_decompose(base);
  return test;
}

Word twist_family(std::size_t n) {
  if (n == 0) throw std::invalid_argument("twist family starts at n = 1");
  const Label p = 0;
  const Label q = 1;
  std::vector<Label> letters = {p, q};
  for (std::size_t i = 0; i < n; ++i) letters.push_back(static_cast<Label>(2 + i));
  // The second pass through the clasp meets its crossings in the same order
  // for an odd number of twists and in reverse for an even number.
  if (n % 2 == 1) {
    letters.insert(letters.end(), {p, q});
  } else {
    letters.insert(letters.end(), {q, p});
  }
  for (std::size_t i = n; i-- > 0;) letters.push_back(static_cast<Label>(2 + i));
  const Word word(std::move(letters));
  if (!is_realizable(word) || !is_prime(word) || trivializing_number(word) != 2) {
    throw ConsistencyError("twist projection construction failed for n = " +
                           std::to_string(n));
  }
  return canonicalize(word);
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Inequivalent: return "inequivalent";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

MoveSet closed_under_inverse(MoveSet moves) {
  MoveSet out = moves;
  for (MoveKind kind : moves.kinds()) out = out | MoveSet{inverse(kind)};
  return out;
}

std::optional<Separation> separate(const Word& p, const Word& q,
                                   MoveSet moves) {
  const bool weak_allowed = moves.contains(MoveKind::R3Weak);
  const bool strong_allowed = moves.contains(MoveKind::R3StrongContract) ||
                              moves.contains(MoveKind::R3StrongExpand);
  if (!weak_allowed && !strong_allowed) {
    const Word rp = reduce_r1(p);
    const Word rq = reduce_r1(q);
    if (rp != rq) {
      return Separation{"reduced_word", rp.to_string(), rq.to_string()};
    }
  }
  if (!weak_allowed) {
    const auto xp = cross_chord_number(p) % 3;
    const auto xq = cross_chord_number(q) % 3;
    if (xp != xq) {
      return Separation{"X_mod3", std::to_string(xp), std::to_string(xq)};
    }
    const int hp = h_invariant(p);
    const int hq = h_invariant(q);
    if (hp != hq) {
      return Separation{"H", std::to_string(hp), std::to_string(hq)};
    }
  }
  if (!strong_allowed) {
    const auto tp = trivializing_number(p);
    const auto tq = trivializing_number(q);
    if (tp != tq) {
      return Separation{"tr", std::to_string(tp), std::to_string(tq)};
    }
    // Without strong moves the positive resolution keeps its knot type.
    if (p.crossings() <= kDefaultBracketCap &&
        q.crossings() <= kDefaultBracketCap) {
      const LaurentPoly vp = jones_normalized(positive_resolution(KnotProjection(p)));
      const LaurentPoly vq = jones_normalized(positive_resolution(KnotProjection(q)));
      if (vp != vq) {
        return Separation{"knot_bracket", vp.to_string(), vq.to_string()};
      }
    }
  }
  return std::nullopt;
}

// The first allowed site of `from` whose canonical result is `to`.
std::optional<PathStep> step_between(const Word& from, const Word& to,
                                     MoveSet moves) {
  for (const auto& site : find_sites(from)) {
    if (!moves.contains(site.kind)) continue;
    Word result = canonicalize(apply(from, site));
    if (result == to) return PathStep{site.kind, site, std::move(result)};
  }
  return std::nullopt;
}

}  // namespace

ClassCertificate equivalence_query(const Word& source, const Word& target,
                                   MoveSet moves, SearchConfig config) {
  moves = closed_under_inverse(moves);
  config.allowed = moves;
  ClassCertificate cert;
  cert.source = canonicalize(source);
  cert.target = canonicalize(target);
  cert.moves = moves;
  cert.max_crossings = config.max_crossings;
  if (!is_realizable(cert.source) || !is_realizable(cert.target)) {
    throw NotRealizableError("equivalence query needs spherical curves");
  }
  if (cert.source == cert.target) {
    cert.verdict = Verdict::Equivalent;
    return cert;
  }
  if (auto separation = separate(cert.source, cert.target, moves)) {
    cert.verdict = Verdict::Inequivalent;
    cert.separation = std::move(separation);
    return cert;
  }
  if (cert.source.crossings() > config.max_crossings ||
      cert.target.crossings() > config.max_crossings) {
    cert.note = "an endpoint exceeds the crossing cap";
    return cert;
  }

  struct Side {
    std::unordered_map<Word, Word, WordHash> parent;
    std::vector<Word> frontier;
    std::size_t depth = 0;
  };
  Side forward;
  Side backward;
  forward.parent.emplace(cert.source, cert.source);
  backward.parent.emplace(cert.target, cert.target);
  forward.frontier = {cert.source};
  backward.frontier = {cert.target};

  std::optional<Word> meeting;
  bool capped = false;
  while (!meeting && (!forward.frontier.empty() || !backward.frontier.empty())) {
    if (config.max_depth && forward.depth + backward.depth >= *config.max_depth) {
      cert.note = "depth limit reached";
      return cert;
    }
    const bool grow_forward =
        !forward.frontier.empty() &&
        (backward.frontier.empty() ||
         forward.frontier.size() <= backward.frontier.size());
    Side& side = grow_forward ? forward : backward;
    Side& other = grow_forward ? backward : forward;
    std::vector<Word> next_frontier;
    for (const Word& word : side.frontier) {
      for (auto& next : neighbors(word, moves, config.max_crossings)) {
        if (side.parent.contains(next.word)) continue;
        side.parent.emplace(next.word, word);
        if (other.parent.contains(next.word)) {
          meeting = next.word;
          break;
        }
        next_frontier.push_back(next.word);
        if (forward.parent.size() + backward.parent.size() >= config.max_states) {
          capped = true;
          break;
        }
      }
      if (meeting || capped) break;
    }
    ++side.depth;
    side.frontier = std::move(next_frontier);
    if (capped) {
      cert.note = "state cap reached";
      return cert;
    }
  }
  if (!meeting) {
    cert.note = "classes are disjoint below " +
                std::to_string(config.max_crossings + 1) +
                " crossings; a longer path may exist";
    return cert;
  }

  // Chain source -> meeting -> target over canonical words.
  std::vector<Word> chain;
  for (Word w = *meeting; w != cert.source; w = forward.parent.at(w)) {
    chain.push_back(w);
  }
  chain.push_back(cert.source);
  std::reverse(chain.begin(), chain.end());
  for (Word w = *meeting; w != cert.target;) {
    w = backward.parent.at(w);
    chain.push_back(w);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto step = step_between(chain[i], chain[i + 1], moves);
    if (!step) {
      throw ConsistencyError("search path has no move between " +
                             chain[i].to_string() + " and " +
                             chain[i + 1].to_string());
    }
    cert.path.push_back(std::move(*step));
  }
  cert.verdict = Verdict::Equivalent;
  return cert;
}

bool replay(const ClassCertificate& certificate) {
  if (certificate.verdict != Verdict::Equivalent) return false;
  Word current = certificate.source;
  for (const auto& step : certificate.path) {
    if (!certificate.moves.contains(step.kind) || step.site.kind != step.kind) {
      return false;
    }
    current = canonicalize(apply(current, step.site));
    if (current != step.word) return false;
  }
  return current == certificate.target;
}

std::vector<Word> one_third_move_targets(const Word& p,
                                         std::size_t extra_curls) {
  const Word rp = reduce_r1(p);
  SearchConfig config;
  config.allowed = MoveSet::r1();
  config.max_crossings = rp.crossings() + extra_curls;
  std::set<Word> targets;
  for (const Word& w : bfs_class(rp, config).words) {
    for (const auto& site : find_triangles(w)) {
      targets.insert(reduce_r1(apply(w, site)));
    }
  }
  return {targets.begin(), targets.end()};
}

bool related_by_one_third_move(const Word& p, const Word& q,
                               std::size_t extra_curls) {
  const auto targets = one_third_move_targets(p, extra_curls);
  return std::binary_search(targets.begin(), targets.end(), reduce_r1(q));
}

}  // namespace knotproj
