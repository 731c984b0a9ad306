#include <doctest.h>

#include <map>
#include <set>

#include "knotproj/decompose.hpp"
#include "knotproj/embedding.hpp"
#include "knotproj/explore.hpp"
#include "knotproj/invariants.hpp"
#include "oracles.hpp"

using namespace knotproj;

TEST_CASE("enumeration of small curves") {
  CHECK(enumerate_realizable(0) == std::vector<Word>{Word{}});
  CHECK(enumerate_realizable(1) == std::vector<Word>{Word{}, curl_word()});
  const auto three = enumerate_realizable(3);
  CHECK(std::binary_search(three.begin(), three.end(), trefoil_word()));
}

TEST_CASE("enumeration agrees with brute force") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<Word> canonical, realizable;
    for (const Word& w : oracle::all_words(n)) {
      const Word c(oracle::naive_canonical(w));
      canonical.insert(c);
      if (oracle::realizable(w)) realizable.insert(c);
    }
    const auto words = enumerate_canonical_words(n);
    CHECK(std::set<Word>(words.begin(), words.end()) == canonical);
    CHECK(words.size() == canonical.size());
    std::vector<Word> exact_n;
    for (const Word& w : enumerate_realizable(n)) {
      if (w.crossings() == n) exact_n.push_back(w);
    }
    CHECK(std::set<Word>(exact_n.begin(), exact_n.end()) == realizable);
  }
}

TEST_CASE("prime reduced curve counts") {
  std::map<std::size_t, std::size_t> counts;
  for (const Word& w : enumerate_realizable(7)) {
    if (w.crossings() >= 3 && is_prime(w) && reduce_r1(w) == w) ++counts[w.crossings()];
  }
  CHECK(counts[3] == 1);
  CHECK(counts[4] == 1);
  CHECK(counts[5] == 2);
  CHECK(counts[6] == 3);
  CHECK(counts[7] == 10);
}

TEST_CASE("classes under first moves") {
  SearchConfig config;
  config.allowed = MoveSet::r1();
  config.max_crossings = 2;
  const auto result = bfs_class(Word{}, config);
  CHECK(result.complete);
  CHECK(result.words == std::vector<Word>{Word{}, curl_word(), parse_word("a a b b")});
}

TEST_CASE("the trefoil is strongly trivial") {
  SearchConfig config;
  config.allowed = MoveSet::strong();
  config.max_crossings = 3;
  const auto result = bfs_class(Word{}, config);
  CHECK(std::binary_search(result.words.begin(), result.words.end(), trefoil_word()));
}

TEST_CASE("a word without sites stays alone") {
  SearchConfig config;
  config.allowed = MoveSet{MoveKind::R1Del};
  const auto result = bfs_class(parse_word("a b a b"), config);
  CHECK(result.words == std::vector<Word>{parse_word("a b a b")});
}

TEST_CASE("state cap marks the result incomplete") {
  SearchConfig config;
  config.allowed = MoveSet::strong();
  config.max_crossings = 6;
  config.max_states = 5;
  const auto result = bfs_class(Word{}, config);
  CHECK_FALSE(result.complete);
  CHECK(result.words.size() == 5);
}

TEST_CASE("reached set does not depend on expansion order") {
  SearchConfig config;
  config.allowed = MoveSet::all();
  config.max_crossings = 5;
  const auto plain = bfs_class(Word{}, config);
  for (std::uint64_t seed : {1u, 7u, 12345u}) {
    config.shuffle_seed = seed;
    CHECK(bfs_class(Word{}, config).words == plain.words);
  }
}

TEST_CASE("strong trivial test") {
  CHECK(strong_trivial_test(Word{}).holds);
  CHECK(strong_trivial_test(trefoil_word()).holds);
  const Word sum = parse_word("a b c a b c d e f d e f x x");
  const auto test = strong_trivial_test(sum);
  CHECK(test.holds);
  CHECK(test.factors == std::vector<Word>{trefoil_word(), trefoil_word()});
  CHECK(strong_trivial_test(parse_word("x a b c a b c x d e f d e f")).holds);
  CHECK_FALSE(strong_trivial_test(parse_word("a b a b")).holds);
  CHECK_FALSE(strong_trivial_test(parse_word("a b c a d c b d")).holds);
}

TEST_CASE("base summand test") {
  // The star curve has only incoherent bigons and two coherent pentagons.
  const Word star = parse_word("a b c d e a b c d e");
  const Word fig8 = parse_word("a b c a d c b d");
  CHECK_FALSE(base_projection_defect(star));
  CHECK(base_summand_test(star, star).holds);
  CHECK(base_summand_test(connected_sum(star, trefoil_word(), 3, 0), star).holds);
  CHECK(base_summand_test(connected_sum(star, curl_word(), 5, 0), star).holds);
  const Word two = connected_sum(connected_sum(star, trefoil_word(), 1, 2),
                                 trefoil_word(), 12, 0);
  CHECK(base_summand_test(two, star).holds);
  CHECK_FALSE(base_summand_test(connected_sum(star, fig8, 2, 0), star).holds);
  CHECK_FALSE(base_summand_test(connected_sum(star, star, 2, 0), star).holds);
  CHECK_FALSE(base_summand_test(trefoil_word(), star).holds);
  CHECK_FALSE(base_summand_test(Word{}, star).holds);
  CHECK(*base_projection_defect(fig8) == "has a coherent 2-gon");
  CHECK(*base_projection_defect(trefoil_word()) == "has a coherent 3-gon");
  CHECK(*base_projection_defect(curl_word()) == "has a 1-gon");
  CHECK_THROWS_AS(base_summand_test(trefoil_word(), trefoil_word()), PreconditionError);
}

TEST_CASE("twist family") {
  CHECK(twist_family(1) == trefoil_word());
  CHECK(twist_family(2) == canonicalize(parse_word("a b c a d c b d")));
  for (std::size_t n = 1; n <= 9; ++n) {
    const Word t = twist_family(n);
    CHECK(t.crossings() == n + 2);
    CHECK(is_realizable(t));
    CHECK(is_prime(t));
    CHECK(trivializing_number(t) == 2);
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    const long step = static_cast<long>(cross_chord_number(twist_family(n + 1))) -
                      static_cast<long>(cross_chord_number(twist_family(n)));
    // One twist added to an odd count crosses a single chord; added to an
    // even count it also crosses the clasp.
    CHECK(step == (n % 2 == 1 ? 1 : 3));
  }
  CHECK_THROWS(twist_family(0));
}

TEST_CASE("twist projections are the only reduced prime curves with tr = 2") {
  for (const Word& w : enumerate_realizable(7)) {
    if (w.crossings() < 3 || !is_prime(w) || reduce_r1(w) != w) continue;
    if (trivializing_number(w) == 2) CHECK(w == twist_family(w.crossings() - 2));
  }
}

TEST_CASE("equivalence queries") {
  SearchConfig config;
  config.max_crossings = 6;

  const auto same = equivalence_query(trefoil_word(), trefoil_word(), MoveSet::all(), config);
  CHECK(same.verdict == Verdict::Equivalent);
  CHECK(same.path.empty());

  const auto strong = equivalence_query(twist_family(1), twist_family(2), MoveSet::strong(), config);
  CHECK(strong.verdict == Verdict::Inequivalent);
  REQUIRE(strong.separation);
  CHECK(strong.separation->invariant == "X_mod3");
  CHECK(strong.separation->source_value == "0");
  CHECK(strong.separation->target_value == "1");

  const auto weak = equivalence_query(twist_family(1), twist_family(2), MoveSet::weak(), config);
  CHECK(weak.verdict == Verdict::Equivalent);
  CHECK(weak.path.size() == 2);
  CHECK(replay(weak));

  const auto r1 = equivalence_query(trefoil_word(), Word{}, MoveSet::r1(), config);
  CHECK(r1.verdict == Verdict::Inequivalent);

  // tr separates when strong moves are excluded.
  const auto by_tr = equivalence_query(parse_word("a b c d e a b c d e"), Word{},
                                       MoveSet::weak(), config);
  CHECK(by_tr.verdict == Verdict::Inequivalent);
  REQUIRE(by_tr.separation);
  CHECK(by_tr.separation->invariant == "tr");
}

TEST_CASE("twist projections two apart stay weakly separate") {
  SearchConfig config;
  for (std::size_t n = 1; n <= 7; ++n) {
    const Word p = twist_family(n);
    const Word q = twist_family(n + 2);
    CHECK(trivializing_number(p) == trivializing_number(q));
    config.max_crossings = std::min<std::size_t>(n + 4, 8);
    const auto cert = equivalence_query(p, q, MoveSet::weak(), config);
    CHECK(cert.verdict == Verdict::Inequivalent);
    REQUIRE(cert.separation);
    CHECK(cert.separation->invariant == "knot_bracket");
  }
  // The witness comes from the invariant, not from the search: a plain
  // bounded weak search from T(1) never reaches T(3) either.
  config.allowed = MoveSet::weak();
  config.max_crossings = 6;
  const auto reached = bfs_class(twist_family(1), config);
  CHECK_FALSE(std::binary_search(reached.words.begin(), reached.words.end(), twist_family(3)));
}

TEST_CASE("bounded search reports unknown") {
  SearchConfig config;
  config.max_crossings = 7;
  // 7_1 and the trivial curve agree on X mod 3 and H; under the cap 7_1 has
  // no move at all.
  const Word seven = parse_word("a b c d e f g a b c d e f g");
  const auto far = equivalence_query(seven, Word{}, MoveSet::strong(), config);
  CHECK(far.verdict == Verdict::Unknown);
  CHECK_FALSE(far.separation);
  CHECK_FALSE(far.note.empty());
}

TEST_CASE("neighbouring twist projections from an even index are strongly equivalent") {
  SearchConfig config;
  config.max_crossings = 6;
  const auto cert = equivalence_query(twist_family(2), twist_family(3), MoveSet::strong(), config);
  CHECK(cert.verdict == Verdict::Equivalent);
  CHECK(cert.path.size() == 2);
  CHECK(replay(cert));
}

TEST_CASE("tampered certificates fail replay") {
  SearchConfig config;
  config.max_crossings = 5;
  auto cert = equivalence_query(twist_family(1), twist_family(2), MoveSet::weak(), config);
  REQUIRE(replay(cert));
  cert.target = trefoil_word();
  CHECK_FALSE(replay(cert));
}

TEST_CASE("7_4 and 7_B are strongly equivalent through eight crossings") {
  SearchConfig config;
  config.max_crossings = 8;
  const Word p = parse_word("a b c d e a f g b e d c g f");
  const Word q = parse_word("a b c a d e f c b g e d g f");
  const auto cert = equivalence_query(p, q, MoveSet::strong(), config);
  CHECK(cert.verdict == Verdict::Equivalent);
  CHECK(replay(cert));
}

TEST_CASE("one third move relations") {
  CHECK(related_by_one_third_move(trefoil_word(), twist_family(2)));
  CHECK(related_by_one_third_move(trefoil_word(), Word{}));
  CHECK_FALSE(related_by_one_third_move(trefoil_word(), trefoil_word()));
  CHECK_FALSE(related_by_one_third_move(Word{}, parse_word("a b c d e a b c d e")));
}

TEST_CASE("(3a) steps count trefoil summands") {
  SearchConfig config;
  config.allowed = MoveSet{MoveKind::R1Add, MoveKind::R3StrongExpand};
  config.max_crossings = 6;
  const auto tree = bfs_tree(Word{}, config);
  CHECK(tree.complete);
  std::vector<std::size_t> expansions(tree.states.size(), 0);
  for (std::size_t i = 1; i < tree.states.size(); ++i) {
    const auto& e = tree.states[i];
    expansions[i] = expansions[*e.parent] + (e.step->kind == MoveKind::R3StrongExpand);
    CHECK(expansions[i] == trefoil_summand_count(e.word));
  }
}
