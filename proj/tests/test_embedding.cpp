#include <doctest.h>

#include "knotproj/embedding.hpp"
#include "oracles.hpp"

using namespace knotproj;

TEST_CASE("trivial and one-crossing curves") {
  CHECK(is_realizable(Word{}));
  CHECK(is_realizable(curl_word()));
  const auto inv = faces(Word{}, RotationChoice{});
  CHECK(inv.faces.size() == 2);
  const auto choice = realize(curl_word());
  REQUIRE(choice);
  const auto curl_faces = faces(curl_word(), *choice);
  CHECK(curl_faces.faces.size() == 3);
  CHECK(curl_faces.count_of_length(1) == 2);
  CHECK(curl_faces.count_of_length(2) == 1);
}

TEST_CASE("trefoil faces") {
  const auto choice = realize(trefoil_word());
  REQUIRE(choice);
  // The symmetry of the curve shifts it by two positions, which swaps the
  // first and second passage at b.
  CHECK(choice->bits == std::vector<std::uint8_t>{0, 1, 0});
  const auto inv = faces(trefoil_word(), *choice);
  CHECK(inv.faces.size() == 5);
  CHECK(inv.count_of_length(2) == 3);
  CHECK(inv.count_of_length(3) == 2);
  CHECK(inv.total_length() == 12);
  // Both triangles of the standard trefoil projection are coherent; no
  // bigon is.
  for (const auto& f : inv.faces) CHECK(f.coherent == (f.length == 3));
}

TEST_CASE("non-realizable words") {
  CHECK_FALSE(is_realizable(parse_word("a b a b")));
  CHECK_FALSE(is_realizable(parse_word("a b c d a b c d")));
  CHECK_THROWS_WITH_AS(KnotProjection(parse_word("a b c d a b c d")),
                       "a b c d a b c d is not realizable on S²",
                       NotRealizableError);
  CHECK_THROWS_AS(faces(parse_word("a b a b"), RotationChoice{{0, 0}}),
                  NotRealizableError);
}

TEST_CASE("rotation choice must match the word") {
  CHECK_THROWS_AS(face_count(trefoil_word(), RotationChoice{{0}}),
                  std::invalid_argument);
}

TEST_CASE("rotation at a crossing alternates strands") {
  const Word w = trefoil_word();
  for (std::uint8_t bit : {0, 1}) {
    RotationChoice choice{{bit, bit, bit}};
    const auto rot = rotation_at(w, choice, 0);
    // Slots 0 and 2 belong to the first passage, 1 and 3 to the second.
    CHECK(rot[0] == incoming_at(0, 6));
    CHECK(rot[2] == outgoing_at(0));
  }
}

TEST_CASE("realizability matches an independent face tracer for n <= 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Word& w : oracle::all_words(n)) {
      CHECK_MESSAGE(is_realizable(w) == oracle::realizable(w), w.to_string());
    }
  }
}

TEST_CASE("Euler characteristic of every realizing choice") {
  for (const Word& w : oracle::all_words(4)) {
    const auto choice = realize(w);
    if (!choice) continue;
    const auto inv = faces(w, *choice);
    CHECK(inv.faces.size() == w.crossings() + 2);
    CHECK(inv.total_length() == 2 * w.size());
    const auto index = face_index_of_half_edges(w, inv);
    for (std::size_t f = 0; f < inv.faces.size(); ++f) {
      for (HalfEdge h : inv.faces[f].boundary) CHECK(index[h] == f);
    }
  }
}

TEST_CASE("knot projection keeps word and canonical form") {
  const KnotProjection p(parse_word("b c a b c a"));
  CHECK(p.crossings() == 3);
  CHECK(p.canonical() == trefoil_word());
  CHECK(p.word().to_string() == "b c a b c a");
}
