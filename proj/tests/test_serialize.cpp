#include <doctest.h>

#include "knotproj/serialize.hpp"

using namespace knotproj;

namespace {

template <typename T>
T round_trip(const T& value) {
  const std::string text = Json(value).dump();
  return Json::parse(text).get<T>();
}

}  // namespace

TEST_CASE("words") {
  for (const Word& w : enumerate_realizable(4)) CHECK(round_trip(w) == w);
  CHECK(Json(trefoil_word()) == "a b c a b c");
}

TEST_CASE("invariant report") {
  const InvariantReport r = compute_invariants(trefoil_word());
  CHECK(round_trip(r) == r);
  const Json j = r;
  CHECK(j.at("n") == 3);
  CHECK(j.at("X") == 3);
  CHECK(j.at("X_mod3") == 0);
  CHECK(j.at("tr") == 2);
  CHECK(j.at("H") == 0);
  CHECK(j.at("trefoil_summands") == 1);
}

TEST_CASE("faces and embeddings") {
  const auto choice = *realize(twist_family(3));
  CHECK(round_trip(choice) == choice);
  const FaceInventory inv = faces(twist_family(3), choice);
  const FaceInventory back = round_trip(inv);
  REQUIRE(back.faces.size() == inv.faces.size());
  for (std::size_t i = 0; i < inv.faces.size(); ++i) {
    CHECK(back.faces[i].length == inv.faces[i].length);
    CHECK(back.faces[i].boundary == inv.faces[i].boundary);
    CHECK(back.faces[i].coherent == inv.faces[i].coherent);
  }
}

TEST_CASE("move sites and sets") {
  for (const auto& site : find_sites(twist_family(2))) CHECK(round_trip(site) == site);
  for (MoveSet s : {MoveSet{}, MoveSet::r1(), MoveSet::strong(), MoveSet::weak(), MoveSet::all()}) {
    CHECK(round_trip(s) == s);
  }
  CHECK_THROWS(Json("R9").get<MoveKind>());
}

TEST_CASE("certificates") {
  SearchConfig config;
  config.max_crossings = 5;
  for (MoveSet moves : {MoveSet::weak(), MoveSet::strong()}) {
    const auto cert = equivalence_query(twist_family(1), twist_family(2), moves, config);
    const auto back = round_trip(cert);
    CHECK(back.verdict == cert.verdict);
    CHECK(back.source == cert.source);
    CHECK(back.target == cert.target);
    CHECK(back.moves == cert.moves);
    CHECK(back.max_crossings == cert.max_crossings);
    CHECK(back.note == cert.note);
    CHECK(back.separation.has_value() == cert.separation.has_value());
    REQUIRE(back.path.size() == cert.path.size());
    for (std::size_t i = 0; i < cert.path.size(); ++i) {
      CHECK(back.path[i].kind == cert.path[i].kind);
      CHECK(back.path[i].site == cert.path[i].site);
      CHECK(back.path[i].word == cert.path[i].word);
    }
    if (cert.verdict == Verdict::Equivalent) CHECK(replay(back));
  }
}

TEST_CASE("search results") {
  const FactorTest t = strong_trivial_test(parse_word("a b c a b c x x"));
  const FactorTest tb = round_trip(t);
  CHECK(tb.holds == t.holds);
  CHECK(tb.factors == t.factors);
  SearchConfig config;
  config.max_crossings = 3;
  const ClassResult c = bfs_class(Word{}, config);
  const ClassResult cb = round_trip(c);
  CHECK(cb.words == c.words);
  CHECK(cb.complete == c.complete);
}

TEST_CASE("polynomials and diagrams") {
  const SignedDiagram d = positive_resolution(KnotProjection(twist_family(2)));
  CHECK(round_trip(d) == d);
  const LaurentPoly v = jones_normalized(d);
  CHECK(round_trip(v) == v);
  CHECK(round_trip(LaurentPoly{}) == LaurentPoly{});
}

TEST_CASE("corpus entries") {
  const CorpusEntry e{"3_1", trefoil_word(), "table:3"};
  CHECK(round_trip(e) == e);
}
