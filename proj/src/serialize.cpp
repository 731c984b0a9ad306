#include "knotproj/serialize.hpp"

#include <string>

namespace knotproj {

void to_json(Json& j, const Word& word) { j = word.to_string(); }

void from_json(const Json& j, Word& word) {
  word = parse_word(j.get<std::string>());
}

void to_json(Json& j, const RotationChoice& choice) { j = choice.bits; }

void from_json(const Json& j, RotationChoice& choice) {
  choice.bits = j.get<std::vector<std::uint8_t>>();
}

void to_json(Json& j, const Face& face) {
  j = Json{{"length", face.length},
           {"boundary", face.boundary},
           {"coherent", face.coherent}};
}

void from_json(const Json& j, Face& face) {
  j.at("length").get_to(face.length);
  j.at("boundary").get_to(face.boundary);
  j.at("coherent").get_to(face.coherent);
}

void to_json(Json& j, const FaceInventory& inventory) {
  j = Json{{"faces", inventory.faces}};
}

void from_json(const Json& j, FaceInventory& inventory) {
  j.at("faces").get_to(inventory.faces);
}

void to_json(Json& j, const InvariantReport& report) {
  j = Json{{"n", report.n},
           {"X", report.x},
           {"X_mod3", report.x_mod3},
           {"tr", report.tr},
           {"H", report.h},
           {"reduced_word", report.reduced_word},
           {"trefoil_summands", report.trefoil_summands}};
}

void from_json(const Json& j, InvariantReport& report) {
  j.at("n").get_to(report.n);
  j.at("X").get_to(report.x);
  j.at("X_mod3").get_to(report.x_mod3);
  j.at("tr").get_to(report.tr);
  j.at("H").get_to(report.h);
  j.at("reduced_word").get_to(report.reduced_word);
  j.at("trefoil_summands").get_to(report.trefoil_summands);
}

void to_json(Json& j, MoveKind kind) { j = std::string(to_string(kind)); }

void from_json(const Json& j, MoveKind& kind) {
  const auto text = j.get<std::string>();
  const auto parsed = move_kind_from_string(text);
  if (!parsed) throw std::invalid_argument("unknown move kind " + text);
  kind = *parsed;
}

void to_json(Json& j, MoveSet moves) { j = moves.kinds(); }

void from_json(const Json& j, MoveSet& moves) {
  moves = MoveSet{};
  for (const auto& item : j) moves = moves | MoveSet{item.get<MoveKind>()};
}

void to_json(Json& j, const MoveSite& site) {
  j = Json{{"kind", site.kind},
           {"letters", site.letters},
           {"side_factors", site.side_factors},
           {"slot", site.slot},
           {"internal_crossings", site.internal_crossings}};
}

void from_json(const Json& j, MoveSite& site) {
  j.at("kind").get_to(site.kind);
  j.at("letters").get_to(site.letters);
  j.at("side_factors").get_to(site.side_factors);
  j.at("slot").get_to(site.slot);
  j.at("internal_crossings").get_to(site.internal_crossings);
}

void to_json(Json& j, Verdict verdict) { j = std::string(to_string(verdict)); }

void from_json(const Json& j, Verdict& verdict) {
  const auto text = j.get<std::string>();
  for (Verdict v :
       {Verdict::Equivalent, Verdict::Inequivalent, Verdict::Unknown}) {
    if (text == to_string(v)) {
      verdict = v;
      return;
    }
  }
  throw std::invalid_argument("unknown verdict " + text);
}

void to_json(Json& j, const PathStep& step) {
  j = Json{{"kind", step.kind}, {"site", step.site}, {"word", step.word}};
}

void from_json(const Json& j, PathStep& step) {
  j.at("kind").get_to(step.kind);
  j.at("site").get_to(step.site);
  j.at("word").get_to(step.word);
}

void to_json(Json& j, const Separation& separation) {
  j = Json{{"invariant", separation.invariant},
           {"source_value", separation.source_value},
           {"target_value", separation.target_value}};
}

void from_json(const Json& j, Separation& separation) {
  j.at("invariant").get_to(separation.invariant);
  j.at("source_value").get_to(separation.source_value);
  j.at("target_value").get_to(separation.target_value);
}

void to_json(Json& j, const ClassCertificate& certificate) {
  j = Json{{"verdict", certificate.verdict},
           {"source", certificate.source},
           {"target", certificate.target},
           {"moves", certificate.moves},
           {"max_crossings", certificate.max_crossings},
           {"path", certificate.path},
           {"separation", nullptr},
           {"note", certificate.note}};
  if (certificate.separation) j["separation"] = *certificate.separation;
}

void from_json(const Json& j, ClassCertificate& certificate) {
  j.at("verdict").get_to(certificate.verdict);
  j.at("source").get_to(certificate.source);
  j.at("target").get_to(certificate.target);
  j.at("moves").get_to(certificate.moves);
  j.at("max_crossings").get_to(certificate.max_crossings);
  j.at("path").get_to(certificate.path);
  const auto& separation = j.at("separation");
  if (separation.is_null()) {
    certificate.separation.reset();
  } else {
    certificate.separation = separation.get<Separation>();
  }
  j.at("note").get_to(certificate.note);
}

void to_json(Json& j, const FactorTest& test) {
  j = Json{{"holds", test.holds}, {"factors", test.factors}};
}

void from_json(const Json& j, FactorTest& test) {
  j.at("holds").get_to(test.holds);
  j.at("factors").get_to(test.factors);
}

void to_json(Json& j, const ClassResult& result) {
  j = Json{{"words", result.words}, {"complete", result.complete}};
}

void from_json(const Json& j, ClassResult& result) {
  j.at("words").get_to(result.words);
  j.at("complete").get_to(result.complete);
}

void to_json(Json& j, const LaurentPoly& poly) {
  j = Json::object();
  for (const auto& [exponent, coefficient] : poly.terms()) {
    j[std::to_string(exponent)] = coefficient;
  }
}

void from_json(const Json& j, LaurentPoly& poly) {
  poly = LaurentPoly{};
  for (const auto& [key, value] : j.items()) {
    poly += LaurentPoly::monomial(value.get<LaurentPoly::Coefficient>(),
                                  std::stoi(key));
  }
}

void to_json(Json& j, const SignedDiagram& diagram) {
  j = Json{{"word", diagram.word},
           {"embedding", diagram.embedding},
           {"over_first", diagram.over_first},
           {"sign", diagram.sign}};
}

void from_json(const Json& j, SignedDiagram& diagram) {
  j.at("word").get_to(diagram.word);
  j.at("embedding").get_to(diagram.embedding);
  j.at("over_first").get_to(diagram.over_first);
  j.at("sign").get_to(diagram.sign);
}

void to_json(Json& j, const CorpusEntry& entry) {
  j = Json{{"name", entry.name}, {"word", entry.word}, {"source", entry.source}};
}

void from_json(const Json& j, CorpusEntry& entry) {
  j.at("name").get_to(entry.name);
  j.at("word").get_to(entry.word);
  j.at("source").get_to(entry.source);
}

}  // namespace knotproj
