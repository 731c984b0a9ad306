#pragma once

#include <json.hpp>

#include "knotproj/corpus.hpp"
#include "knotproj/embedding.hpp"
#include "knotproj/explore.hpp"
#include "knotproj/invariants.hpp"
#include "knotproj/knots.hpp"
#include "knotproj/laurent.hpp"
#include "knotproj/moves.hpp"
#include "knotproj/word.hpp"

// JSON mirrors each type field for field. Words are stored as their
// printable Gauss code, polynomials as {"exponent": coefficient} objects.
namespace knotproj {

using Json = nlohmann::json;

void to_json(Json& j, const Word& word);
void from_json(const Json& j, Word& word);

void to_json(Json& j, const RotationChoice& choice);
void from_json(const Json& j, RotationChoice& choice);

void to_json(Json& j, const Face& face);
void from_json(const Json& j, Face& face);
void to_json(Json& j, const FaceInventory& inventory);
void from_json(const Json& j, FaceInventory& inventory);

void to_json(Json& j, const InvariantReport& report);
void from_json(const Json& j, InvariantReport& report);

void to_json(Json& j, MoveKind kind);
void from_json(const Json& j, MoveKind& kind);
void to_json(Json& j, MoveSet moves);
void from_json(const Json& j, MoveSet& moves);
void to_json(Json& j, const MoveSite& site);
void from_json(const Json& j, MoveSite& site);

void to_json(Json& j, Verdict verdict);
void from_json(const Json& j, Verdict& verdict);
void to_json(Json& j, const PathStep& step);
void from_json(const Json& j, PathStep& step);
void to_json(Json& j, const Separation& separation);
void from_json(const Json& j, Separation& separation);
void to_json(Json& j, const ClassCertificate& certificate);
void from_json(const Json& j, ClassCertificate& certificate);

void to_json(Json& j, const FactorTest& test);
void from_json(const Json& j, FactorTest& test);
void to_json(Json& j, const ClassResult& result);
void from_json(const Json& j, ClassResult& result);

void to_json(Json& j, const LaurentPoly& poly);
void from_json(const Json& j, LaurentPoly& poly);
void to_json(Json& j, const SignedDiagram& diagram);
void from_json(const Json& j, SignedDiagram& diagram);

void to_json(Json& j, const CorpusEntry& entry);
void from_json(const Json& j, CorpusEntry& entry);

}  // namespace knotproj
