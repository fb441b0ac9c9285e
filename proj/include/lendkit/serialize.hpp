#pragma once

#include "lendkit/descent.hpp"
#include "lendkit/laxtrans.hpp"

// nlohmann/json single header from vendor/
#include "json.hpp"

namespace lendkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

struct DocumentEnvelope {
  std::string formatVersion;
  std::string kind;  // category | twocategory | functor | diagram | wedge | coherence | report
  Json payload;
};

// Strict parsing: unknown fields and unknown formatVersion are rejected with
// the field path; the matching validator runs afterwards.
DocumentEnvelope parse_document(const std::string& text);
std::string serialize_document(const DocumentEnvelope& doc);

Json envelope_json(const std::string& kind, Json payload);

// category
Json category_to_json(const FinCat& c);
CatPtr category_from_json(const Json& j, const std::string& path);

// twocategory
Json twocat_to_json(const Fin2Cat& a);
TwoCatPtr twocat_from_json(const Json& j, const std::string& path);

// functor (endpoints inline)
Json funct_to_json(const Funct& f);
Funct funct_from_json(const Json& j, const std::string& path);

// diagram: shape/extra either inline or the string "external"
Json diagram_to_json(const TwoFunctorToCat& t);
TwoFunctorToCat diagram_from_json(const Json& j, const std::string& path,
                                  const TwoCatPtr& externalShape, const TwoCatPtr& externalExtra,
                                  Budget& budget);

// wedge: an end result (diagram + category + universal wedge)
Json end_result_to_json(const EndResult& e);
Json descent_end_to_json(const DescentEnd& e);

// coherence data bundle
Json coherence_to_json(const CoherenceData& cd);
CoherenceData coherence_from_json(const Json& j, const std::string& path);

// graphviz export: one node per object, one edge per non-identity morphism
std::string export_dot(const FinCat& c);

// Runs the validator matching the document kind; the report lists violated
// laws (empty report = valid).
ValidationReport validate_document(const DocumentEnvelope& doc, Budget& budget);

}  // namespace lendkit
