// JSON certificate documents. Every integer is written as a decimal string,
// rationals as "num/den", and keys keep insertion order so equal inputs give
// byte-identical output.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "taylorcert/cli/subject.hpp"
#include "taylorcert/galois.hpp"
#include "taylorcert/modp.hpp"
#include "taylorcert/newton_polygon.hpp"
#include "taylorcert/schur.hpp"

namespace taylorcert::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const IntPoly& f);
Json to_json(const NewtonPolygon& np);
Json to_json(const FactorizationModP& fac);
Json to_json(const DiscriminantReport& r);
Json to_json(const FastPathCriterion& c);
Json to_json(const FactorialSumCondition& c);
Json to_json(const IrreducibilityCertificate& cert);
Json to_json(const GaloisCertificate& cert);
Json subject_json(const Subject& s);

/// Step name and elapsed milliseconds, in the order the steps ran.
using Timings = std::vector<std::pair<std::string, double>>;

/// Assembles the full document; `galois` may be null.
Json certificate_document(const Subject& subject, const IrreducibilityCertificate& irreducibility,
                          const GaloisCertificate* galois, const Timings& timings);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-derives everything a document claims from its subject text: the scaled
/// polynomial, the factor product, polygon vertices and shape, mod-p
/// factorizations and the discriminant.
ValidationReport validate_document(const Json& doc);

}  // namespace taylorcert::cli
