#pragma once

#include "json.hpp"
#include "penta/constructions.hpp"
#include "penta/counting.hpp"
#include "penta/enumeration.hpp"
#include "penta/verification.hpp"

namespace penta {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const CycleCountReport& r);
nlohmann::json to_json(const EnumerationCertificate& c);
nlohmann::json to_json(const LemmaStats& s);
nlohmann::json to_json(const VerificationCertificate& c);
nlohmann::json to_json(const MonotonicityResult& m);

/// JSON array of {family, n, graph6, canonical, expected_c5}.
nlohmann::json golden_catalog_json();

}  // namespace penta
