#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "ebc/lemmas.hpp"
#include "ebc/ring.hpp"
#include "ebc/solver.hpp"

// JSON reports. Keys keep insertion order so equal inputs give equal bytes;
// anything schedule dependent (timings, node counts) is emitted only when
// stats are requested.
namespace ebc::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json elements(const ElementSet& s);
Json structure(const StructureReport& r);
Json eb(const EBResult& r, std::uint32_t depth_budget, bool stats);
Json certificate(const CRTCertificate& c);
Json summary(const VerifySummary& s);

/// {"schema_version": "1", "ring": ..., "order": ...}
Json header(const std::string& ring, std::size_t order);

/// Phase name -> milliseconds.
Json timings(const std::map<std::string, double>& ms);

/// Two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace ebc::report
