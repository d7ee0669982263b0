#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "holospin/engine.hpp"
#include "holospin/verify.hpp"
#include "json.hpp"

namespace holospin {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

inline constexpr const char* kSchemaVersion = "output.v1";

/// Four [numerator, denominator] pairs of decimal strings for
/// (re a, im a, re b, im b) of a + b sqrt2. Strings keep arbitrary
/// precision intact through the round trip.
Json field_scalar_json(const FieldScalar& s);

Json spinor_json(const Spinor& v);
Json signature_json(const Signature& sig);
Json chirality_json(const ChiralitySplit& split, std::size_t dim);
Json gram_json(const GramReport& g);

/// include_basis / include_gram trim the heavyweight parts when the caller
/// did not ask for them. Absent parts are omitted, never null.
Json report_json(const FixedSpaceReport& rep, bool include_basis, bool include_gram);
Json variant_json(const VariantReport& var, bool include_basis, bool include_gram);
Json entry_json(const TheoremEntry& e);
Json table_json(const std::vector<TheoremEntry>& rows);

/// Check details appear only on failure.
Json suite_json(const SuiteResult& s);

/// Envelope: schema_version, command echo, results payload, timing. The
/// timing field is the only part that varies between identical runs.
Json output_document(const std::string& command, Json results, double timing_ms);

/// One row per table entry, columns H | n | r | N | chirality | causal
/// type, followed by a pass summary and one line per failed check.
std::string table_markdown(const std::vector<TheoremEntry>& rows);

}  // namespace holospin
