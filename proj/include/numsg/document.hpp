#pragma once

// JSON rendering of every result type. All documents share the envelope
// {schema_version, command, spec, payload}. Integers are emitted as JSON
// numbers when they fit in 64 bits and as decimal strings otherwise;
// rationals are always strings "p/q".

#include "numsg/bounds.hpp"
#include "numsg/groebner.hpp"
#include "numsg/reference_tables.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/staircase.hpp"

#include "json.hpp"

#include <string>

namespace numsg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json make_document(const std::string& command, const Json& spec, Json payload);
Json make_document(const std::string& command, const SemigroupSpec& spec, Json payload);

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
Json to_json(const ExponentVector& v);
Json to_json(const SemigroupSpec& s);
Json to_json(const InvariantReport& r);
Json to_json(const WilfReport& w);
Json to_json(const CertifiedMembership& c, const SemigroupSpec& spec);
Json to_json(const GroebnerBasis& basis);
Json to_json(const BoundReport& r);
Json to_json(const RowCheck& c);

InvariantReport invariant_report_from_json(const Json& j);
ExponentVector exponent_vector_from_json(const Json& j);

/// The staircase plot-data document:
/// {schema_version, generators, corners, gap_points: {level: [[...]]},
///  element_points, gap_values, element_values}.
/// Element points are those with sum a_i s_i <= conductor.
Json staircase_plot_data(const StaircaseModel& model);

} // namespace numsg
