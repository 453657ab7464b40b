#pragma once

#include <string>

#include <json.hpp>

#include "spindeg/degrees.hpp"
#include "spindeg/numtheory.hpp"
#include "spindeg/verify.hpp"

namespace spindeg {

using ordered_json = nlohmann::ordered_json;

// {"label":"[4,2]","spin":true,"d":"20","mult":1}
ordered_json record_json(const DegreeRecord& rec);

// {"family":"SymDouble","n":10,"degrees":[{"d":"9","mult":2},...]}
// Degrees are decimal strings so nothing is truncated to 64 bits.
ordered_json multiset_json(const DegreeMultiset& ms);

// {"claim":"L2.1","n":[5,40],"status":"pass","counterexamples":[],"ms":412}
// A "note" key is appended only when the report carries one.
ordered_json report_json(const VerificationReport& rep);

// {"n":30,"t":23,"gap":7,"witness_s":[...],"witness_t":[...]}
ordered_json tn_json(const TnResult& row);

// Inverse of tn_json minus the derived "gap" field.  Shape errors surface as
// nlohmann exceptions; the caller decides whether that is cache corruption.
TnResult tn_from_json(const ordered_json& j);

// RFC 4180 quoting: wrap in double quotes, double any embedded quote.
std::string csv_quote(const std::string& s);

} // namespace spindeg
