#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "oscalg/classify.hpp"
#include "oscalg/moments.hpp"

namespace oscalg {

using Json = nlohmann::json;  // keys stay sorted, so dumps are deterministic

/// A parsed input document: always a RecurrenceSpec (prefix-only when the
/// document supplied moments), plus the moment data itself when present.
struct SpecInput {
  RecurrenceSpec spec;
  std::optional<MomentSequence> moments;
  std::size_t moment_count = 0;
};

/// Accepted document shapes:
///   {"label"?, "b2": C, "a": C | "zero", "b_sign"?: "+"|"-"}
///     with C = {"expr": str, "params"?: {name: "p/q"}}
///            | {"prefix": ["p/q"...], "tail_expr": str, "params"?: {...}}
///   {"family": "laguerre", "alpha": "p/q", "label"?}
///   {"family": "hermite", "label"?}
///   {"moments": ["p/q"...], "count": int, "label"?}
/// Rationals are strings "p" / "p/q" (bare JSON integers are tolerated).
/// Violations raise InputError naming the offending field.
SpecInput spec_input_from_json(const Json& doc);

/// Reads and parses one spec file; I/O and JSON syntax problems become
/// InputError.
SpecInput load_spec_file(const std::string& path);

Json to_json(const Rational& r);
Json to_json(const EpSeq& s);
Json to_json(const ValidationReport& r);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const RelationReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const ShiftOp& op);
Json to_json(const ClosureResult& r);
Json to_json(const RecurrenceTable& t);
Json to_json(const Report& r);

}  // namespace oscalg
