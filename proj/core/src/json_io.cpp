#include "oscalg/json_io.hpp"

#include <fstream>

#include "oscalg/error.hpp"
#include "oscalg/expr.hpp"

namespace oscalg {

namespace {

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) {
    return Rational(static_cast<long>(j.get<long long>()));
  }
  if (!j.is_string()) {
    throw InputError("field '" + field + "': expected a rational string \"p/q\"");
  }
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw InputError("field '" + field + "': " + e.what());
  }
}

std::vector<Rational> rational_list(const Json& j, const std::string& field) {
  if (!j.is_array()) {
    throw InputError("field '" + field + "': expected an array of rationals");
  }
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Bindings bindings_from_json(const Json& j, const std::string& field) {
  Bindings b;
  if (!j.is_object()) {
    throw InputError("field '" + field + "': expected an object of rationals");
  }
  for (const auto& [name, value] : j.items()) {
    b.emplace(name, rational_from_json(value, field + "." + name));
  }
  return b;
}

Polynomial tail_from_expr(const Json& j, const Bindings& bindings, const std::string& field) {
  if (!j.is_string()) {
    throw InputError("field '" + field + "': expected an expression string");
  }
  try {
    return parse_coeff_expr(j.get<std::string>(), bindings);
  } catch (const ParseError& e) {
    throw InputError("field '" + field + "': " + e.what());
  }
}

EpSeq coeff_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) {
    if (j.get<std::string>() == "zero") return EpSeq();
    throw InputError("field '" + field + "': expected \"zero\" or a coefficient object");
  }
  if (!j.is_object()) {
    throw InputError("field '" + field + "': expected a coefficient object");
  }
  Bindings bindings;
  if (j.contains("params")) bindings = bindings_from_json(j["params"], field + ".params");

  if (j.contains("expr")) {
    return EpSeq(tail_from_expr(j["expr"], bindings, field + ".expr"));
  }
  if (j.contains("tail_expr")) {
    std::vector<Rational> prefix;
    if (j.contains("prefix")) prefix = rational_list(j["prefix"], field + ".prefix");
    return EpSeq(std::move(prefix),
                 tail_from_expr(j["tail_expr"], bindings, field + ".tail_expr"));
  }
  throw InputError("field '" + field + "': expected 'expr' or 'prefix'/'tail_expr'");
}

std::string optional_label(const Json& doc, const std::string& fallback) {
  if (!doc.contains("label")) return fallback;
  if (!doc["label"].is_string()) {
    throw InputError("field 'label': expected a string");
  }
  return doc["label"].get<std::string>();
}

}  // namespace

SpecInput spec_input_from_json(const Json& doc) {
  if (!doc.is_object()) {
    throw InputError("spec document: expected a JSON object");
  }

  if (doc.contains("family")) {
    if (!doc["family"].is_string()) {
      throw InputError("field 'family': expected a string");
    }
    std::string name = doc["family"].get<std::string>();
    auto family = family_from_name(name);
    if (!family) {
      throw InputError("field 'family': unknown family '" + name + "'");
    }
    std::map<std::string, Rational> params;
    if (*family == Family::laguerre) {
      if (!doc.contains("alpha")) {
        throw InputError("field 'alpha': required for family laguerre");
      }
      params.emplace("alpha", rational_from_json(doc["alpha"], "alpha"));
    }
    SpecInput input;
    try {
      input.spec = builtin_family(*family, params);
    } catch (const SpecError& e) {
      throw InputError(std::string("field 'family': ") + e.what());
    }
    input.spec.label = optional_label(doc, input.spec.label);
    return input;
  }

  if (doc.contains("moments")) {
    if (!doc.contains("count") || !doc["count"].is_number_integer()) {
      throw InputError("field 'count': required integer alongside 'moments'");
    }
    long long count = doc["count"].get<long long>();
    if (count < 1) {
      throw InputError("field 'count': must be >= 1");
    }
    SpecInput input;
    try {
      MomentSequence moments(rational_list(doc["moments"], "moments"));
      input.spec = spec_from_moments(moments, static_cast<std::size_t>(count),
                                     optional_label(doc, "moments"));
      input.moments = std::move(moments);
    } catch (const SpecError& e) {
      throw InputError(std::string("field 'moments': ") + e.what());
    }
    input.moment_count = static_cast<std::size_t>(count);
    return input;
  }

  if (!doc.contains("b2")) {
    throw InputError("field 'b2': required (or use 'family' / 'moments')");
  }
  if (!doc.contains("a")) {
    throw InputError("field 'a': required (\"zero\" for the symmetric case)");
  }
  SpecInput input;
  input.spec.b2 = coeff_from_json(doc["b2"], "b2");
  input.spec.a = coeff_from_json(doc["a"], "a");
  input.spec.label = optional_label(doc, "custom");
  if (doc.contains("b_sign")) {
    if (!doc["b_sign"].is_string() ||
        (doc["b_sign"] != "+" && doc["b_sign"] != "-")) {
      throw InputError("field 'b_sign': expected \"+\" or \"-\"");
    }
    input.spec.b_sign =
        doc["b_sign"] == "-" ? BSign::all_negative : BSign::all_positive;
  }
  return input;
}

SpecInput load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open input file '" + path + "'");
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return spec_input_from_json(doc);
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const EpSeq& s) {
  Json prefix = Json::array();
  for (const auto& v : s.prefix()) prefix.push_back(to_json(v));
  Json tail = Json::array();
  for (const auto& c : s.tail().coeffs()) tail.push_back(to_json(c));
  return Json{{"prefix", std::move(prefix)}, {"tail", std::move(tail)}};
}

Json to_json(const ValidationReport& r) {
  Json j{{"valid", r.valid}, {"message", r.message}};
  if (r.violation_index) j["violation_index"] = *r.violation_index;
  if (r.violation_value) j["violation_value"] = to_json(*r.violation_value);
  return j;
}

Json to_json(const Witness& w) {
  return Json{{"j", w.j},
              {"n1", w.n1},
              {"v1", to_json(w.v1)},
              {"n2", w.n2},
              {"v2", to_json(w.v2)}};
}

namespace {

std::string kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::finite_dim4: return "FiniteDim4";
    case VerdictKind::infinite: return "Infinite";
    case VerdictKind::consistent_with_finite: return "ConsistentWithFinite";
    case VerdictKind::infinite_witnessed: return "InfiniteWitnessed";
  }
  return "?";
}

}  // namespace

Json to_json(const Verdict& v) {
  Json j{{"kind", kind_name(v.kind)}, {"note", v.note}};
  if (v.a0) j["a0"] = to_json(*v.a0);
  if (v.a2) j["a2"] = to_json(*v.a2);
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Json to_json(const RelationReport& r) {
  return Json{{"relation", r.relation},
              {"max_residual", r.max_residual},
              {"checked_indices", r.checked_indices},
              {"pass", r.pass}};
}

Json to_json(const VerifyReport& r) {
  Json relations = Json::array();
  for (const auto& rel : r.relations) relations.push_back(to_json(rel));
  return Json{{"label", r.label},
              {"M", r.truncation},
              {"tolerance", r.tolerance},
              {"relations", std::move(relations)},
              {"pass", r.pass}};
}

Json to_json(const ShiftOp& op) {
  if (op.term_count() == 1) {
    const auto& [shift, coeff] = *op.terms().begin();
    return Json{{"shift", shift}, {"coeff", to_json(coeff)}};
  }
  Json terms = Json::array();
  for (const auto& [shift, coeff] : op.terms()) {
    terms.push_back(Json{{"shift", shift}, {"coeff", to_json(coeff)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const ClosureResult& r) {
  Json basis = Json::array();
  for (const auto& op : r.basis) basis.push_back(to_json(op));
  Json growth = Json::array();
  for (const auto& [depth, dim] : r.growth_log) {
    growth.push_back(Json::array({depth, dim}));
  }
  Json j{{"status", r.status == ClosureStatus::closed ? "Closed" : "BudgetExceeded"},
         {"dim", r.dim},
         {"depth", r.depth_reached},
         {"basis", std::move(basis)},
         {"growth_log", std::move(growth)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const RecurrenceTable& t) {
  Json a = Json::array(), b2 = Json::array();
  for (const auto& v : t.a) a.push_back(to_json(v));
  for (const auto& v : t.b2) b2.push_back(to_json(v));
  return Json{{"a", std::move(a)}, {"b2", std::move(b2)}};
}

Json to_json(const Report& r) {
  Json j{{"label", r.label}, {"validation", to_json(r.validation)}};
  if (!r.table_rows.empty()) {
    Json rows = Json::array();
    for (const auto& row : r.table_rows) rows.push_back(to_json(row));
    j["difference_table"] = std::move(rows);
  }
  if (r.verdict) {
    j["verdict"] = to_json(*r.verdict);
    j["symmetrize_invariant"] = r.symmetrize_invariant;
  }
  if (r.closure) {
    j["closure"] = to_json(*r.closure);
    j["verdicts_agree"] = r.verdicts_agree;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace oscalg
