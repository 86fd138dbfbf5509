#include "report.hpp"

#include <cmath>

namespace sponge::cli {

namespace {

[[noreturn]] void bad(const std::string& source, const std::string& field, const std::string& message) {
  throw InputError(source, 0, field, message);
}

const Json& member(const Json& obj, const char* key, const std::string& source, const std::string& field) {
  if (!obj.is_object() || !obj.contains(key)) bad(source, field + "." + key, "missing");
  return obj[key];
}

int get_int(const Json& obj, const char* key, const std::string& source, const std::string& field) {
  const Json& v = member(obj, key, source, field);
  if (!v.is_number_integer()) bad(source, field + "." + key, "expected an integer");
  return v.get<int>();
}

std::vector<int> get_ints(const Json& obj, const char* key, const std::string& source, const std::string& field) {
  const Json& v = member(obj, key, source, field);
  if (!v.is_array()) bad(source, field + "." + key, "expected an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) bad(source, field + "." + key, "expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json rational_to_json(const Rational& value) { return to_string(value); }

Json boxes_to_json(const BoxSet& boxes) {
  Json corners = Json::array();
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    auto c = boxes.corner(i);
    corners.push_back(std::vector<std::int64_t>(c.begin(), c.end()));
  }
  return Json{{"bases", std::vector<int>(boxes.bases().begin(), boxes.bases().end())},
              {"exponents", std::vector<int>(boxes.exponents().begin(), boxes.exponents().end())},
              {"corners", std::move(corners)}};
}

BoxSet boxes_from_json(const Json& value, const std::string& source, const std::string& field) {
  auto bases = get_ints(value, "bases", source, field);
  auto exponents = get_ints(value, "exponents", source, field);
  if (bases.empty() || bases.size() != exponents.size() || static_cast<int>(bases.size()) > kMaxDim) {
    bad(source, field, "bases and exponents must have the same nonzero length");
  }
  for (std::size_t j = 0; j < bases.size(); ++j) {
    if (bases[j] < 2 || exponents[j] < 0 || exponents[j] > 62) bad(source, field, "invalid box grid");
  }
  const Json& corners = member(value, "corners", source, field);
  if (!corners.is_array()) bad(source, field + ".corners", "expected an array");
  std::vector<std::int64_t> flat;
  for (const auto& c : corners) {
    if (!c.is_array() || c.size() != bases.size()) bad(source, field + ".corners", "corner has the wrong length");
    for (const auto& x : c) {
      if (!x.is_number_integer()) bad(source, field + ".corners", "expected integers");
      flat.push_back(x.get<std::int64_t>());
    }
  }
  try {
    return BoxSet(std::move(bases), std::move(exponents), std::move(flat));
  } catch (const Error& e) {
    bad(source, field, e.what());
  }
}

Json verdict_to_json(const Verdict& verdict) {
  Json data = std::visit(
      [](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, IslandAtLevel>) {
          return Json{{"level", c.level}, {"boxes", boxes_to_json(c.boxes)}};
        } else if constexpr (std::is_same_v<T, FullProjectionInterval>) {
          return Json{{"axes", c.axes}};
        } else if constexpr (std::is_same_v<T, XiLevel>) {
          return Json{{"level", c.level}};
        } else if constexpr (std::is_same_v<T, LineSegmentWitness>) {
          return Json{{"axis", c.axis}, {"others", c.others}};
        } else if constexpr (std::is_same_v<T, DepthExhausted>) {
          return Json{{"cap", c.cap}};
        } else {
          return Json{{"reason", c.reason}};
        }
      },
      verdict.certificate);
  return Json{{"answer", std::string(to_string(verdict.answer))},
              {"certificate", {{"kind", std::string(certificate_kind(verdict.certificate))}, {"data", data}}}};
}

Verdict verdict_from_json(const Json& value, const std::string& source, const std::string& field) {
  Verdict out;
  const Json& answer = member(value, "answer", source, field);
  if (answer == "Yes") out.answer = Answer::Yes;
  else if (answer == "No") out.answer = Answer::No;
  else if (answer == "Unknown") out.answer = Answer::Unknown;
  else bad(source, field + ".answer", "expected Yes, No or Unknown");

  const std::string cf = field + ".certificate";
  const Json& cert = member(value, "certificate", source, field);
  const Json& kind = member(cert, "kind", source, cf);
  const Json& data = member(cert, "data", source, cf);
  const std::string df = cf + ".data";
  if (!kind.is_string()) bad(source, cf + ".kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "IslandAtLevel") {
    IslandAtLevel c;
    c.level = get_int(data, "level", source, df);
    c.boxes = boxes_from_json(member(data, "boxes", source, df), source, df + ".boxes");
    c.boxes.level = c.level;
    out.certificate = std::move(c);
  } else if (k == "FullProjectionInterval") {
    out.certificate = FullProjectionInterval{get_ints(data, "axes", source, df)};
  } else if (k == "XiLevel") {
    out.certificate = XiLevel{get_int(data, "level", source, df)};
  } else if (k == "LineSegmentWitness") {
    out.certificate = LineSegmentWitness{get_int(data, "axis", source, df), get_ints(data, "others", source, df)};
  } else if (k == "DepthExhausted") {
    out.certificate = DepthExhausted{get_int(data, "cap", source, df)};
  } else if (k == "OutOfTheoremScope") {
    const Json& r = member(data, "reason", source, df);
    if (!r.is_string()) bad(source, df + ".reason", "expected a string");
    out.certificate = OutOfTheoremScope{r.get<std::string>()};
  } else {
    bad(source, cf + ".kind", "unknown certificate kind '" + k + "'");
  }
  return out;
}

Json decision_to_json(const Decision& decision) {
  return Json{{"subject", spec_to_json(decision.subject)},
              {"kept_axes", decision.kept_axes},
              {"verdict", verdict_to_json(decision.verdict)}};
}

Json reduction_to_json(const Reduction& reduction) {
  return Json{{"original_dimension", reduction.original_dim},
              {"kept_axes", reduction.kept_axes},
              {"reduced", spec_to_json(reduction.spec)},
              {"changed", reduction.changed()}};
}

Json dimension_to_json(const DimensionValue& dim) {
  Json terms = Json::array();
  for (const auto& t : dim.terms) {
    terms.push_back(Json{{"base", t.base}, {"count", t.count}, {"previous_count", t.previous_count},
                         {"value", finite_or_null(t.value)}});
  }
  return Json{{"value", finite_or_null(dim.value)}, {"terms", std::move(terms)}};
}

Json bracket_to_json(const HBracket& b) {
  return Json{{"delta", rational_to_json(b.delta)}, {"lo", b.lo}, {"hi", b.hi}, {"depth", b.depth},
              {"exact", b.exact()}};
}

Json exponent_to_json(const ExponentEstimate& est) {
  return Json{{"slope", finite_or_null(est.slope)},
              {"intercept", finite_or_null(est.intercept)},
              {"residual", finite_or_null(est.residual)},
              {"low_confidence", est.low_confidence}};
}

Json classification_to_json(const Classification& c) {
  Json evidence = Json::array();
  for (const auto& e : c.evidence) {
    Json item = decision_to_json(e.decision);
    item["projection"] = e.projection;
    evidence.push_back(std::move(item));
  }
  Json spread_lo = Json::array();
  Json spread_hi = Json::array();
  for (double x : c.corroboration.spread_lo) spread_lo.push_back(finite_or_null(x));
  for (double x : c.corroboration.spread_hi) spread_hi.push_back(finite_or_null(x));
  Json corroboration{{"dimension", finite_or_null(c.corroboration.dimension)},
                     {"exponent", c.corroboration.exponent ? exponent_to_json(*c.corroboration.exponent)
                                                           : Json(nullptr)},
                     {"spread_lo", std::move(spread_lo)},
                     {"spread_hi", std::move(spread_hi)},
                     {"note", c.corroboration.note}};
  return Json{{"property", std::string(to_string(c.property))},
              {"verdict", verdict_to_json(c.verdict)},
              {"reduction", reduction_to_json(c.reduction)},
              {"evidence", std::move(evidence)},
              {"corroboration", std::move(corroboration)}};
}

Json gap_summary_to_json(const GapSequence& seq) {
  return Json{{"entries", seq.entries.size()},
              {"resolved_length", seq.resolved_length()},
              {"floor2", rational_to_json(seq.floor2)},
              {"depth", seq.depth}};
}

}  // namespace sponge::cli
