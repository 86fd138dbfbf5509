#pragma once

#include <sponge/sponge.hpp>

#include "spec_io.hpp"

namespace sponge::cli {

Json rational_to_json(const Rational& value);
Json boxes_to_json(const BoxSet& boxes);
BoxSet boxes_from_json(const Json& value, const std::string& source, const std::string& field);

/// {"answer", "certificate": {"kind", "data"}}
Json verdict_to_json(const Verdict& verdict);
Verdict verdict_from_json(const Json& value, const std::string& source, const std::string& field);

/// {"subject", "kept_axes", "verdict"}; the unit verify-cert re-checks.
Json decision_to_json(const Decision& decision);

Json reduction_to_json(const Reduction& reduction);
Json dimension_to_json(const DimensionValue& dim);
Json bracket_to_json(const HBracket& bracket);
Json exponent_to_json(const ExponentEstimate& est);
Json classification_to_json(const Classification& c);
Json gap_summary_to_json(const GapSequence& seq);

}  // namespace sponge::cli
