#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>
#include <sponge/model.hpp>

namespace sponge::cli {

using Json = nlohmann::json;

/// Rejected spec or report file. `line` is 1-based, 0 when unknown.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& source, int line, const std::string& field, const std::string& message);

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

/// Spec grammar: a JSON object
///   { "dimension": d, "bases": [n_1, ..., n_d], "digits": [[a_1, ..., a_d], ...] }
/// Unknown keys are rejected so typos do not pass silently.
SpongeSpec parse_spec(std::string_view text, const std::string& source = "<spec>");
SpongeSpec read_spec_file(const std::string& path);

Json spec_to_json(const SpongeSpec& spec);
/// Inverse of spec_to_json; `field` names the enclosing key for messages.
SpongeSpec spec_from_json(const Json& value, const std::string& source, const std::string& field);

/// Parses JSON text, turning syntax errors into InputError with a line number.
Json parse_json_text(std::string_view text, const std::string& source);
std::string read_text_file(const std::string& path);

}  // namespace sponge::cli
