#include "spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <sponge/error.hpp>

namespace sponge::cli {

namespace {

std::string locate(const std::string& source, int line, const std::string& field) {
  std::string where = source;
  if (line > 0) where += ":" + std::to_string(line);
  if (!field.empty()) where += ": field '" + field + "'";
  return where;
}

int line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Best-effort source positions for error messages. Works on the raw text, so
// it only has to be right for well-formed JSON (syntax errors carry their
// own offsets).
class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  int key(const std::string& name) const {
    auto pos = key_offset(name);
    return pos == std::string_view::npos ? 0 : line_at(text_, pos);
  }

  // Line of element `index` of the array stored under `name`; for nested
  // arrays the elements are the depth-one sub-arrays.
  int element(const std::string& name, std::size_t index) const {
    auto pos = key_offset(name);
    if (pos == std::string_view::npos) return 0;
    pos = text_.find('[', pos);
    if (pos == std::string_view::npos) return 0;
    int depth = 0;
    std::size_t seen = 0;
    bool in_string = false;
    bool expecting = true;
    for (std::size_t i = pos; i < text_.size(); ++i) {
      char c = text_[i];
      if (in_string) {
        if (c == '\\') ++i;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
      if (depth == 1 && expecting && c != ']') {
        if (seen == index) return line_at(text_, i);
        ++seen;
        expecting = false;
      }
      if (c == '"') in_string = true;
      else if (c == '[' || c == '{') ++depth;
      else if (c == ']' || c == '}') {
        if (--depth == 0) break;
      } else if (c == ',' && depth == 1) expecting = true;
    }
    return key(name);
  }

 private:
  std::size_t key_offset(const std::string& name) const { return text_.find("\"" + name + "\""); }

  std::string_view text_;
};

int as_int(const Json& v, const std::string& source, int line, const std::string& field) {
  if (!v.is_number_integer()) throw InputError(source, line, field, "expected an integer");
  auto x = v.get<long long>();
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) throw InputError(source, line, field, "integer out of range");
  return static_cast<int>(x);
}

SpongeSpec build(const Json& value, const std::string& source, const std::string& prefix, const Locator* loc) {
  auto key_line = [&](const std::string& k) { return loc ? loc->key(k) : 0; };
  auto elem_line = [&](const std::string& k, std::size_t i) { return loc ? loc->element(k, i) : 0; };
  auto name = [&](const std::string& f) { return prefix.empty() ? f : prefix + "." + f; };

  if (!value.is_object()) throw InputError(source, loc ? 1 : 0, prefix, "expected an object");
  static const std::set<std::string> known{"dimension", "bases", "digits"};
  for (const auto& [k, v] : value.items()) {
    if (!known.count(k)) throw InputError(source, key_line(k), name(k), "unknown key");
  }
  for (const auto* k : {"dimension", "bases", "digits"}) {
    if (!value.contains(k)) throw InputError(source, 0, name(k), "missing");
  }

  const int dimension = as_int(value["dimension"], source, key_line("dimension"), name("dimension"));

  const Json& jb = value["bases"];
  if (!jb.is_array()) throw InputError(source, key_line("bases"), name("bases"), "expected an array");
  std::vector<int> bases;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    bases.push_back(as_int(jb[i], source, key_line("bases"), name("bases") + "[" + std::to_string(i) + "]"));
  }

  const Json& jd = value["digits"];
  if (!jd.is_array()) throw InputError(source, key_line("digits"), name("digits"), "expected an array");
  std::vector<std::vector<int>> digits;
  for (std::size_t i = 0; i < jd.size(); ++i) {
    const std::string f = name("digits") + "[" + std::to_string(i) + "]";
    if (!jd[i].is_array()) throw InputError(source, elem_line("digits", i), f, "expected an array of integers");
    std::vector<int> row;
    for (std::size_t j = 0; j < jd[i].size(); ++j) {
      row.push_back(as_int(jd[i][j], source, elem_line("digits", i), f + "[" + std::to_string(j) + "]"));
    }
    digits.push_back(std::move(row));
  }

  try {
    return validate_spec(dimension, bases, digits);
  } catch (const SpecError& e) {
    std::string field;
    int line = 0;
    switch (e.code()) {
      case ErrorCode::DimensionTooLarge:
        field = name("dimension");
        line = key_line("dimension");
        break;
      case ErrorCode::BaseTooSmall:
      case ErrorCode::BasesNotSorted:
        field = name("bases") + "[" + std::to_string(e.axis() - 1) + "]";
        line = key_line("bases");
        break;
      case ErrorCode::EmptyDigits:
        field = name("digits");
        line = key_line("digits");
        break;
      case ErrorCode::DimensionMismatch:
      case ErrorCode::DigitOutOfRange:
      case ErrorCode::DuplicateDigit: {
        if (e.code() == ErrorCode::DimensionMismatch && static_cast<int>(bases.size()) != dimension) {
          field = name("bases");
          line = key_line("bases");
          break;
        }
        std::set<std::vector<int>> seen;
        for (std::size_t i = 0; i < digits.size(); ++i) {
          const auto& d = digits[i];
          bool bad = static_cast<int>(d.size()) != dimension;
          for (std::size_t j = 0; !bad && j < d.size(); ++j) bad = d[j] < 0 || d[j] >= bases[j];
          if (!bad && !seen.insert(d).second) bad = true;
          if (bad) {
            field = name("digits") + "[" + std::to_string(i) + "]";
            line = elem_line("digits", i);
            break;
          }
        }
        if (field.empty()) field = name("dimension");
        break;
      }
      default:
        break;
    }
    throw InputError(source, line, field, e.what());
  }
}

}  // namespace

InputError::InputError(const std::string& source, int line, const std::string& field, const std::string& message)
    : std::runtime_error(locate(source, line, field) + ": " + message), line_(line), field_(field) {}

Json parse_json_text(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw InputError(source, line_at(text, at), "", "malformed JSON");
  }
}

SpongeSpec parse_spec(std::string_view text, const std::string& source) {
  const Json value = parse_json_text(text, source);
  const Locator loc(text);
  return build(value, source, "", &loc);
}

SpongeSpec spec_from_json(const Json& value, const std::string& source, const std::string& field) {
  return build(value, source, field, nullptr);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, "", "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpongeSpec read_spec_file(const std::string& path) { return parse_spec(read_text_file(path), path); }

Json spec_to_json(const SpongeSpec& spec) {
  Json digits = Json::array();
  for (const auto& d : spec.digit_list()) digits.push_back(d);
  return Json{{"dimension", spec.dim()},
              {"bases", std::vector<int>(spec.bases().begin(), spec.bases().end())},
              {"digits", std::move(digits)}};
}

}  // namespace sponge::cli
