#include "cli_internal.hpp"

#include "pn/errors.hpp"

#include <sstream>

namespace pn::cli {

namespace {

bool is_leaf(const Json& j) { return !j.is_structured() || j.empty(); }

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (is_leaf(j)) {
    os << csv_field(path) << ',' << csv_field(j.dump()) << '\n';
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), os);
  } else {
    for (const auto& [k, v] : j.items()) flatten(v, path + "/" + escape_token(k), os);
  }
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array() && j.empty()) return "(none)";
  if (j.is_object() && j.empty()) return "{}";
  return j.dump();
}

bool all_scalars(const Json& j) {
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void text(const Json& j, int indent, std::ostringstream& os);

void text_value(const std::string& key, const Json& v, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_leaf(v)) {
    os << pad << key << ": " << scalar_text(v) << '\n';
  } else if (v.is_array() && all_scalars(v)) {
    os << pad << key << ": ";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
    os << '\n';
  } else {
    os << pad << key << ":\n";
    text(v, indent + 2, os);
  }
}

void text(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_leaf(j)) {
    os << pad << scalar_text(j) << '\n';
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) text_value(k, v, indent, os);
  } else {
    for (const auto& e : j) {
      if (e.is_object()) {
        std::ostringstream inner;
        text(e, indent + 2, inner);
        std::string block = inner.str();
        // Mark the first line of each element.
        block.replace(static_cast<std::size_t>(indent), 2, "- ");
        os << block;
      } else {
        text(e, indent, os);
      }
    }
  }
}

/// Splits one csv line into fields, honouring quotes.
std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw_invalid("unknown format: " + text);
}

std::string render(const Json& payload, Format format) {
  switch (format) {
    case Format::Json: return payload.dump(2) + "\n";
    case Format::Csv: {
      std::ostringstream os;
      os << "path,value\n";
      flatten(payload, "", os);
      return os.str();
    }
    case Format::Text: {
      std::ostringstream os;
      text(payload, 0, os);
      return os.str();
    }
  }
  return {};
}

Json parse_csv(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != "path,value") throw_invalid("csv output must start with a path,value header");
  Json out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto fields = csv_split(line);
    if (fields.size() != 2) throw_invalid("malformed csv row: " + line);
    auto value = Json::parse(fields[1]);
    if (fields[0].empty()) {
      out = value;
    } else {
      out[Json::json_pointer(fields[0])] = value;
    }
  }
  return out;
}

}  // namespace pn::cli
