// Minimal JSON Schema checker covering the subset the shipped schemas use:
// type (string or array), enum, pattern, required, properties,
// additionalProperties (boolean), items, minimum, oneOf, and local
// "#/definitions/..." references.
#pragma once

#include <json.hpp>
#include <regex>
#include <string>
#include <vector>

namespace schema_check {

using Json = nlohmann::json;

struct Checker {
  const Json& root;
  std::vector<std::string> errors;

  const Json& resolve(const Json& schema) {
    if (schema.is_object() && schema.contains("$ref")) {
      const std::string ref = schema["$ref"].get<std::string>();
      const std::string prefix = "#/definitions/";
      if (ref.rfind(prefix, 0) == 0) {
        const std::string name = ref.substr(prefix.size());
        return root.at("definitions").at(name);
      }
      errors.push_back("unsupported $ref: " + ref);
    }
    return schema;
  }

  static bool type_matches(const Json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    return false;
  }

  void check(const Json& value, const Json& schema_in, const std::string& path) {
    const Json& schema = resolve(schema_in);
    if (schema.contains("type")) {
      const Json& t = schema["type"];
      bool ok = false;
      if (t.is_string()) {
        ok = type_matches(value, t.get<std::string>());
      } else {
        for (const auto& alt : t)
          if (type_matches(value, alt.get<std::string>())) ok = true;
      }
      if (!ok) {
        errors.push_back(path + ": type mismatch (" + value.dump() + ")");
        return;
      }
    }
    if (schema.contains("enum")) {
      bool ok = false;
      for (const auto& alt : schema["enum"])
        if (alt == value) ok = true;
      if (!ok) errors.push_back(path + ": not in enum (" + value.dump() + ")");
    }
    if (schema.contains("pattern") && value.is_string()) {
      const std::regex re(schema["pattern"].get<std::string>());
      if (!std::regex_search(value.get<std::string>(), re))
        errors.push_back(path + ": pattern mismatch (" + value.dump() + ")");
    }
    if (schema.contains("minimum") && value.is_number()) {
      if (value.get<double>() < schema["minimum"].get<double>())
        errors.push_back(path + ": below minimum");
    }
    if (schema.contains("oneOf")) {
      int matches = 0;
      for (const auto& alt : schema["oneOf"]) {
        Checker sub{root, {}};
        sub.check(value, alt, path);
        if (sub.errors.empty()) ++matches;
      }
      if (matches != 1)
        errors.push_back(path + ": oneOf matched " + std::to_string(matches) + " alternatives");
    }
    if (value.is_object()) {
      if (schema.contains("required")) {
        for (const auto& key : schema["required"])
          if (!value.contains(key.get<std::string>()))
            errors.push_back(path + ": missing required key " + key.get<std::string>());
      }
      if (schema.contains("properties")) {
        for (const auto& [key, sub] : schema["properties"].items())
          if (value.contains(key)) check(value.at(key), sub, path + "/" + key);
        if (schema.contains("additionalProperties") &&
            schema["additionalProperties"].is_boolean() &&
            !schema["additionalProperties"].get<bool>()) {
          for (const auto& [key, sub] : value.items()) {
            (void)sub;
            if (!schema["properties"].contains(key))
              errors.push_back(path + ": unexpected key " + key);
          }
        }
      }
    }
    if (value.is_array() && schema.contains("items")) {
      size_t i = 0;
      for (const auto& element : value) check(element, schema["items"], path + "[" + std::to_string(i++) + "]");
    }
  }
};

inline std::vector<std::string> validate(const Json& value, const Json& schema) {
  Checker checker{schema, {}};
  checker.check(value, schema, "$");
  return checker.errors;
}

}  // namespace schema_check
