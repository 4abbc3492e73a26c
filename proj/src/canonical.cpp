// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustci/canonical.hpp"

#include <nlohmann/json.hpp>

namespace trustci {

namespace {

void reject_floats(const Value& v, const std::string& path) {
  switch (v.type()) {
    case Value::value_t::number_float:
      throw EncodingError("canonical encoding rejects floating point at " + path);
    case Value::value_t::binary:
    case Value::value_t::discarded:
      throw EncodingError("canonical encoding rejects value kind at " + path);
    case Value::value_t::object:
      for (const auto& [key, child] : v.items()) {
        reject_floats(child, path + "/" + key);
      }
      break;
    case Value::value_t::array:
      for (std::size_t i = 0; i < v.size(); ++i) {
        reject_floats(v[i], path + "/" + std::to_string(i));
      }
      break;
    default:
      break;
  }
}

}  // namespace

std::string canonical_encode(const Value& value) {
  reject_floats(value, "");
  // nlohmann::json stores objects in std::map<std::string, ...>, so dump()
  // emits keys sorted by UTF-8 bytes with no insignificant whitespace.
  return value.dump();
}

Value canonical_parse(std::string_view bytes) {
  Value v = Value::parse(bytes, nullptr, false);
  if (v.is_discarded()) {
    throw EncodingError("canonical parse: malformed JSON");
  }
  reject_floats(v, "");
  return v;
}

}  // namespace trustci
