// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json_fwd.hpp>

#include <stdexcept>
#include <string>

namespace trustci {

// Structured values are nlohmann::json with std::map object storage, which
// keeps object keys sorted by their UTF-8 bytes.
using Value = nlohmann::json;

struct EncodingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic byte encoding of a structured value: sorted keys, no
// insignificant whitespace, integers only (floating point throws
// EncodingError), binary content represented by callers as lowercase hex
// strings. Equal values produce identical bytes, and
// canonical_encode(canonical_parse(b)) == b for every produced b.
std::string canonical_encode(const Value& value);

// Strict parse of canonical bytes. Throws EncodingError on malformed input
// or on input containing floating-point numbers.
Value canonical_parse(std::string_view bytes);

}  // namespace trustci
