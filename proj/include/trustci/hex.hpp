// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trustci {

// Lowercase hex; decoding is strict (even length, [0-9a-f] only) so that
// encode(decode(s)) == s holds for every accepted string.
std::string to_hex(std::span<const uint8_t> bytes);
std::string to_hex(std::string_view bytes);

// Throws std::invalid_argument on malformed input.
std::vector<uint8_t> from_hex(std::string_view hex);

}  // namespace trustci
