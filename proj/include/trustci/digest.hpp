// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/canonical.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace trustci {

inline constexpr const char* kDigestAlgorithm = "sha-256";

// SHA-256 digest. The all-zero value is the "no predecessor" sentinel.
struct Digest {
  static constexpr std::size_t kSize = 32;

  std::array<uint8_t, kSize> value{};

  static Digest zero() { return Digest{}; }
  bool is_zero() const;

  std::string hex() const;
  static Digest from_hex(std::string_view hex);  // throws std::invalid_argument

  // Raw 32 bytes as a byte string, for concatenation into hash preimages.
  std::string raw() const { return std::string(reinterpret_cast<const char*>(value.data()), kSize); }

  auto operator<=>(const Digest&) const = default;
};

Digest sha256(std::string_view bytes);
Digest sha256(std::span<const uint8_t> bytes);

// Digest of the canonical encoding of a structured value.
Digest hash_canonical(const Value& value);

void to_json(Value& j, const Digest& d);
void from_json(const Value& j, Digest& d);

}  // namespace trustci
