// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustci/digest.hpp"

#include "trustci/hex.hpp"

#include <sodium.h>

#include <algorithm>
#include <stdexcept>

namespace trustci {

bool Digest::is_zero() const {
  return std::all_of(value.begin(), value.end(), [](uint8_t b) { return b == 0; });
}

std::string Digest::hex() const {
  return to_hex(std::span<const uint8_t>(value.data(), value.size()));
}

Digest Digest::from_hex(std::string_view hex) {
  std::vector<uint8_t> bytes = trustci::from_hex(hex);
  if (bytes.size() != kSize) {
    throw std::invalid_argument("digest must be exactly 32 bytes");
  }
  Digest d;
  std::copy(bytes.begin(), bytes.end(), d.value.begin());
  return d;
}

Digest sha256(std::span<const uint8_t> bytes) {
  Digest d;
  crypto_hash_sha256(d.value.data(), bytes.data(), bytes.size());
  return d;
}

Digest sha256(std::string_view bytes) {
  return sha256(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(bytes.data()), bytes.size()));
}

Digest hash_canonical(const Value& value) {
  return sha256(canonical_encode(value));
}

void to_json(Value& j, const Digest& d) {
  j = Value{{"algorithm", kDigestAlgorithm}, {"value", d.hex()}};
}

void from_json(const Value& j, Digest& d) {
  if (j.at("algorithm").get<std::string>() != kDigestAlgorithm) {
    throw std::invalid_argument("unsupported digest algorithm");
  }
  d = Digest::from_hex(j.at("value").get<std::string>());
}

}  // namespace trustci
