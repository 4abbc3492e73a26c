// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/digest.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trustci {

enum class KeyRole { Actor, System, TeeIdentity, ManufacturerRoot };

std::string to_string(KeyRole role);
KeyRole key_role_from_string(std::string_view s);

struct MissingEndorser : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingPrivateKey : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownSigner : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Endorsement by a manufacturer-root key over (key_id, role).
struct EndorsementCert {
  Digest endorser_key_id;
  std::vector<uint8_t> signature;  // Ed25519, 64 bytes
};

struct KeyRecord {
  Digest key_id;  // sha256 of public_key bytes
  KeyRole role = KeyRole::Actor;
  std::vector<uint8_t> public_key;                  // Ed25519, 32 bytes
  std::optional<std::vector<uint8_t>> private_key;  // Ed25519, 64 bytes
  std::optional<EndorsementCert> cert;

  bool has_private() const { return private_key.has_value(); }
  // Copy without the signing half, for publishing to consumers.
  KeyRecord public_part() const;
};

struct SignatureEnvelope {
  Digest signer_key_id;
  Digest payload_digest;
  std::vector<uint8_t> signature;  // over payload_digest.value
};

// In-process key directory (the simulated KMS). Immutable after load except
// for single-writer add(); persisted as one canonical-JSON record per line.
class Keystore {
 public:
  Keystore() = default;

  const KeyRecord* find(const Digest& key_id) const;
  const KeyRecord& require(const Digest& key_id) const;  // throws UnknownSigner
  void add(KeyRecord record);
  std::size_t size() const { return records_.size(); }
  const std::map<Digest, KeyRecord>& records() const { return records_; }

  static Keystore load(const std::filesystem::path& file);
  void save(const std::filesystem::path& file) const;

 private:
  std::map<Digest, KeyRecord> records_;
};

// Fresh Ed25519 keypair. tee-identity requires a manufacturer-root endorser
// and comes back with a cert verifiable against it; throws MissingEndorser
// otherwise.
KeyRecord keygen(KeyRole role, const KeyRecord* endorser = nullptr);

// Deterministic variant for reproducible fixtures.
KeyRecord keygen_seeded(KeyRole role, const KeyRecord* endorser, const std::array<uint8_t, 32>& seed);

SignatureEnvelope sign(const Digest& payload_digest, const KeyRecord& key);

// True iff the envelope's signature is valid for payload_digest under the
// public key registered for signer_key_id. Throws UnknownSigner when the
// signer is absent from the keystore.
bool verify_signature(const SignatureEnvelope& env, const Digest& payload_digest, const Keystore& keystore);

// Low-level detached Ed25519 over a digest, used by attestation quotes.
std::vector<uint8_t> sign_digest_raw(const Digest& digest, const KeyRecord& key);
bool verify_digest_raw(const Digest& digest, std::span<const uint8_t> signature, std::span<const uint8_t> public_key);

// PKI chain: a tee-identity key is endorsed iff its cert verifies under a
// manufacturer-root key present in the keystore.
Digest endorsement_payload_digest(const Digest& key_id, KeyRole role);
bool verify_key_endorsement(const KeyRecord& key, const Keystore& keystore);

void to_json(Value& j, const EndorsementCert& c);
void from_json(const Value& j, EndorsementCert& c);
void to_json(Value& j, const KeyRecord& k);
void from_json(const Value& j, KeyRecord& k);
void to_json(Value& j, const SignatureEnvelope& s);
void from_json(const Value& j, SignatureEnvelope& s);

}  // namespace trustci
