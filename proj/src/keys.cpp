// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustci/keys.hpp"

#include "trustci/hex.hpp"

#include <sodium.h>

#include <fstream>
#include <sstream>

namespace trustci {

namespace {

struct SodiumInit {
  SodiumInit() {
    if (sodium_init() < 0) {
      throw std::runtime_error("libsodium initialization failed");
    }
  }
};
const SodiumInit sodium_init_once;

KeyRecord finish_keygen(KeyRole role, const KeyRecord* endorser, std::vector<uint8_t> pk, std::vector<uint8_t> sk) {
  KeyRecord rec;
  rec.role = role;
  rec.public_key = std::move(pk);
  rec.private_key = std::move(sk);
  rec.key_id = sha256(std::span<const uint8_t>(rec.public_key.data(), rec.public_key.size()));
  if (role == KeyRole::TeeIdentity) {
    // endorser checked by the callers before key material was generated
    EndorsementCert cert;
    cert.endorser_key_id = endorser->key_id;
    cert.signature = sign_digest_raw(endorsement_payload_digest(rec.key_id, rec.role), *endorser);
    rec.cert = std::move(cert);
  }
  return rec;
}

void require_endorser(KeyRole role, const KeyRecord* endorser) {
  if (role != KeyRole::TeeIdentity) {
    return;
  }
  if (endorser == nullptr || endorser->role != KeyRole::ManufacturerRoot || !endorser->has_private()) {
    throw MissingEndorser("tee-identity keys require a manufacturer-root endorser");
  }
}

}  // namespace

std::string to_string(KeyRole role) {
  switch (role) {
    case KeyRole::Actor: return "actor";
    case KeyRole::System: return "system";
    case KeyRole::TeeIdentity: return "tee-identity";
    case KeyRole::ManufacturerRoot: return "manufacturer-root";
  }
  throw std::logic_error("bad KeyRole");
}

KeyRole key_role_from_string(std::string_view s) {
  if (s == "actor") return KeyRole::Actor;
  if (s == "system") return KeyRole::System;
  if (s == "tee-identity") return KeyRole::TeeIdentity;
  if (s == "manufacturer-root") return KeyRole::ManufacturerRoot;
  throw std::invalid_argument("unknown key role: " + std::string(s));
}

KeyRecord KeyRecord::public_part() const {
  KeyRecord copy = *this;
  copy.private_key.reset();
  return copy;
}

const KeyRecord* Keystore::find(const Digest& key_id) const {
  auto it = records_.find(key_id);
  return it == records_.end() ? nullptr : &it->second;
}

const KeyRecord& Keystore::require(const Digest& key_id) const {
  const KeyRecord* rec = find(key_id);
  if (rec == nullptr) {
    throw UnknownSigner("key not in keystore: " + key_id.hex());
  }
  return *rec;
}

void Keystore::add(KeyRecord record) {
  records_[record.key_id] = std::move(record);
}

Keystore Keystore::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open keystore: " + file.string());
  }
  Keystore ks;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ks.add(canonical_parse(line).get<KeyRecord>());
  }
  return ks;
}

void Keystore::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write keystore: " + file.string());
  }
  for (const auto& [id, rec] : records_) {
    out << canonical_encode(Value(rec)) << '\n';
  }
}

KeyRecord keygen(KeyRole role, const KeyRecord* endorser) {
  require_endorser(role, endorser);
  std::vector<uint8_t> pk(crypto_sign_PUBLICKEYBYTES);
  std::vector<uint8_t> sk(crypto_sign_SECRETKEYBYTES);
  crypto_sign_keypair(pk.data(), sk.data());
  return finish_keygen(role, endorser, std::move(pk), std::move(sk));
}

KeyRecord keygen_seeded(KeyRole role, const KeyRecord* endorser, const std::array<uint8_t, 32>& seed) {
  require_endorser(role, endorser);
  std::vector<uint8_t> pk(crypto_sign_PUBLICKEYBYTES);
  std::vector<uint8_t> sk(crypto_sign_SECRETKEYBYTES);
  crypto_sign_seed_keypair(pk.data(), sk.data(), seed.data());
  return finish_keygen(role, endorser, std::move(pk), std::move(sk));
}

SignatureEnvelope sign(const Digest& payload_digest, const KeyRecord& key) {
  SignatureEnvelope env;
  env.signer_key_id = key.key_id;
  env.payload_digest = payload_digest;
  env.signature = sign_digest_raw(payload_digest, key);
  return env;
}

bool verify_signature(const SignatureEnvelope& env, const Digest& payload_digest, const Keystore& keystore) {
  const KeyRecord& signer = keystore.require(env.signer_key_id);
  if (env.payload_digest != payload_digest) {
    return false;
  }
  return verify_digest_raw(payload_digest, env.signature, signer.public_key);
}

std::vector<uint8_t> sign_digest_raw(const Digest& digest, const KeyRecord& key) {
  if (!key.has_private()) {
    throw MissingPrivateKey("key has no signing half: " + key.key_id.hex());
  }
  std::vector<uint8_t> sig(crypto_sign_BYTES);
  unsigned long long sig_len = 0;
  crypto_sign_detached(sig.data(), &sig_len, digest.value.data(), digest.value.size(), key.private_key->data());
  sig.resize(sig_len);
  return sig;
}

bool verify_digest_raw(const Digest& digest, std::span<const uint8_t> signature, std::span<const uint8_t> public_key) {
  if (signature.size() != crypto_sign_BYTES || public_key.size() != crypto_sign_PUBLICKEYBYTES) {
    return false;
  }
  return crypto_sign_verify_detached(signature.data(), digest.value.data(), digest.value.size(), public_key.data()) == 0;
}

Digest endorsement_payload_digest(const Digest& key_id, KeyRole role) {
  return hash_canonical(Value{{"key_id", key_id}, {"role", to_string(role)}});
}

bool verify_key_endorsement(const KeyRecord& key, const Keystore& keystore) {
  if (key.role != KeyRole::TeeIdentity) {
    return true;  // only tee-identity keys carry endorsements
  }
  if (!key.cert.has_value()) {
    return false;
  }
  const KeyRecord* root = keystore.find(key.cert->endorser_key_id);
  if (root == nullptr || root->role != KeyRole::ManufacturerRoot) {
    return false;
  }
  return verify_digest_raw(endorsement_payload_digest(key.key_id, key.role), key.cert->signature, root->public_key);
}

void to_json(Value& j, const EndorsementCert& c) {
  j = Value{{"endorser_key_id", c.endorser_key_id}, {"signature", to_hex(c.signature)}};
}

void from_json(const Value& j, EndorsementCert& c) {
  c.endorser_key_id = j.at("endorser_key_id").get<Digest>();
  c.signature = from_hex(j.at("signature").get<std::string>());
}

void to_json(Value& j, const KeyRecord& k) {
  j = Value{
      {"key_id", k.key_id},
      {"public_key", to_hex(k.public_key)},
      {"role", to_string(k.role)},
  };
  if (k.private_key) {
    j["private_key"] = to_hex(*k.private_key);
  }
  if (k.cert) {
    j["cert"] = *k.cert;
  }
}

void from_json(const Value& j, KeyRecord& k) {
  k.key_id = j.at("key_id").get<Digest>();
  k.public_key = from_hex(j.at("public_key").get<std::string>());
  k.role = key_role_from_string(j.at("role").get<std::string>());
  k.private_key.reset();
  k.cert.reset();
  if (j.contains("private_key")) {
    k.private_key = from_hex(j.at("private_key").get<std::string>());
  }
  if (j.contains("cert")) {
    k.cert = j.at("cert").get<EndorsementCert>();
  }
}

void to_json(Value& j, const SignatureEnvelope& s) {
  j = Value{
      {"payload_digest", s.payload_digest},
      {"signature", to_hex(s.signature)},
      {"signer_key_id", s.signer_key_id},
  };
}

void from_json(const Value& j, SignatureEnvelope& s) {
  s.payload_digest = j.at("payload_digest").get<Digest>();
  s.signature = from_hex(j.at("signature").get<std::string>());
  s.signer_key_id = j.at("signer_key_id").get<Digest>();
}

}  // namespace trustci
