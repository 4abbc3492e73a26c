// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#include "trustci/attestation.hpp"

#include "trustci/hex.hpp"

#include <algorithm>

namespace trustci {

Digest measure_digests(const Digest& task_digest, const Value& env_descriptor) {
  return hash_canonical(Value{{"environment", env_descriptor}, {"task_digest", task_digest}});
}

Digest measure(const TaskSpec& task, const Value& env_descriptor) {
  return measure_digests(hash_canonical(Value(task)), env_descriptor);
}

ReferenceEnvironment make_reference_environment(const TaskSpec& task, Value descriptor,
                                                std::vector<Digest> allowed_tee_roots) {
  ReferenceEnvironment env;
  env.task_digest = hash_canonical(Value(task));
  env.descriptor = std::move(descriptor);
  env.allowed_tee_roots = std::move(allowed_tee_roots);
  env.expected_measurement = measure_digests(env.task_digest, env.descriptor);
  env.env_id = hash_canonical(Value{
      {"allowed_tee_roots", env.allowed_tee_roots},
      {"descriptor", env.descriptor},
      {"task_digest", env.task_digest},
  });
  return env;
}

Digest quote_payload_digest(const AttestationQuote& quote) {
  std::string preimage = quote.measurement.raw();
  preimage += quote.report_data.raw();
  preimage.append(reinterpret_cast<const char*>(quote.nonce.data()), quote.nonce.size());
  return sha256(preimage);
}

bool quote_signature_valid(const AttestationQuote& quote, const Keystore& keystore) {
  const KeyRecord* key = keystore.find(quote.tee_key_id);
  if (key == nullptr || key->role != KeyRole::TeeIdentity) {
    return false;
  }
  return verify_digest_raw(quote_payload_digest(quote), quote.quote_signature, key->public_key);
}

bool tee_chain_valid(const AttestationQuote& quote, const ReferenceEnvironment& env, const Keystore& keystore) {
  const KeyRecord* key = keystore.find(quote.tee_key_id);
  if (key == nullptr || key->role != KeyRole::TeeIdentity || !key->cert.has_value()) {
    return false;
  }
  const auto& roots = env.allowed_tee_roots;
  if (std::find(roots.begin(), roots.end(), key->cert->endorser_key_id) == roots.end()) {
    return false;
  }
  return verify_key_endorsement(*key, keystore);
}

void to_json(Value& j, const ReferenceEnvironment& e) {
  j = Value{
      {"allowed_tee_roots", e.allowed_tee_roots},
      {"descriptor", e.descriptor},
      {"env_id", e.env_id},
      {"expected_measurement", e.expected_measurement},
      {"task_digest", e.task_digest},
  };
}

void from_json(const Value& j, ReferenceEnvironment& e) {
  e.allowed_tee_roots = j.at("allowed_tee_roots").get<std::vector<Digest>>();
  e.descriptor = j.at("descriptor");
  e.env_id = j.at("env_id").get<Digest>();
  e.expected_measurement = j.at("expected_measurement").get<Digest>();
  e.task_digest = j.at("task_digest").get<Digest>();
}

void to_json(Value& j, const AttestationQuote& q) {
  j = Value{
      {"measurement", q.measurement},
      {"nonce", to_hex(std::span<const uint8_t>(q.nonce.data(), q.nonce.size()))},
      {"quote_signature", to_hex(q.quote_signature)},
      {"report_data", q.report_data},
      {"tee_key_id", q.tee_key_id},
  };
}

void from_json(const Value& j, AttestationQuote& q) {
  q.measurement = j.at("measurement").get<Digest>();
  auto nonce = from_hex(j.at("nonce").get<std::string>());
  if (nonce.size() != q.nonce.size()) {
    throw std::invalid_argument("quote nonce must be 16 bytes");
  }
  std::copy(nonce.begin(), nonce.end(), q.nonce.begin());
  q.quote_signature = from_hex(j.at("quote_signature").get<std::string>());
  q.report_data = j.at("report_data").get<Digest>();
  q.tee_key_id = j.at("tee_key_id").get<Digest>();
}

}  // namespace trustci
