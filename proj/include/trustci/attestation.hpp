// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/keys.hpp"
#include "trustci/task.hpp"

#include <array>
#include <vector>

namespace trustci {

// Expected state of a TEE-backed execution environment: which measurement a
// launched instance must report and which manufacturer roots may endorse its
// identity key.
struct ReferenceEnvironment {
  Digest env_id;
  Digest task_digest;            // digest of the canonical TaskSpec
  Value descriptor;              // environment labels etc., canonical-encodable
  Digest expected_measurement;   // recomputes from task_digest + descriptor
  std::vector<Digest> allowed_tee_roots;
};

// Measurement of a task in an environment: digest of the canonical pairing
// of the task's content digest with the environment descriptor.
Digest measure(const TaskSpec& task, const Value& env_descriptor);
Digest measure_digests(const Digest& task_digest, const Value& env_descriptor);

ReferenceEnvironment make_reference_environment(const TaskSpec& task, Value descriptor,
                                                std::vector<Digest> allowed_tee_roots);

// Signed statement by a TEE identity key binding its measurement to the
// evidence it executed over (report_data).
struct AttestationQuote {
  Digest tee_key_id;
  Digest measurement;
  Digest report_data;
  std::array<uint8_t, 16> nonce{};
  std::vector<uint8_t> quote_signature;  // over sha256(measurement || report_data || nonce)
};

Digest quote_payload_digest(const AttestationQuote& quote);

// Signature check only; measurement/report_data comparisons live in f_attest.
bool quote_signature_valid(const AttestationQuote& quote, const Keystore& keystore);

// The quote's key chains to one of the environment's allowed roots.
bool tee_chain_valid(const AttestationQuote& quote, const ReferenceEnvironment& env, const Keystore& keystore);

void to_json(Value& j, const ReferenceEnvironment& e);
void from_json(const Value& j, ReferenceEnvironment& e);
void to_json(Value& j, const AttestationQuote& q);
void from_json(const Value& j, AttestationQuote& q);

}  // namespace trustci
