// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/attestation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trustci {

class Registry;

// Timestamps live here, quarantined from the deterministic task outputs.
struct Metadata {
  int64_t timestamp = 0;  // epoch seconds
  std::string actor_id;
  std::map<std::string, std::string> labels;
};

struct RawEvidence {
  Digest pipeline_id;
  uint32_t stage_index = 0;
  std::string task_id;
  Digest payload_digest;
  PayloadKind payload_kind = PayloadKind::Trigger;
  Metadata metadata;
};

// Raw evidence signed over its DAG binding: bound_digest commits to the
// canonical raw record and the predecessor's actioned digest (all-zero at
// stage 0).
struct AuthenticatedEvidence {
  RawEvidence raw;
  Digest prev_actioned_digest;
  Digest bound_digest;
  SignatureEnvelope signature;
};

// Stage 0 carries no quote; the origin flag marks the e_att^0 == e_auth^0
// wrapper so the protocol loop stays uniformly typed.
struct AttestedEvidence {
  AuthenticatedEvidence auth;
  std::optional<AttestationQuote> quote;
  bool origin = false;
  int64_t attested_at = 0;
};

struct RuleResult {
  std::string rule_id;
  bool passed = false;
  std::string detail;
};

struct ActionedEvidence {
  AttestedEvidence att;
  Action action = Action::Proceed;
  Digest policy_id;
  std::vector<RuleResult> rule_results;
  Digest actioned_digest;  // hash of the canonical fields above
};

// Construct raw evidence from payload bytes without persisting them.
RawEvidence raw_from_payload(const Digest& pipeline_id, uint32_t stage_index, const std::string& task_id,
                             std::string_view payload, PayloadKind payload_kind, Metadata metadata);

// Same, and stores the payload in the registry by digest.
RawEvidence make_raw(const Digest& pipeline_id, uint32_t stage_index, const std::string& task_id,
                     std::string_view payload, PayloadKind payload_kind, Metadata metadata, Registry& registry);

// Signing-key role demanded by the stage: actor at the origin, system (the
// TEE-held key) afterwards.
KeyRole role_for_stage(uint32_t stage_index);

Digest compute_bound_digest(const RawEvidence& raw, const Digest& prev_actioned_digest);

// f_auth: binds raw evidence to its predecessor and signs the binding.
// Returns ⊥ (nullopt) when the key's role is wrong for the stage.
std::optional<AuthenticatedEvidence> f_auth(const RawEvidence& raw, const Digest& prev_actioned_digest,
                                            const KeyRecord& key);

// True iff bound_digest recomputes, the signature verifies, and the signer's
// registered role matches the stage rule.
bool verify_auth(const AuthenticatedEvidence& e, const Keystore& keystore);

// Stage-0 wrapper: attestation is skipped at the origin.
AttestedEvidence origin_attest(const AuthenticatedEvidence& auth, int64_t attested_at);

// Digest anchoring an attested record in the ledger.
Digest attested_digest(const AttestedEvidence& e);

// Digest over the actioned record's covered fields (everything but the
// digest itself).
Digest compute_actioned_digest(const ActionedEvidence& e);

ActionedEvidence make_actioned(AttestedEvidence att, Action action, const Digest& policy_id,
                               std::vector<RuleResult> rule_results);

void to_json(Value& j, const Metadata& m);
void from_json(const Value& j, Metadata& m);
void to_json(Value& j, const RawEvidence& r);
void from_json(const Value& j, RawEvidence& r);
void to_json(Value& j, const AuthenticatedEvidence& a);
void from_json(const Value& j, AuthenticatedEvidence& a);
void to_json(Value& j, const AttestedEvidence& a);
void from_json(const Value& j, AttestedEvidence& a);
void to_json(Value& j, const RuleResult& r);
void from_json(const Value& j, RuleResult& r);
void to_json(Value& j, const ActionedEvidence& a);
void from_json(const Value& j, ActionedEvidence& a);

}  // namespace trustci
