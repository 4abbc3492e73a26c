// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/attestation.hpp"
#include "trustci/evidence.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace trustci {

// Simulated TEE: an in-process sandbox holding a fresh PKI-endorsed identity
// key and the measurement it will report. Confined to the stage executing it.
class TeeInstance {
 public:
  const KeyRecord& identity() const { return identity_; }
  const Digest& measurement() const { return measurement_; }

  // Fresh nonce per quote (deterministic when a seed is installed).
  AttestationQuote produce_quote(const Digest& report_data) const;

  // Deterministic nonce stream for reproducible fixtures.
  void seed_nonces(uint64_t seed);

 private:
  friend TeeInstance tee_launch(const ReferenceEnvironment&, const KeyRecord&, Keystore&, bool);

  KeyRecord identity_;
  Digest measurement_;
  std::optional<uint64_t> nonce_seed_;
  mutable uint64_t nonce_counter_ = 0;
};

// Launches an instance for env: generates an ephemeral tee-identity key
// endorsed by root, registers its public part in the keystore, and adopts
// the environment's expected measurement. tamper=true is the S1 test hook:
// the instance reports a diverged measurement, as if the task or image were
// modified after attestation was set up.
TeeInstance tee_launch(const ReferenceEnvironment& env, const KeyRecord& root, Keystore& keystore,
                       bool tamper = false);

// f_attest: promotes authenticated evidence iff
//   (a) the quote signature is valid,
//   (b) the quoting key chains to an allowed manufacturer root,
//   (c) the quoted measurement equals the environment's expectation,
//   (d) the quote binds this evidence (report_data == bound_digest),
//   (e) the evidence itself verifies (verify_auth).
// Returns ⊥ (nullopt) otherwise; fail_reason receives the first failing
// condition for the audit record.
std::optional<AttestedEvidence> f_attest(const AuthenticatedEvidence& e, const AttestationQuote& quote,
                                         const ReferenceEnvironment& env, const Keystore& keystore,
                                         int64_t attested_at, std::string* fail_reason = nullptr);

}  // namespace trustci
