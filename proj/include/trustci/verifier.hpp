// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/engine.hpp"

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace trustci {

struct BundleMalformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class VerifyMode { Quick, FullAudit };

struct Finding {
  std::string location;      // e.g. "stage 1", "ledger"
  std::string failure_kind;  // e.g. "binding", "signature", "revoked"
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::Quick;
  bool pass = false;
  int checks_performed = 0;  // constant in quick mode, linear in stages for audits
  std::vector<Finding> findings;
  std::chrono::microseconds elapsed{0};
};

// One stage of a parsed bundle.
struct BundleStage {
  uint32_t stage = 0;
  AttestedEvidence attested;
  ActionedEvidence actioned;
  std::string payload;
};

struct Bundle {
  PipelineSpec pipeline;
  std::vector<BundleStage> stages;
};

Bundle parse_bundle(std::string_view bytes);  // BundleMalformed
Bundle load_bundle(const std::filesystem::path& file);

// Consumer-side constant-work verification of a released artifact. The
// ledger supplies the chain segment covering the commitment plus revocation
// state; ledger_head is the consumer's out-of-band pinned head. Performs a
// fixed set of checks independent of pipeline length:
//   (a) the commitment anchors final_act's actioned digest,
//   (b) the entry digest recomputes and the chain segment reaches ledger_head,
//   (c) final_act's signatures, digests, and attestation fields verify,
//   (d) the action is PROCEED under the expected policy,
//   (e) final_act references the artifact,
//   (f) the commitment is not revoked.
VerificationReport quick_verify(const Digest& artifact_digest, const ActionedEvidence& final_act,
                                const LedgerEntry& final_commitment, const Digest& ledger_head,
                                const Policy& policy, const Keystore& keystore, const Ledger& ledger);

// Full chain-of-custody audit: re-verifies every stage's signatures, quote,
// DAG binding, recomputed policy decision, and ledger anchoring back to
// index 0. Passes iff no findings.
VerificationReport full_audit(const Bundle& bundle, const Ledger& ledger, const Policy& policy,
                              const Keystore& keystore, const std::map<Digest, ReferenceEnvironment>& envs);

Value report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace trustci
