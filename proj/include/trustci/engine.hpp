// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/dbs.hpp"
#include "trustci/ledger.hpp"
#include "trustci/policy.hpp"
#include "trustci/tee.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trustci {

enum class RunStatus { Running, Completed, Aborted };

enum class AbortKind { Authentication, Attestation, Policy, Task };

struct AbortInfo {
  uint32_t stage = 0;      // protocol step that aborted (n+1 for the final check)
  AbortKind kind = AbortKind::Policy;
  std::string label;       // e.g. "ABORT: Stage 2 Policy"
  std::string detail;
};

// Durable evidence of one completed stage. The actioned record appears when
// the following stage (or the final check) evaluates this one.
struct StageEvidence {
  RawEvidence raw;
  AuthenticatedEvidence auth;
  AttestedEvidence att;
  std::optional<ActionedEvidence> act;
};

struct PipelineRun {
  PipelineSpec spec;
  RunStatus status = RunStatus::Running;
  std::optional<AbortInfo> abort;
  std::vector<StageEvidence> stages;          // 0..last committed stage
  std::vector<LedgerEntry> commitments;       // one per stage, in stage order
  std::optional<LedgerEntry> feedback_commitment;
  std::optional<ActionedEvidence> final_actioned;
  std::optional<RawEvidence> deploy_record;
  Digest artifact_digest;                     // build output, all-zero if none

  bool completed() const { return status == RunStatus::Completed; }
};

struct RunKeys {
  Digest actor_key_id;
  Digest system_key_id;
  Digest root_key_id;  // manufacturer root endorsing per-stage TEE keys
};

using Clock = std::function<int64_t()>;

struct RunOptions {
  std::string actor_id = "developer";
  std::optional<uint32_t> tamper_stage;  // S1 hook: launch this stage's TEE tampered
  Clock clock;                           // defaults to wall clock
  std::optional<uint64_t> rng_seed;      // deterministic quote nonces
};

// Executes the full protocol loop over spec:
//   init      f_auth(trigger, K_actor), origin wrap, f_commit
//   stage i   f_eval(e_att^{i-1}) -> abort on REJECT/REVOKE (REVOKE also
//             revokes the pipeline's latest commitment); D(t_i, e_act^{i-1})
//             inside a fresh TEE; f_auth with the system key bound to
//             H(e_act^{i-1}); f_attest against Env_ref; f_commit
//   deploy    final f_eval; on PROCEED, f_feedback
// Failures never escape as exceptions: they become aborted-at states.
PipelineRun run_pipeline(std::string_view trigger_payload, const PipelineSpec& spec, const RunKeys& keys,
                         const std::map<Digest, ReferenceEnvironment>& envs, const Policy& policy,
                         Ledger& ledger, Registry& registry, Keystore& keystore, const RunOptions& options = {});

// Deployment feedback: emits a deploy-record referencing the final
// commitment and actioned evidence, stores it in the registry, and anchors
// the final actioned digest in the ledger.
RawEvidence f_feedback(const LedgerEntry& final_commitment, const ActionedEvidence& final_actioned,
                       const Digest& artifact_digest, Registry& registry, Ledger& ledger,
                       PipelineRun& run, int64_t timestamp);

// The deploy-record payload bytes, recomputable by consumers from the final
// actioned digest, the preceding entry digest, and the artifact digest.
std::string deploy_record_payload(const Digest& final_commitment_entry_digest, const Digest& final_actioned_digest,
                                  const Digest& artifact_digest);

// Self-contained evidence bundle: a pipeline-spec line followed by one line
// per stage carrying attested + actioned records and the payload bytes.
std::string export_bundle(const PipelineRun& run, const Registry& registry);

// Run manifest consumed by the verify/audit CLI.
Value run_manifest(const PipelineRun& run);

}  // namespace trustci
