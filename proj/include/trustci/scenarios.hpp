// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/engine.hpp"
#include "trustci/verifier.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace trustci {

struct FixtureMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind { S1, S2, S3 };

std::string to_string(ScenarioKind k);
ScenarioKind scenario_from_string(std::string_view s);

struct ScenarioReport {
  ScenarioKind scenario = ScenarioKind::S1;
  std::string expected;
  std::string observed;
  bool pass = false;
  // S3 extras
  std::optional<bool> detected;
  std::optional<uint64_t> first_bad_index;
  std::optional<double> latency_ms;
};

Value scenario_to_json(const ScenarioReport& report);

// A fully materialized on-disk workspace: keystore, ledger, registry,
// policy, environments, pipeline spec, and the fixture blobs the tasks
// consume. Scenario fixtures are seeded, so repeated builds are
// byte-identical.
class Workspace {
 public:
  explicit Workspace(std::filesystem::path root);

  std::filesystem::path root;
  Keystore keystore;
  std::unique_ptr<Registry> registry;
  std::unique_ptr<Ledger> ledger;
  Policy policy;
  std::map<Digest, ReferenceEnvironment> environments;
  RunKeys keys;

  std::filesystem::path keystore_file() const { return root / "keystore.jsonl"; }
  std::filesystem::path ledger_file() const { return root / "ledger.jsonl"; }
  std::filesystem::path policy_file() const { return root / "policy.json"; }
  std::filesystem::path envs_file() const { return root / "envs.jsonl"; }
  std::filesystem::path pipeline_file() const { return root / "pipeline.json"; }

  void persist();                 // keystore + envs (ledger/registry persist themselves)
  static Workspace open(const std::filesystem::path& root);
};

struct FixtureOptions {
  bool vulnerable_dependency = false;  // S2: include a manifest entry the vulndb flags
  int failing_tests = 0;
  uint64_t seed = 1;
  Severity policy_severity_threshold = Severity::Medium;
};

// Builds the standard 3-task (build, test, audit) fixture pipeline with
// seeded keys and environments, writes every file under root, and returns
// the ready workspace.
Workspace build_fixture_workspace(const std::filesystem::path& root, const FixtureOptions& options = {});

// Runs the fixture pipeline in ws; trigger payload and clock are fixed so
// reruns are reproducible.
PipelineRun run_fixture_pipeline(Workspace& ws, const RunOptions& options = {});

// Threat simulations:
//   S1 — tamper the stage-2 TEE after attestation setup; expect an
//        attestation ⊥ abort with no later evidence or commitments.
//   S2 — audit a manifest with a known-vulnerable dependency under a
//        MEDIUM severity gate; expect REJECT on the audit-stage evidence.
//   S3 — complete a clean run, corrupt one committed hash in the ledger
//        file, and expect chain verification to localize the bad index.
ScenarioReport simulate_scenario(ScenarioKind kind, const std::filesystem::path& workspace_root);

}  // namespace trustci
