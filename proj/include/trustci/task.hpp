// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/digest.hpp"
#include "trustci/enums.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trustci {

// Declarative deterministic task. params name the roles of digests listed in
// input_refs (e.g. "source", "manifest", "cases", "vulndb"); no timestamps,
// no unpinned randomness.
struct TaskSpec {
  std::string task_id;
  TaskKind kind = TaskKind::Build;
  std::vector<Digest> input_refs;
  std::map<std::string, std::string> params;
};

// Linear DAG of tasks with per-task reference-environment placement.
// pipeline_id is the digest of the canonical spec content.
struct PipelineSpec {
  Digest pipeline_id;
  std::vector<TaskSpec> tasks;
  std::vector<Digest> env_refs;  // one ReferenceEnvironment id per task
  Digest policy_id;
};

Digest compute_pipeline_id(const PipelineSpec& spec);
PipelineSpec make_pipeline_spec(std::vector<TaskSpec> tasks, std::vector<Digest> env_refs, const Digest& policy_id);

// Minimal dependency manifest (SBOM stand-in). Entries sorted by
// (name, version), no duplicates.
struct DependencyManifest {
  struct Entry {
    std::string name;
    std::string version;
    Digest content_digest;

    auto operator<=>(const Entry&) const = default;
  };
  std::vector<Entry> entries;
};

DependencyManifest make_manifest(std::vector<DependencyManifest::Entry> entries);

// Local vulnerability database fixture. version_range is "*" (any version)
// or an exact version string; content_digest, when present, matches
// independently of name/version.
struct VulnerabilityRecord {
  std::string id;
  std::string name;
  std::string version_range;
  Severity severity = Severity::Low;
  std::optional<Digest> content_digest;
};

struct VulnerabilityDb {
  std::vector<VulnerabilityRecord> records;
};

struct TaskOutput {
  Digest output_digest;  // hash(canonical report || all input_refs)
  PayloadKind output_kind = PayloadKind::BuildOutput;
  Value report;
};

void to_json(Value& j, const TaskSpec& t);
void from_json(const Value& j, TaskSpec& t);
void to_json(Value& j, const PipelineSpec& p);
void from_json(const Value& j, PipelineSpec& p);
void to_json(Value& j, const DependencyManifest::Entry& e);
void from_json(const Value& j, DependencyManifest::Entry& e);
void to_json(Value& j, const DependencyManifest& m);
void from_json(const Value& j, DependencyManifest& m);
void to_json(Value& j, const VulnerabilityRecord& r);
void from_json(const Value& j, VulnerabilityRecord& r);
void to_json(Value& j, const VulnerabilityDb& db);
void from_json(const Value& j, VulnerabilityDb& db);
void to_json(Value& j, const TaskOutput& o);
void from_json(const Value& j, TaskOutput& o);

}  // namespace trustci
