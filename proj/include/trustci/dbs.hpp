// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/evidence.hpp"
#include "trustci/registry.hpp"
#include "trustci/task.hpp"

#include <filesystem>
#include <stdexcept>

namespace trustci {

struct UnresolvedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic build-system step: executes one task over content-addressed
// inputs. Repeated execution with identical inputs yields byte-identical
// reports and output digests.
//
//   build — synthesizes an artifact from the source and manifest digests,
//           stores it, and reports its digest.
//   test  — evaluates the fixture test cases (params["cases"]) against the
//           artifact produced by the predecessor stage.
//   audit — matches the dependency manifest (params["manifest"]) against the
//           vulnerability database (params["vulndb"]).
//
// prev must carry action PROCEED (PreconditionViolated otherwise); every
// input_refs digest must resolve in the store (UnresolvedInput otherwise).
TaskOutput run_task(const TaskSpec& task, const ActionedEvidence& prev, Registry& store);

// Content-addresses a directory snapshot: stores every file plus a canonical
// file-list record (sorted relative paths with per-file digests) and returns
// the record's digest.
Digest ingest_source(const std::filesystem::path& tree, Registry& store);

// Audit matching rule shared with the policy layer: a manifest entry is
// flagged iff its content digest equals a record's digest or its (name,
// version) falls in the record's version_range ("*" or exact).
bool vulnerability_matches(const VulnerabilityRecord& record, const DependencyManifest::Entry& entry);

DependencyManifest load_manifest(const std::filesystem::path& file);
void save_manifest(const DependencyManifest& manifest, const std::filesystem::path& file);
VulnerabilityDb load_vulndb(const std::filesystem::path& file);
void save_vulndb(const VulnerabilityDb& db, const std::filesystem::path& file);

}  // namespace trustci
