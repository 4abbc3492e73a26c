// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/digest.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace trustci {

struct NotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DigestMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RecordKind { Artifact, EvidenceBundle, Policy, EnvDescriptor };

std::string to_string(RecordKind k);
RecordKind record_kind_from_string(std::string_view s);

struct RegistryRecord {
  Digest digest;
  RecordKind kind = RecordKind::Artifact;
  std::string bytes_ref;  // content-store key, relative to the registry root
  std::optional<uint64_t> ledger_index;
};

// Content-addressed artifact/evidence registry: objects/<hex digest> plus a
// metadata index. Writes are idempotent; reads verify the digest before
// returning bytes.
class Registry {
 public:
  explicit Registry(std::filesystem::path root);

  RegistryRecord store(std::string_view bytes, RecordKind kind);
  std::string fetch(const Digest& digest) const;  // NotFound / DigestMismatch
  bool contains(const Digest& digest) const;
  std::optional<RegistryRecord> record(const Digest& digest) const;
  void set_ledger_index(const Digest& digest, uint64_t index);
  std::size_t size() const { return index_.size(); }

  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path object_path(const Digest& digest) const;
  void append_index(const RegistryRecord& rec);

  std::filesystem::path root_;
  std::map<Digest, RegistryRecord> index_;
};

void to_json(Value& j, const RegistryRecord& r);
void from_json(const Value& j, RegistryRecord& r);

}  // namespace trustci
