// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/evidence.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

namespace trustci {

struct AppendRace : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidEvidence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownCommitment : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EntryKind { Commitment, Revocation };

std::string to_string(EntryKind k);
EntryKind entry_kind_from_string(std::string_view s);

// Hash-chained append-only entry. entry_digest covers every other field;
// prev_entry_digest links to the previous entry (all-zero at index 0).
struct LedgerEntry {
  uint64_t index = 0;
  EntryKind entry_kind = EntryKind::Commitment;
  Digest committed_digest;  // anchored evidence digest, or the revoked entry's digest
  Digest pipeline_id;
  uint32_t stage_index = 0;
  Digest prev_entry_digest;
  Digest entry_digest;
};

Digest compute_entry_digest(const LedgerEntry& e);

struct ChainCheck {
  bool ok = true;
  std::optional<uint64_t> first_bad_index;
};

// Append-only hash-chained ledger persisted as canonical-JSON lines.
// Single serialized writer; readers see a consistent prefix.
class Ledger {
 public:
  explicit Ledger(std::filesystem::path file);

  const std::vector<LedgerEntry>& entries() const { return entries_; }
  Digest head() const;  // entry_digest of the last entry, all-zero when empty

  LedgerEntry append_commitment(const Digest& committed_digest, const Digest& pipeline_id, uint32_t stage_index);
  // Idempotent; throws UnknownCommitment when the target is missing or not a
  // commitment. The reason is surfaced to the caller only (the entry format
  // has no unhashed fields).
  LedgerEntry append_revocation(const LedgerEntry& commitment, const std::string& reason);

  bool is_revoked(const LedgerEntry& commitment) const;
  std::optional<LedgerEntry> latest_commitment(const Digest& pipeline_id) const;

  ChainCheck verify() const;
  static ChainCheck verify_file(const std::filesystem::path& file);

  const std::filesystem::path& file() const { return file_; }

 private:
  LedgerEntry append(EntryKind kind, const Digest& committed_digest, const Digest& pipeline_id, uint32_t stage_index);
  void persist(const LedgerEntry& e);

  std::filesystem::path file_;
  std::vector<LedgerEntry> entries_;
  std::uintmax_t expected_file_size_ = 0;
};

// Anchors an attested record (Alg. 1's f_commit). The evidence must verify:
// authenticated signature plus either a quote or the origin flag.
LedgerEntry f_commit(const AttestedEvidence& e, Ledger& ledger, const Keystore& keystore);

// Marks a prior commitment invalid. Idempotent.
LedgerEntry revoke(const LedgerEntry& commitment, const std::string& reason, Ledger& ledger);

// Recomputes every entry digest and prev link.
ChainCheck verify_chain(const Ledger& ledger);

void to_json(Value& j, const LedgerEntry& e);
void from_json(const Value& j, LedgerEntry& e);

}  // namespace trustci
