// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/evidence.hpp"
#include "trustci/registry.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace trustci {

class Ledger;

struct PolicyParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PolicyIdMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PredicateKind {
  SignerInAllowlist,      // params: {"keys": [key_id hex...]}
  AttestationValid,       // no params
  MeasurementInAllowlist, // params: {"digests": [hex...]}
  TestsAllPass,           // no params
  MaxVulnSeverity,        // params: {"level": "LOW|MEDIUM|HIGH|CRITICAL"}
  DependencyAllowlist,    // params: {"manifests": [hex...]}
  LedgerNotRevoked,       // no params
};

std::string to_string(PredicateKind k);
PredicateKind predicate_from_string(std::string_view s);

struct Rule {
  std::string rule_id;
  std::optional<std::set<uint32_t>> applies_to_stages;      // absent = every stage
  std::optional<std::set<PayloadKind>> applies_to_kinds;    // absent = every kind
  PredicateKind predicate = PredicateKind::AttestationValid;
  Value params = Value::object();
  Action on_fail = Action::Reject;
  bool advisory = false;
};

// Ordered rule set; policy_id is the digest of the canonical rule list.
struct Policy {
  Digest policy_id;
  std::vector<Rule> rules;
};

Digest compute_policy_id(const std::vector<Rule>& rules);
Policy make_policy(std::vector<Rule> rules);

struct PolicyDecision {
  Action action = Action::Proceed;
  std::vector<RuleResult> rule_results;
};

// Everything predicates may consult. Payloads resolve through the registry
// during a run and through the exported bundle during an audit.
struct EvalContext {
  const Keystore* keystore = nullptr;
  const Registry* registry = nullptr;
  const std::map<Digest, std::string>* payloads = nullptr;  // overrides registry lookups
  const Ledger* ledger = nullptr;
  const PipelineSpec* pipeline = nullptr;
  const std::map<Digest, ReferenceEnvironment>* environments = nullptr;

  std::optional<std::string> payload_for(const Digest& digest) const;
};

// f_eval: evaluates every applicable rule in order. The action is the
// on_fail of the first failing non-advisory rule, PROCEED otherwise; the
// decision is wrapped into the returned ActionedEvidence. Pure function of
// its inputs.
std::pair<PolicyDecision, ActionedEvidence> f_eval(const AttestedEvidence& e, const Policy& policy,
                                                   const EvalContext& context);

bool rule_applicable(const Rule& rule, const AttestedEvidence& e);
RuleResult evaluate_rule(const Rule& rule, const AttestedEvidence& e, const EvalContext& context);

Policy load_policy(const std::filesystem::path& file);  // PolicyParseError / PolicyIdMismatch
void save_policy(const Policy& policy, const std::filesystem::path& file);

void to_json(Value& j, const Rule& r);
void from_json(const Value& j, Rule& r);
void to_json(Value& j, const Policy& p);
void from_json(const Value& j, Policy& p);

}  // namespace trustci
