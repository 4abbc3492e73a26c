// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trustci {

enum class PayloadKind { Trigger, BuildOutput, TestReport, AuditReport, DeployRecord };

enum class Action { Proceed, Reject, Revoke };

enum class TaskKind { Build, Test, Audit };

enum class Severity { Low, Medium, High, Critical };

inline std::string to_string(PayloadKind k) {
  switch (k) {
    case PayloadKind::Trigger: return "trigger";
    case PayloadKind::BuildOutput: return "build-output";
    case PayloadKind::TestReport: return "test-report";
    case PayloadKind::AuditReport: return "audit-report";
    case PayloadKind::DeployRecord: return "deploy-record";
  }
  throw std::logic_error("bad PayloadKind");
}

inline PayloadKind payload_kind_from_string(std::string_view s) {
  if (s == "trigger") return PayloadKind::Trigger;
  if (s == "build-output") return PayloadKind::BuildOutput;
  if (s == "test-report") return PayloadKind::TestReport;
  if (s == "audit-report") return PayloadKind::AuditReport;
  if (s == "deploy-record") return PayloadKind::DeployRecord;
  throw std::invalid_argument("unknown payload kind: " + std::string(s));
}

inline std::string to_string(Action a) {
  switch (a) {
    case Action::Proceed: return "PROCEED";
    case Action::Reject: return "REJECT";
    case Action::Revoke: return "REVOKE";
  }
  throw std::logic_error("bad Action");
}

inline Action action_from_string(std::string_view s) {
  if (s == "PROCEED") return Action::Proceed;
  if (s == "REJECT") return Action::Reject;
  if (s == "REVOKE") return Action::Revoke;
  throw std::invalid_argument("unknown action: " + std::string(s));
}

inline std::string to_string(TaskKind k) {
  switch (k) {
    case TaskKind::Build: return "build";
    case TaskKind::Test: return "test";
    case TaskKind::Audit: return "audit";
  }
  throw std::logic_error("bad TaskKind");
}

inline TaskKind task_kind_from_string(std::string_view s) {
  if (s == "build") return TaskKind::Build;
  if (s == "test") return TaskKind::Test;
  if (s == "audit") return TaskKind::Audit;
  throw std::invalid_argument("unknown task kind: " + std::string(s));
}

inline std::string to_string(Severity s) {
  switch (s) {
    case Severity::Low: return "LOW";
    case Severity::Medium: return "MEDIUM";
    case Severity::High: return "HIGH";
    case Severity::Critical: return "CRITICAL";
  }
  throw std::logic_error("bad Severity");
}

inline Severity severity_from_string(std::string_view s) {
  if (s == "LOW") return Severity::Low;
  if (s == "MEDIUM") return Severity::Medium;
  if (s == "HIGH") return Severity::High;
  if (s == "CRITICAL") return Severity::Critical;
  throw std::invalid_argument("unknown severity: " + std::string(s));
}

}  // namespace trustci
