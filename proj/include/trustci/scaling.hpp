// Copyright 2026 The trustci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "trustci/canonical.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace trustci {

// Per-pipeline-run resource costs.
struct CostRow {
  double workflow_time_min = 0;
  double cpu_s = 0;
  double mem_unit_s = 0;  // seconds per 100 MiB
};

struct UseCaseCost {
  std::string name;
  CostRow without_mechanisms;
  CostRow with_mechanisms;
  int verify_cost_ms = 0;  // consumer-side cryptographic verification
};

// Measured defaults for the three reference use cases.
std::vector<UseCaseCost> builtin_cost_table();
UseCaseCost cost_for_use_case(std::string_view name);

struct ScalingScenario {
  int months = 12;
  int consumer_growth_per_month = 10;
  int releases_per_month = 1;
  UseCaseCost cost;
  // When set, consumers verify every release of the month instead of only
  // the newest one.
  bool verify_back_catalog = false;
};

struct MonthPoint {
  int month = 0;
  long consumers = 0;
  double untrusted_monthly_min = 0;
  double untrusted_cumulative_min = 0;
  double trusted_monthly_min = 0;
  double trusted_cumulative_min = 0;
  double producer_cumulative_min = 0;  // producer-side share of the trusted cost
  double untrusted_cumulative_cpu_s = 0;
  double trusted_cumulative_cpu_s = 0;
  double untrusted_cumulative_mem_unit_s = 0;
  double trusted_cumulative_mem_unit_s = 0;
};

struct ScalingResult {
  ScalingScenario scenario;
  std::vector<MonthPoint> points;
  std::optional<int> crossover_month;  // first month with trusted < untrusted cumulative
};

// Consumer-growth amortization model: consumers(m) = growth * m; each
// consumer of the untrusted model rebuilds every release, while the trusted
// model runs the pipeline once per release and charges consumers only the
// verification cost.
ScalingResult simulate_scaling(const ScalingScenario& scenario);

void write_cost_csv(const ScalingResult& result, const std::filesystem::path& file);
void write_cost_svg(const ScalingResult& result, const std::filesystem::path& file);
Value scaling_to_json(const ScalingResult& result);

}  // namespace trustci
