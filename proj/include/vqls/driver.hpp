// Copyright 2026 The vqlslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Hybrid optimization loop, run traces, labels and benchmark summaries.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vqls/cost.hpp"
#include "vqls/init.hpp"

namespace vqls {

enum class OptimizerKind { Adam, GradientDescent };

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::Adam;
    double lr = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

/// Default convergence threshold γ on the tracked cost.
inline constexpr double kDefaultThreshold = 0.01;

struct RunConfig {
    CostKind cost_kind = CostKind::Local;
    OptimizerConfig optimizer;
    int max_iters = 800;
    double threshold = kDefaultThreshold;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless max_iters >= 1 and 0 < threshold < 1.
    void validate() const;
};

struct RunTrace {
    std::string instance;
    std::string strategy;
    int qubits = 0;
    std::vector<double> costs;   ///< index 0 = cost at p0
    std::vector<double> wall_ms; ///< per entry of costs
    ParamSet final_params{1};
    std::optional<int> converged_at;

    [[nodiscard]] double initial_cost() const { return costs.front(); }
    [[nodiscard]] double final_cost() const { return costs.back(); }
    [[nodiscard]] double total_ms() const;
};

/**
 * Runs the optimizer on cfg.cost_kind from p0. Stops after max_iters
 * updates or as soon as a recorded cost falls below the threshold.
 * DegenerateCostError is rethrown with the iteration index.
 */
RunTrace optimize(const CostModel &model, const ParamSet &p0, const RunConfig &cfg);
RunTrace optimize(const LinearSystem &sys, const ParamSet &p0, const RunConfig &cfg);

/// First index with cost < γ.
std::optional<int> steps_to_threshold(const std::vector<double> &costs, double gamma = kDefaultThreshold);
std::optional<int> steps_to_threshold(const RunTrace &t, double gamma = kDefaultThreshold);

/// |⟨x̂|x(α)⟩|² with x̂ = A⁻¹b / ||A⁻¹b||; throws std::domain_error if cond(A) > 1e12.
double solution_fidelity(const LinearSystem &sys, const ParamSet &p);

/// Normalized classical solution A⁻¹b by dense LU; same conditioning check.
CVector classical_solution(const LinearSystem &sys);

struct LabelResult {
    ParamSet params{1};
    double final_cost = 0.0;
    double initial_cost = 0.0;
    std::optional<int> converged_at;
    std::vector<double> restart_final_costs; ///< NaN for restarts that hit a degenerate cost
};

/**
 * Best-of-restarts optimization from uniform-random starts; restart r uses
 * init_uniform(q, derive_seed(seed, r)).
 */
LabelResult label_instance(const LinearSystem &sys, const RunConfig &cfg, int restarts,
                           std::uint64_t seed);

struct SummaryRow {
    std::string strategy;
    int qubits = 0;
    std::size_t n = 0;
    double median_init = 0.0;
    double q1_init = 0.0;
    double q3_init = 0.0;
    double median_final = 0.0;
    std::optional<double> median_steps; ///< over converged runs only
    double converge_rate = 0.0;
    double mean_ms = 0.0; ///< mean total wall time per run
};

/// Lower-interpolation quantile: sorted[floor(p·(n-1))].
double lower_quantile(std::vector<double> values, double p);

/// Per (strategy, qubits) statistics, rows sorted by (strategy, qubits).
std::vector<SummaryRow> summarize(const std::vector<RunTrace> &traces);

/// CSV header and rows for traces: instance,strategy,qubits,iter,cost,wall_ms.
void write_trace_csv(std::ostream &out, const std::vector<RunTrace> &traces);

/// strategy,qubits,n,median_init,q1_init,q3_init,median_final,median_steps,converge_rate,mean_ms
void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows);

/// Shortest round-trip formatting used for every cost value written to CSV.
std::string format_double(double v);

/// Worker count: VQLS_BENCH_THREADS if set (>= 1), else hardware concurrency.
unsigned bench_threads();

/**
 * Runs fn(0..count-1) across bench_threads() workers. Each index runs
 * exactly once; callers write results by index so output order is stable.
 */
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn);

} // namespace vqls
