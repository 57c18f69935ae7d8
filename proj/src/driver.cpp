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

#include "vqls/driver.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include <Eigen/LU>

#include "vqls/random.hpp"

namespace vqls {

void RunConfig::validate() const {
    if (max_iters < 1) {
        throw std::invalid_argument("max_iters must be >= 1");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw std::invalid_argument("threshold must lie in (0, 1)");
    }
    if (!(optimizer.lr > 0.0)) {
        throw std::invalid_argument("learning rate must be positive");
    }
}

double RunTrace::total_ms() const {
    return std::accumulate(wall_ms.begin(), wall_ms.end(), 0.0);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class Stepper {
  public:
    Stepper(const OptimizerConfig &cfg, std::size_t size)
        : cfg_(cfg), m_(size, 0.0), v_(size, 0.0) {}

    void step(std::span<double> params, const std::vector<double> &grad) {
        if (cfg_.kind == OptimizerKind::GradientDescent) {
            for (std::size_t k = 0; k < params.size(); ++k) {
                params[k] -= cfg_.lr * grad[k];
            }
            return;
        }
        ++t_;
        const double c1 = 1.0 - std::pow(cfg_.beta1, t_);
        const double c2 = 1.0 - std::pow(cfg_.beta2, t_);
        for (std::size_t k = 0; k < params.size(); ++k) {
            m_[k] = cfg_.beta1 * m_[k] + (1.0 - cfg_.beta1) * grad[k];
            v_[k] = cfg_.beta2 * v_[k] + (1.0 - cfg_.beta2) * grad[k] * grad[k];
            const double m_hat = m_[k] / c1;
            const double v_hat = v_[k] / c2;
            params[k] -= cfg_.lr * m_hat / (std::sqrt(v_hat) + cfg_.eps);
        }
    }

  private:
    OptimizerConfig cfg_;
    std::vector<double> m_;
    std::vector<double> v_;
    int t_ = 0;
};

} // namespace

RunTrace optimize(const CostModel &model, const ParamSet &p0, const RunConfig &cfg) {
    cfg.validate();
    const LinearSystem &sys = model.system();
    if (p0.qubits() != sys.qubits()) {
        throw std::invalid_argument("optimize: ParamSet qubit count does not match the system");
    }
    RunTrace trace;
    trace.instance = sys.id();
    trace.qubits = sys.qubits();
    trace.costs.reserve(static_cast<std::size_t>(cfg.max_iters) + 1);
    trace.wall_ms.reserve(static_cast<std::size_t>(cfg.max_iters) + 1);

    ParamSet params = p0;
    Stepper stepper(cfg.optimizer, params.size());
    int iter = 0;
    try {
        auto start = Clock::now();
        CostWithGradient cur = cost_and_gradient(model, params, cfg.cost_kind);
        trace.costs.push_back(cur.cost.normalized);
        trace.wall_ms.push_back(ms_since(start));
        if (cur.cost.normalized < cfg.threshold) {
            trace.converged_at = 0;
        }
        for (iter = 1; iter <= cfg.max_iters && !trace.converged_at; ++iter) {
            start = Clock::now();
            stepper.step(params.flat(), cur.gradient);
            if (iter < cfg.max_iters) {
                cur = cost_and_gradient(model, params, cfg.cost_kind);
            } else {
                cur.cost = model.evaluate(cfg.cost_kind, params);
            }
            trace.costs.push_back(cur.cost.normalized);
            trace.wall_ms.push_back(ms_since(start));
            if (cur.cost.normalized < cfg.threshold) {
                trace.converged_at = iter;
            }
        }
    } catch (const DegenerateCostError &e) {
        throw DegenerateCostError(std::string(e.what()) + " at iteration " +
                                  std::to_string(std::max(iter, 0)) + " of instance " + sys.id());
    }
    trace.final_params = params;
    return trace;
}

RunTrace optimize(const LinearSystem &sys, const ParamSet &p0, const RunConfig &cfg) {
    return optimize(CostModel(sys), p0, cfg);
}

std::optional<int> steps_to_threshold(const std::vector<double> &costs, double gamma) {
    for (std::size_t k = 0; k < costs.size(); ++k) {
        if (costs[k] < gamma) {
            return static_cast<int>(k);
        }
    }
    return std::nullopt;
}

std::optional<int> steps_to_threshold(const RunTrace &t, double gamma) {
    return steps_to_threshold(t.costs, gamma);
}

CVector classical_solution(const LinearSystem &sys) {
    const Eigen::PartialPivLU<CMatrix> lu(sys.matrix());
    const double rcond = lu.rcond();
    if (!(rcond * 1e12 >= 1.0)) {
        throw std::domain_error("matrix is singular to working precision (condition estimate " +
                                std::to_string(rcond > 0 ? 1.0 / rcond : INFINITY) + ")");
    }
    CVector x = lu.solve(sys.rhs());
    return x / x.norm();
}

double solution_fidelity(const LinearSystem &sys, const ParamSet &p) {
    const CVector target = classical_solution(sys);
    const StateVector x = ansatz_state(p);
    return std::min(1.0, std::norm(target.dot(x.amplitudes())));
}

LabelResult label_instance(const LinearSystem &sys, const RunConfig &cfg, int restarts,
                           std::uint64_t seed) {
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be >= 1");
    }
    const CostModel model(sys);
    std::optional<LabelResult> best;
    std::vector<double> finals;
    std::string last_error;
    for (int r = 0; r < restarts; ++r) {
        const ParamSet p0 = init_uniform(sys.qubits(), derive_seed(seed, static_cast<std::uint64_t>(r)));
        try {
            const RunTrace t = optimize(model, p0, cfg);
            finals.push_back(t.final_cost());
            if (!best || t.final_cost() < best->final_cost) {
                best = LabelResult{t.final_params, t.final_cost(), t.initial_cost(), t.converged_at, {}};
            }
        } catch (const DegenerateCostError &e) {
            finals.push_back(std::numeric_limits<double>::quiet_NaN());
            last_error = e.what();
        }
    }
    if (!best) {
        throw DegenerateCostError("every restart hit a degenerate cost: " + last_error);
    }
    best->restart_final_costs = std::move(finals);
    return *best;
}

double lower_quantile(std::vector<double> values, double p) {
    if (values.empty()) {
        throw std::invalid_argument("quantile of an empty sample");
    }
    std::sort(values.begin(), values.end());
    const auto idx = static_cast<std::size_t>(std::floor(p * static_cast<double>(values.size() - 1)));
    return values[idx];
}

std::vector<SummaryRow> summarize(const std::vector<RunTrace> &traces) {
    if (traces.empty()) {
        throw std::invalid_argument("summarize needs at least one trace");
    }
    std::map<std::pair<std::string, int>, std::vector<const RunTrace *>> groups;
    for (const auto &t : traces) {
        groups[{t.strategy, t.qubits}].push_back(&t);
    }
    std::vector<SummaryRow> rows;
    for (const auto &[key, members] : groups) {
        SummaryRow row;
        row.strategy = key.first;
        row.qubits = key.second;
        row.n = members.size();
        std::vector<double> init, fin, steps;
        double ms = 0.0;
        for (const RunTrace *t : members) {
            init.push_back(t->initial_cost());
            fin.push_back(t->final_cost());
            if (t->converged_at) {
                steps.push_back(*t->converged_at);
            }
            ms += t->total_ms();
        }
        row.median_init = lower_quantile(init, 0.5);
        row.q1_init = lower_quantile(init, 0.25);
        row.q3_init = lower_quantile(init, 0.75);
        row.median_final = lower_quantile(fin, 0.5);
        if (!steps.empty()) {
            row.median_steps = lower_quantile(steps, 0.5);
        }
        row.converge_rate = static_cast<double>(steps.size()) / static_cast<double>(row.n);
        row.mean_ms = ms / static_cast<double>(row.n);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

std::string format_ms(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
    return std::string(buf, res.ptr);
}

} // namespace

void write_trace_csv(std::ostream &out, const std::vector<RunTrace> &traces) {
    out << "instance,strategy,qubits,iter,cost,wall_ms\n";
    for (const auto &t : traces) {
        for (std::size_t k = 0; k < t.costs.size(); ++k) {
            out << t.instance << ',' << t.strategy << ',' << t.qubits << ',' << k << ','
                << format_double(t.costs[k]) << ',' << format_ms(t.wall_ms[k]) << '\n';
        }
    }
}

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows) {
    out << "strategy,qubits,n,median_init,q1_init,q3_init,median_final,median_steps,"
           "converge_rate,mean_ms\n";
    for (const auto &r : rows) {
        out << r.strategy << ',' << r.qubits << ',' << r.n << ',' << format_double(r.median_init)
            << ',' << format_double(r.q1_init) << ',' << format_double(r.q3_init) << ','
            << format_double(r.median_final) << ','
            << (r.median_steps ? format_double(*r.median_steps) : std::string()) << ','
            << format_double(r.converge_rate) << ',' << format_ms(r.mean_ms) << '\n';
    }
}

unsigned bench_threads() {
    if (const char *env = std::getenv("VQLS_BENCH_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(bench_threads(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    const std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace vqls
