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

#include "vqls/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vqls/corpus.hpp"
#include "vqls/driver.hpp"
#include "vqls/graphenc.hpp"
#include "vqls/init.hpp"
#include "vqls/matrix_market.hpp"
#include "vqls/pauli.hpp"
#include "vqls/problem.hpp"
#include "vqls/random.hpp"

namespace vqls::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Raised for bad user input discovered after parsing.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

/// "4..7" or "4".
std::pair<int, int> parse_range(const std::string &s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int q = std::stoi(s);
            return {q, q};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception &) {
        throw UsageError("bad qubit range '" + s + "' (expected N or A..B)");
    }
}

struct OptimizerFlags {
    std::string cost = "local";
    std::string optimizer = "adam";
    double lr = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    int max_iters = 800;
    double threshold = kDefaultThreshold;
    std::uint64_t seed = 0;

    void attach(CLI::App &cmd) {
        cmd.add_option("--cost", cost, "Cost driving optimization")
            ->check(CLI::IsMember({"global", "local"}))
            ->capture_default_str();
        cmd.add_option("--optimizer", optimizer, "Optimizer")
            ->check(CLI::IsMember({"adam", "gd"}))
            ->capture_default_str();
        cmd.add_option("--lr", lr, "Learning rate")->capture_default_str();
        cmd.add_option("--beta1", beta1, "Adam beta1")->capture_default_str();
        cmd.add_option("--beta2", beta2, "Adam beta2")->capture_default_str();
        cmd.add_option("--eps", eps, "Adam epsilon")->capture_default_str();
        cmd.add_option("--max-iters", max_iters, "Maximum optimizer updates")->capture_default_str();
        cmd.add_option("--threshold", threshold, "Convergence threshold on the cost")
            ->capture_default_str();
        cmd.add_option("--seed", seed, "Base seed")->capture_default_str();
    }

    [[nodiscard]] RunConfig config() const {
        RunConfig cfg;
        cfg.cost_kind = parse_cost_kind(cost);
        cfg.optimizer.kind = optimizer == "adam" ? OptimizerKind::Adam : OptimizerKind::GradientDescent;
        cfg.optimizer.lr = lr;
        cfg.optimizer.beta1 = beta1;
        cfg.optimizer.beta2 = beta2;
        cfg.optimizer.eps = eps;
        cfg.max_iters = max_iters;
        cfg.threshold = threshold;
        cfg.seed = seed;
        try {
            cfg.validate();
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        return cfg;
    }
};

void write_text(const fs::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

/// Version plus the resolved options of the subcommand that ran, usable as --config input.
json stamp(const CLI::App &cmd) {
    return {{"version", version_string()}, {"config", "[" + cmd.get_name() + "]\n" + cmd.config_to_str(true, false)}};
}

// ---------------------------------------------------------------- gen-data

struct GenDataCmd {
    std::string qubits = "4";
    int count = 10;
    double density = 0.01;
    std::uint64_t seed = 0;
    std::string out;

    void attach(CLI::App &app) {
        auto *cmd = app.add_subcommand("gen-data", "Generate a synthetic instance corpus");
        cmd->add_option("--qubits", qubits, "Qubit count or range A..B")->capture_default_str();
        cmd->add_option("--count", count, "Instances per qubit count")->capture_default_str();
        cmd->add_option("--density", density, "Off-diagonal density")->capture_default_str();
        cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
        cmd->add_option("--out", out, "Output corpus directory")->required();
    }

    int run(const CLI::App &app) const {
        const auto [lo, hi] = parse_range(qubits);
        if (lo < 2 || hi > kMaxQubits || lo > hi) {
            throw UsageError("qubit range must lie within 2..12");
        }
        if (count < 1) {
            throw UsageError("--count must be >= 1");
        }
        if (!(density > 0.0 && density <= 1.0)) {
            throw UsageError("--density must lie in (0, 1]");
        }
        const fs::path root(out);
        fs::create_directories(root);

        Manifest manifest;
        manifest.version = version_string();
        manifest.config = stamp(app)["config"];
        std::vector<std::uint64_t> streams;
        for (int q = lo; q <= hi; ++q) {
            for (int k = 0; k < count; ++k) {
                char id[32];
                std::snprintf(id, sizeof id, "syn_q%d_%04d", q, k);
                manifest.instances.push_back({id, q, id});
                streams.push_back((static_cast<std::uint64_t>(q) << 32) | static_cast<std::uint64_t>(k));
            }
        }
        const json extra = stamp(app);
        parallel_for(manifest.instances.size(), [&](std::size_t i) {
            const auto &inst = manifest.instances[i];
            const LinearSystem sys =
                gen_random_system(inst.qubits, density, derive_seed(seed, streams[i]), inst.id);
            save_instance(root / inst.dir, sys, extra);
        });

        std::vector<std::string> ids;
        for (const auto &inst : manifest.instances) {
            ids.push_back(inst.id);
        }
        if (ids.size() >= 10) {
            manifest.split = split_dataset(ids, seed);
        } else {
            manifest.split.train = ids;
        }
        manifest.save(root);
        std::cout << "wrote " << ids.size() << " instances to " << root.string() << '\n';
        return kExitOk;
    }
};

// ------------------------------------------------------------------- label

struct LabelCmd {
    std::string corpus;
    int restarts = 3;
    std::string splits = "train,val";
    OptimizerFlags opt;

    void attach(CLI::App &app) {
        auto *cmd = app.add_subcommand("label", "Label corpus instances with optimized parameters");
        cmd->add_option("--corpus", corpus, "Corpus directory")->required();
        cmd->add_option("--restarts", restarts, "Uniform-random restarts per instance")
            ->capture_default_str();
        cmd->add_option("--splits", splits, "Comma-separated splits to label")->capture_default_str();
        opt.attach(*cmd);
    }

    int run(const CLI::App &app) const {
        if (restarts < 1) {
            throw UsageError("--restarts must be >= 1");
        }
        const RunConfig cfg = opt.config();
        const fs::path root(corpus);
        Manifest manifest = Manifest::load(root);
        const auto wanted = split_list(splits);
        const std::set<std::string> wanted_set(wanted.begin(), wanted.end());

        std::vector<const ManifestInstance *> todo;
        for (const auto &inst : manifest.instances) {
            if (wanted_set.contains(manifest.split_of(inst.id)) && !manifest.labels.contains(inst.id)) {
                todo.push_back(&inst);
            }
        }
        manifest.label_config = stamp(app);

        std::mutex mu;
        std::vector<std::string> failures;
        std::size_t unconverged = 0;
        parallel_for(todo.size(), [&](std::size_t i) {
            const ManifestInstance &inst = *todo[i];
            try {
                const LinearSystem sys = load_instance(root / inst.dir);
                const LabelResult r =
                    label_instance(sys, cfg, restarts, derive_seed(cfg.seed, id_hash(inst.id)));
                LabelEntry e;
                e.params.assign(r.params.flat().begin(), r.params.flat().end());
                e.final_cost = r.final_cost;
                e.initial_cost = r.initial_cost;
                e.converged = r.converged_at.has_value();
                e.steps = r.converged_at;
                e.restarts = restarts;
                e.restart_final_costs = r.restart_final_costs;
                const std::lock_guard lock(mu);
                unconverged += e.converged ? 0 : 1;
                manifest.labels[inst.id] = std::move(e);
                manifest.save(root);
            } catch (const DegenerateCostError &e) {
                const std::lock_guard lock(mu);
                failures.push_back(inst.id + ": " + e.what());
            }
        });
        manifest.save(root);
        std::cout << "labeled " << todo.size() - failures.size() << " instances ("
                  << unconverged << " unconverged, flagged)\n";
        for (const auto &f : failures) {
            std::cerr << "degenerate: " << f << '\n';
        }
        return failures.empty() ? kExitOk : kExitPartial;
    }
};

// ----------------------------------------------------------- export-graphs

struct ExportCmd {
    std::string corpus;
    std::string out;

    void attach(CLI::App &app) {
        auto *cmd = app.add_subcommand("export-graphs", "Export the corpus as signed-graph JSONL");
        cmd->add_option("--corpus", corpus, "Corpus directory")->required();
        cmd->add_option("--out", out, "Output JSONL file")->required();
    }

    int run(const CLI::App &app) const {
        const fs::path root(corpus);
        const Manifest manifest = Manifest::load(root);
        std::vector<DatasetRecord> records(manifest.instances.size());
        parallel_for(records.size(), [&](std::size_t i) {
            const auto &inst = manifest.instances[i];
            const LinearSystem sys = load_instance(root / inst.dir);
            json meta = {{"split", manifest.split_of(inst.id)}, {"version", version_string()}};
            std::optional<ParamSet> label;
            if (const auto it = manifest.labels.find(inst.id); it != manifest.labels.end()) {
                label = ParamSet(inst.qubits, it->second.params);
                meta["init_cost"] = it->second.initial_cost;
                meta["final_cost"] = it->second.final_cost;
                meta["steps"] = it->second.steps ? json(*it->second.steps) : json(nullptr);
                meta["converged"] = it->second.converged;
            }
            records[i] = make_record(sys, label, std::move(meta));
        });
        const fs::path out_path(out);
        if (out_path.has_parent_path()) {
            fs::create_directories(out_path.parent_path());
        }
        export_dataset(records, out_path);
        write_text(fs::path(out_path.string() + ".meta.json"), stamp(app).dump(2) + "\n");
        std::cout << "exported " << records.size() << " records to " << out << '\n';
        return kExitOk;
    }
};

// --------------------------------------------------------------------- run

struct RunCmd {
    std::string corpus;
    std::string strategies = "uniform,pca,minnorm,rowmean";
    std::string predictions;
    int seeds = 1;
    std::string out;
    std::string split = "all";
    std::string minnorm_variant = "pinv";
    OptimizerFlags opt;

    void attach(CLI::App &app) {
        auto *cmd = app.add_subcommand("run", "Benchmark initialization strategies on a corpus");
        cmd->add_option("--corpus", corpus, "Corpus directory")->required();
        cmd->add_option("--strategies", strategies, "Comma-separated strategy tags")
            ->capture_default_str();
        cmd->add_option("--predictions", predictions, "Predictions JSONL (for 'predicted')");
        cmd->add_option("--seeds", seeds, "Runs per (instance, strategy)")->capture_default_str();
        cmd->add_option("--out", out, "Output directory")->required();
        cmd->add_option("--split", split, "Instances to run")
            ->check(CLI::IsMember({"all", "train", "val", "test"}))
            ->capture_default_str();
        cmd->add_option("--minnorm-variant", minnorm_variant, "pinv (A^+ b) or adjoint (A^dagger b)")
            ->check(CLI::IsMember({"pinv", "adjoint"}))
            ->capture_default_str();
        opt.attach(*cmd);
    }

    int run(const CLI::App &app) const {
        std::vector<StrategyTag> tags;
        for (const auto &s : split_list(strategies)) {
            try {
                tags.push_back(parse_strategy(s));
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
        }
        if (tags.empty()) {
            throw UsageError("--strategies is empty");
        }
        const bool wants_predicted =
            std::find(tags.begin(), tags.end(), StrategyTag::Predicted) != tags.end();
        if (wants_predicted && predictions.empty()) {
            throw UsageError("strategy 'predicted' requires --predictions");
        }
        if (seeds < 1) {
            throw UsageError("--seeds must be >= 1");
        }
        const RunConfig cfg = opt.config();
        const MinNormVariant variant =
            minnorm_variant == "pinv" ? MinNormVariant::Pseudoinverse : MinNormVariant::ConjugateTranspose;

        const fs::path root(corpus);
        const Manifest manifest = Manifest::load(root);
        std::vector<const ManifestInstance *> instances;
        for (const auto &inst : manifest.instances) {
            if (split == "all" || manifest.split_of(inst.id) == split) {
                instances.push_back(&inst);
            }
        }
        std::optional<PredictionSet> preds;
        if (wants_predicted) {
            preds = PredictionSet::load(predictions);
        }

        struct Task {
            std::size_t instance;
            StrategyTag tag;
            int seed;
        };
        std::vector<Task> tasks;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            for (const auto tag : tags) {
                for (int s = 0; s < seeds; ++s) {
                    tasks.push_back({i, tag, s});
                }
            }
        }
        std::vector<std::optional<RunTrace>> results(tasks.size());
        std::vector<std::string> errors(tasks.size());
        parallel_for(tasks.size(), [&](std::size_t k) {
            const Task &task = tasks[k];
            const ManifestInstance &inst = *instances[task.instance];
            try {
                const LinearSystem sys = load_instance(root / inst.dir);
                const std::uint64_t inst_seed = derive_seed(cfg.seed, id_hash(inst.id));
                const ParamSet p0 = [&] {
                    switch (task.tag) {
                    case StrategyTag::Uniform:
                        return init_uniform(sys.qubits(), derive_seed(inst_seed, static_cast<std::uint64_t>(task.seed)));
                    case StrategyTag::Pca:
                        return init_pca(sys);
                    case StrategyTag::MinNorm:
                        return init_minnorm(sys, variant);
                    case StrategyTag::RowMean:
                        return init_rowmean(sys);
                    case StrategyTag::Predicted:
                        break;
                    }
                    ParamSet p = preds->at(inst.id);
                    if (p.qubits() != sys.qubits()) {
                        throw std::invalid_argument("prediction has the wrong qubit count");
                    }
                    return p;
                }();
                RunTrace t = optimize(sys, p0, cfg);
                t.strategy = std::string(to_string(task.tag));
                results[k] = std::move(t);
            } catch (const std::exception &e) {
                errors[k] = inst.id + " [" + std::string(to_string(task.tag)) + "]: " + e.what();
            }
        });

        std::vector<RunTrace> traces;
        std::vector<std::string> failures;
        for (std::size_t k = 0; k < tasks.size(); ++k) {
            if (results[k]) {
                traces.push_back(std::move(*results[k]));
            } else {
                failures.push_back(errors[k]);
            }
        }
        const fs::path out_dir(out);
        fs::create_directories(out_dir);
        {
            std::ofstream f(out_dir / "traces.csv", std::ios::binary);
            write_trace_csv(f, traces);
        }
        {
            std::ofstream f(out_dir / "summary.csv", std::ios::binary);
            if (!traces.empty()) {
                write_summary_csv(f, summarize(traces));
            } else {
                write_summary_csv(f, {});
            }
        }
        json meta = stamp(app);
        meta["tasks"] = tasks.size();
        meta["failures"] = failures;
        write_text(out_dir / "run_meta.json", meta.dump(2) + "\n");

        std::cout << "ran " << traces.size() << " traces into " << out_dir.string() << '\n';
        for (const auto &f : failures) {
            std::cerr << "failed: " << f << '\n';
        }
        return failures.empty() ? kExitOk : kExitPartial;
    }
};

// ------------------------------------------------------------------ report

std::vector<RunTrace> read_trace_csv(const fs::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::string line;
    std::getline(in, line);
    if (line != "instance,strategy,qubits,iter,cost,wall_ms") {
        throw ParseError(path.string() + ": unexpected header", 1);
    }
    std::vector<RunTrace> traces;
    std::size_t number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) {
            cols.push_back(c);
        }
        if (cols.size() != 6) {
            throw ParseError("expected 6 columns", number);
        }
        try {
            const int iter = std::stoi(cols[3]);
            if (iter == 0) {
                RunTrace t;
                t.instance = cols[0];
                t.strategy = cols[1];
                t.qubits = std::stoi(cols[2]);
                traces.push_back(std::move(t));
            } else if (traces.empty() || iter != static_cast<int>(traces.back().costs.size())) {
                throw ParseError("iteration index out of sequence", number);
            }
            traces.back().costs.push_back(std::stod(cols[4]));
            traces.back().wall_ms.push_back(std::stod(cols[5]));
        } catch (const std::logic_error &) {
            throw ParseError("non-numeric field", number);
        }
    }
    return traces;
}

struct ReportCmd {
    std::string runs;
    std::string out;
    std::string baseline = "uniform";
    double threshold = kDefaultThreshold;

    void attach(CLI::App &app) {
        auto *cmd = app.add_subcommand("report", "Aggregate run traces into plot-ready tables");
        cmd->add_option("--runs", runs, "Directory holding traces.csv")->required();
        cmd->add_option("--out", out, "Output directory")->required();
        cmd->add_option("--baseline", baseline, "Strategy used as reference for step reduction")
            ->capture_default_str();
        cmd->add_option("--threshold", threshold, "Convergence threshold")->capture_default_str();
    }

    int run(const CLI::App &app) const {
        std::vector<RunTrace> traces = read_trace_csv(fs::path(runs) / "traces.csv");
        if (traces.empty()) {
            throw UsageError("no traces found in " + runs);
        }
        for (auto &t : traces) {
            t.converged_at = steps_to_threshold(t.costs, threshold);
        }
        const fs::path out_dir(out);
        fs::create_directories(out_dir);

        // Initial-loss distribution, one file per qubit count.
        std::map<int, std::vector<const RunTrace *>> by_q;
        for (const auto &t : traces) {
            by_q[t.qubits].push_back(&t);
        }
        for (const auto &[q, members] : by_q) {
            std::ofstream f(out_dir / ("initial_loss_q" + std::to_string(q) + ".csv"), std::ios::binary);
            f << "strategy,instance,initial_cost\n";
            for (const RunTrace *t : members) {
                f << t->strategy << ',' << t->instance << ',' << format_double(t->initial_cost()) << '\n';
            }
        }

        // Mean ± std per iteration; runs that stopped early hold their last value.
        std::map<std::pair<std::string, int>, std::vector<const RunTrace *>> groups;
        for (const auto &t : traces) {
            groups[{t.strategy, t.qubits}].push_back(&t);
        }
        {
            std::ofstream f(out_dir / "series.csv", std::ios::binary);
            f << "strategy,qubits,iter,mean,std,n\n";
            for (const auto &[key, members] : groups) {
                std::size_t len = 0;
                for (const RunTrace *t : members) {
                    len = std::max(len, t->costs.size());
                }
                for (std::size_t k = 0; k < len; ++k) {
                    double sum = 0.0;
                    double sq = 0.0;
                    for (const RunTrace *t : members) {
                        const double v = t->costs[std::min(k, t->costs.size() - 1)];
                        sum += v;
                        sq += v * v;
                    }
                    const double n = static_cast<double>(members.size());
                    const double mean = sum / n;
                    const double var = std::max(0.0, sq / n - mean * mean);
                    f << key.first << ',' << key.second << ',' << k << ',' << format_double(mean)
                      << ',' << format_double(std::sqrt(var)) << ',' << members.size() << '\n';
                }
            }
        }

        const auto rows = summarize(traces);
        {
            std::ofstream f(out_dir / "summary.csv", std::ios::binary);
            write_summary_csv(f, rows);
        }
        {
            std::map<int, std::optional<double>> base;
            for (const auto &r : rows) {
                if (r.strategy == baseline) {
                    base[r.qubits] = r.median_steps;
                }
            }
            std::ofstream f(out_dir / "steps_reduction.csv", std::ios::binary);
            f << "strategy,baseline,qubits,median_steps,baseline_median_steps,reduction\n";
            for (const auto &r : rows) {
                if (r.strategy == baseline || !base.contains(r.qubits)) {
                    continue;
                }
                const auto &b = base[r.qubits];
                f << r.strategy << ',' << baseline << ',' << r.qubits << ','
                  << (r.median_steps ? format_double(*r.median_steps) : "") << ','
                  << (b ? format_double(*b) : "") << ',';
                if (r.median_steps && b && *b > 0.0) {
                    f << format_double(1.0 - *r.median_steps / *b);
                }
                f << '\n';
            }
        }
        write_text(out_dir / "report_meta.json", stamp(app).dump(2) + "\n");
        std::cout << "report for " << traces.size() << " traces written to " << out_dir.string() << '\n';
        return kExitOk;
    }
};

// --------------------------------------------------------------- decompose

struct DecomposeCmd {
    std::string matrix;
    std::string out;
    double tol = kPauliPruneTol;

    void attach(CLI::App &app) {
        auto *cmd = app.add_subcommand("decompose", "Write the Pauli decomposition of a Matrix Market file");
        cmd->add_option("--matrix", matrix, "Matrix Market file")->required();
        cmd->add_option("--out", out, "Output JSON file")->required();
        cmd->add_option("--tol", tol, "Pruning tolerance")->capture_default_str();
    }

    int run(const CLI::App &) const {
        const LinearSystem sys = load_matrix_market(matrix, RhsOnes{});
        const PauliDecomposition d = decompose(sys.matrix(), tol);
        write_text(out, decomposition_to_json(d) + "\n");
        std::cout << d.size() << " Pauli terms\n";
        return kExitOk;
    }
};

} // namespace

int run(const std::vector<std::string> &args) {
    CLI::App app{"Variational linear-solver benchmarking lab"};
    app.set_version_flag("--version", version_string());
    app.set_config("--config", "", "TOML/INI config file; [subcommand] sections set its flags");
    app.allow_config_extras(CLI::config_extras_mode::error);
    // Lets --config appear after the subcommand name as well.
    app.fallthrough();
    app.require_subcommand(1);

    GenDataCmd gen;
    LabelCmd label;
    ExportCmd exporter;
    RunCmd runner;
    ReportCmd report;
    DecomposeCmd decomposer;
    gen.attach(app);
    label.attach(app);
    exporter.attach(app);
    runner.attach(app);
    report.attach(app);
    decomposer.attach(app);

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const auto *sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "gen-data") {
            return gen.run(*sub);
        }
        if (name == "label") {
            return label.run(*sub);
        }
        if (name == "export-graphs") {
            return exporter.run(*sub);
        }
        if (name == "run") {
            return runner.run(*sub);
        }
        if (name == "report") {
            return report.run(*sub);
        }
        return decomposer.run(*sub);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace vqls::cli
