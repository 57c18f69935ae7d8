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

// Python bindings. Parameters cross the boundary as (q, 3) float arrays;
// matrices and vectors as complex numpy arrays.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "vqls/cli.hpp"
#include "vqls/corpus.hpp"
#include "vqls/cost.hpp"
#include "vqls/driver.hpp"
#include "vqls/graphenc.hpp"
#include "vqls/init.hpp"
#include "vqls/pauli.hpp"
#include "vqls/problem.hpp"
#include "vqls/simulator.hpp"

namespace py = pybind11;
using namespace vqls;

namespace {

using Angles = py::array_t<double, py::array::c_style | py::array::forcecast>;

ParamSet to_params(int qubits, const Angles &a) {
    if (a.size() != 3 * static_cast<py::ssize_t>(qubits)) {
        throw std::invalid_argument("expected " + std::to_string(3 * qubits) + " angles, got " +
                                    std::to_string(a.size()));
    }
    return ParamSet(qubits, std::vector<double>(a.data(), a.data() + a.size()));
}

py::array_t<double> to_array(const ParamSet &p) {
    py::array_t<double> out({static_cast<py::ssize_t>(p.qubits()), py::ssize_t{3}});
    std::copy(p.flat().begin(), p.flat().end(), out.mutable_data());
    return out;
}

CostKind kind_of(const std::string &s) { return parse_cost_kind(s); }

RunConfig run_config(const std::string &cost, const std::string &optimizer, double lr, int max_iters,
                     double threshold) {
    RunConfig cfg;
    cfg.cost_kind = kind_of(cost);
    if (optimizer == "adam") {
        cfg.optimizer.kind = OptimizerKind::Adam;
    } else if (optimizer == "gd") {
        cfg.optimizer.kind = OptimizerKind::GradientDescent;
    } else {
        throw std::invalid_argument("optimizer must be adam or gd");
    }
    cfg.optimizer.lr = lr;
    cfg.max_iters = max_iters;
    cfg.threshold = threshold;
    cfg.validate();
    return cfg;
}

py::dict trace_dict(const RunTrace &t) {
    py::dict d;
    d["costs"] = t.costs;
    d["wall_ms"] = t.wall_ms;
    d["final_params"] = to_array(t.final_params);
    d["converged_at"] = t.converged_at ? py::object(py::int_(*t.converged_at)) : py::object(py::none());
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Variational linear-solver benchmarking core";
    m.attr("__version__") = version_string();

    py::register_exception<DegenerateCostError>(m, "DegenerateCostError", PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<LinearSystem>(m, "LinearSystem")
        .def(py::init([](const CMatrix &a, const CVector &b, const std::string &id) {
                 return LinearSystem::make(a, b, id);
             }),
             py::arg("matrix"), py::arg("rhs"), py::arg("id") = "")
        .def_property_readonly("qubits", &LinearSystem::qubits)
        .def_property_readonly("dim", &LinearSystem::dim)
        .def_property_readonly("matrix", [](const LinearSystem &s) { return CMatrix(s.matrix()); })
        .def_property_readonly("rhs", [](const LinearSystem &s) { return CVector(s.rhs()); })
        .def_property_readonly("id", &LinearSystem::id)
        .def("nonzeros", &LinearSystem::nonzeros)
        .def("__repr__", [](const LinearSystem &s) {
            return "<LinearSystem id='" + s.id() + "' qubits=" + std::to_string(s.qubits()) + ">";
        });

    m.def("gen_random_system", &gen_random_system, py::arg("qubits"), py::arg("density"), py::arg("seed"),
          py::arg("id") = "");
    m.def("normalize_system", &normalize_system);
    m.def("load_instance", &load_instance, py::arg("dir"));
    m.def(
        "save_instance", [](const std::filesystem::path &dir, const LinearSystem &s) { save_instance(dir, s); },
        py::arg("dir"), py::arg("system"));

    // Pauli decomposition as a list of (label, coefficient) pairs.
    m.def(
        "decompose",
        [](const CMatrix &a, double tol) {
            std::vector<std::pair<std::string, Complex>> out;
            const PauliDecomposition d = decompose(a, tol);
            for (const auto &t : d.terms()) {
                out.emplace_back(t.string.label(), t.coeff);
            }
            return out;
        },
        py::arg("matrix"), py::arg("tol") = kPauliPruneTol);
    m.def(
        "reconstruct",
        [](int qubits, const std::vector<std::pair<std::string, Complex>> &terms) {
            std::vector<PauliTerm> ts;
            for (const auto &[label, c] : terms) {
                ts.push_back({c, PauliString(label)});
            }
            return reconstruct(PauliDecomposition(qubits, std::move(ts)));
        },
        py::arg("qubits"), py::arg("terms"));

    m.def(
        "ansatz_state", [](int qubits, const Angles &a) { return ansatz_state(to_params(qubits, a)).amplitudes(); },
        py::arg("qubits"), py::arg("angles"));
    m.def(
        "cost",
        [](const LinearSystem &s, const Angles &a, const std::string &kind) {
            return CostModel(s).evaluate(kind_of(kind), to_params(s.qubits(), a)).normalized;
        },
        py::arg("system"), py::arg("angles"), py::arg("kind") = "local");
    m.def(
        "cost_gradient",
        [](const LinearSystem &s, const Angles &a, const std::string &kind) {
            const ParamSet grad(s.qubits(), cost_gradient(s, to_params(s.qubits(), a), kind_of(kind)));
            return to_array(grad);
        },
        py::arg("system"), py::arg("angles"), py::arg("kind") = "local");

    m.def(
        "init_uniform", [](int q, std::uint64_t seed) { return to_array(init_uniform(q, seed)); }, py::arg("qubits"),
        py::arg("seed"));
    m.def("init_pca", [](const LinearSystem &s) { return to_array(init_pca(s)); });
    m.def(
        "init_minnorm",
        [](const LinearSystem &s, const std::string &variant) {
            if (variant != "pinv" && variant != "adjoint") {
                throw std::invalid_argument("variant must be pinv or adjoint");
            }
            return to_array(init_minnorm(
                s, variant == "pinv" ? MinNormVariant::Pseudoinverse : MinNormVariant::ConjugateTranspose));
        },
        py::arg("system"), py::arg("variant") = "pinv");
    m.def("init_rowmean", [](const LinearSystem &s) { return to_array(init_rowmean(s)); });

    m.def(
        "optimize",
        [](const LinearSystem &s, const Angles &p0, const std::string &cost, const std::string &optimizer, double lr,
           int max_iters, double threshold) {
            const RunConfig cfg = run_config(cost, optimizer, lr, max_iters, threshold);
            const ParamSet start = to_params(s.qubits(), p0);
            RunTrace t;
            {
                py::gil_scoped_release release;
                t = optimize(s, start, cfg);
            }
            return trace_dict(t);
        },
        py::arg("system"), py::arg("p0"), py::arg("cost") = "local", py::arg("optimizer") = "adam",
        py::arg("lr") = 0.05, py::arg("max_iters") = 800, py::arg("threshold") = kDefaultThreshold);
    m.def(
        "solution_fidelity",
        [](const LinearSystem &s, const Angles &a) { return solution_fidelity(s, to_params(s.qubits(), a)); },
        py::arg("system"), py::arg("angles"));

    // Graph encoding: one JSONL line in the dataset interchange format.
    m.def(
        "dataset_line",
        [](const LinearSystem &s, std::optional<Angles> label) {
            std::optional<ParamSet> p;
            if (label) {
                p = to_params(s.qubits(), *label);
            }
            return record_to_line(make_record(s, p));
        },
        py::arg("system"), py::arg("label") = py::none());
    m.def(
        "load_predictions",
        [](const std::filesystem::path &path) {
            const PredictionSet set = PredictionSet::load(path);
            py::dict out;
            for (const auto &[id, p] : set.entries()) {
                out[py::str(id)] = to_array(p);
            }
            return out;
        },
        py::arg("path"));

    m.def(
        "cli",
        [](const std::vector<std::string> &args) {
            py::gil_scoped_release release;
            std::vector<std::string> argv{"vqls-lab"};
            argv.insert(argv.end(), args.begin(), args.end());
            return cli::run(argv);
        },
        py::arg("args"), "Runs the vqls-lab command line in-process; returns the exit code.");
}
