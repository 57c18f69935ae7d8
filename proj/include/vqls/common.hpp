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
 * Shared numeric aliases, constants and error types.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace vqls {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Largest qubit count handled anywhere in the library (dim 4096).
inline constexpr int kMaxQubits = 12;

/// ⟨ψ|ψ⟩ below this is treated as a degenerate cost evaluation.
inline constexpr double kDegenerateNormSq = 1e-14;

/// Thrown when A|x⟩ (numerically) vanishes, so a normalized cost is 0/0.
class DegenerateCostError : public std::runtime_error {
  public:
    explicit DegenerateCostError(const std::string &what)
        : std::runtime_error(what) {}
};

/// Input-file parse failure; `line()` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, std::size_t line)
        : std::runtime_error(line == 0
                                 ? what
                                 : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// True when n is a positive power of two.
constexpr bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

/// log2 of a power of two.
constexpr int log2_exact(std::size_t n) noexcept {
    int q = 0;
    while ((std::size_t{1} << q) < n) {
        ++q;
    }
    return q;
}

/// Reduces an angle into [0, 2π).
double wrap_angle(double theta) noexcept;

/// Maps t ∈ [0, 1] linearly onto [0, 2π); t = 1 lands on the largest double below 2π.
double unit_to_angle(double t) noexcept;

} // namespace vqls
