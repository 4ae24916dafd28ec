// Copyright 2026 The paulilearn Authors
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

#ifndef PAULILEARN_BOUNDS_H
#define PAULILEARN_BOUNDS_H

#include <functional>
#include <optional>
#include <string>

namespace paulilearn {

/// f(e) = 1/2 [ (2/(1-e^2))^2 + 8 / ((1-e)^2 (1-2e-e^2)) ], for 0 <= e <= 1/3.
double f_of(double eps0);

enum class LowerBoundMode { Exact, Plotted, Simplified };

LowerBoundMode parse_lower_bound_mode(const std::string &name);

/// Lower bound on channel uses for learning every Pauli eigenvalue to
/// accuracy eps without quantum memory (eps <= 1/6):
///   Exact:      (4^n - 1) / (12 (1 + 2 sqrt(f(2 eps))) 2^n eps^2)
///   Plotted:    0.01  (4^n - 1) / (2^n eps^2)
///   Simplified: 0.005 (4^n - 1) / (2^n eps^2)
double ef_lower_bound(unsigned n, double eps, LowerBoundMode mode);

/// The same for coarse (block geometric-mean) learning with maximum block
/// size C, valid for eps <= 1/(6C). Exact uses f(2 C eps) and divides by C^2;
/// Simplified uses 0.005 / C^2. Plotted is not defined here.
double coarse_lower_bound(unsigned n, double eps, unsigned C, LowerBoundMode mode);

/// (1/6) (2^n - 1)^{1/3}.
double af_previous_lower_bound(unsigned n);

/// ceil(2 eps^-2 ((4F - 1)/3)^{-2n} ln(2/delta)), as an integer-valued
/// double because it overflows 64 bits well inside the crossover range.
double ea_upper_bound(unsigned n, double eps, double delta, double fidelity);

/// Natural logs of the same quantities (ea without the ceiling).
double log_ef_lower_bound(unsigned n, double eps, LowerBoundMode mode);
double log_af_previous_lower_bound(unsigned n);
double log_ea_upper_bound(unsigned n, double eps, double delta, double fidelity);

enum class CrossoverVariant { Previous, Improved };

CrossoverVariant parse_crossover_variant(const std::string &name);

struct CrossoverResult {
    /// Smallest n in 1..kCrossoverScanLimit where the lower bound exceeds the
    /// entanglement-assisted upper bound.
    std::optional<unsigned> n_cross;
    /// Per-qubit growth factors as n grows large.
    double lower_rate = 0;
    double upper_rate = 0;
    /// n -> lower bound / upper bound.
    std::function<double(unsigned)> advantage;
    /// n -> log of the same ratio; finite where the ratio itself overflows.
    std::function<double(unsigned)> log_advantage;
};

inline constexpr unsigned kCrossoverScanLimit = 1000;

/// Previous compares af_previous_lower_bound; Improved compares the plotted
/// ef_lower_bound.
CrossoverResult crossover(double fidelity, double eps, double delta, CrossoverVariant variant);

enum class BoundVariant { EfExact, EfPlotted, EfSimplified, Coarse, AfPrevious, EaUpper };

BoundVariant parse_bound_variant(const std::string &name);
std::string bound_variant_name(BoundVariant v);

struct BoundQuery {
    BoundVariant variant = BoundVariant::EfExact;
    unsigned n = 1;
    double eps = 0.1;
    double delta = 1.0 / 3;
    std::optional<double> fidelity;
    std::optional<unsigned> max_block_size;
};

struct BoundResult {
    BoundQuery query;
    double value = 0;
    /// Upper bounds are shot budgets and hence integers.
    bool integer = false;
    std::string formula;
};

/// Dispatches on the variant; throws std::invalid_argument when a field the
/// variant needs is missing or out of range.
BoundResult evaluate_bound(const BoundQuery &query);

}  // namespace paulilearn

#endif
