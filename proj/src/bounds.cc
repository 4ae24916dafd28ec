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

#include "paulilearn/bounds.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace paulilearn {

namespace {

constexpr double kPlottedConstant = 0.01;
constexpr double kSimplifiedConstant = 0.005;

void check_unit_open(double v, const char *name) {
    if (!(v > 0 && v < 1)) {
        throw std::invalid_argument(std::string(name) + " must lie in (0, 1), got " + std::to_string(v));
    }
}

void check_n(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("n must be at least 1");
    }
}

// ln(4^n - 1) - n ln 2, stable for large n.
double log_pauli_ratio(unsigned n) {
    return n * std::log(2.0) + std::log1p(-std::pow(4.0, -static_cast<double>(n)));
}

double mode_constant(double eps, LowerBoundMode mode) {
    switch (mode) {
        case LowerBoundMode::Exact:
            return 1 / (12 * (1 + 2 * std::sqrt(f_of(2 * eps))));
        case LowerBoundMode::Plotted:
            return kPlottedConstant;
        case LowerBoundMode::Simplified:
            return kSimplifiedConstant;
    }
    throw std::logic_error("unreachable");
}

double log_bell_base(double fidelity) {
    if (!(fidelity > 0.25 && fidelity <= 1)) {
        throw std::invalid_argument("Bell fidelity must lie in (1/4, 1], got " + std::to_string(fidelity));
    }
    return std::log((4 * fidelity - 1) / 3);
}

}  // namespace

double f_of(double eps0) {
    if (!(eps0 >= 0 && eps0 <= 1.0 / 3)) {
        throw std::invalid_argument("f is defined for 0 <= eps0 <= 1/3, got " + std::to_string(eps0));
    }
    double a = 2 / (1 - eps0 * eps0);
    double b = 8 / ((1 - eps0) * (1 - eps0) * (1 - 2 * eps0 - eps0 * eps0));
    return (a * a + b) / 2;
}

LowerBoundMode parse_lower_bound_mode(const std::string &name) {
    if (name == "exact") {
        return LowerBoundMode::Exact;
    }
    if (name == "plotted") {
        return LowerBoundMode::Plotted;
    }
    if (name == "simplified") {
        return LowerBoundMode::Simplified;
    }
    throw std::invalid_argument("unknown lower bound mode \"" + name + "\"");
}

double log_ef_lower_bound(unsigned n, double eps, LowerBoundMode mode) {
    check_n(n);
    if (!(eps > 0 && eps <= 1.0 / 6)) {
        throw std::invalid_argument("the lower bound needs 0 < eps <= 1/6, got " + std::to_string(eps));
    }
    return std::log(mode_constant(eps, mode)) + log_pauli_ratio(n) - 2 * std::log(eps);
}

double ef_lower_bound(unsigned n, double eps, LowerBoundMode mode) {
    return std::exp(log_ef_lower_bound(n, eps, mode));
}

double coarse_lower_bound(unsigned n, double eps, unsigned C, LowerBoundMode mode) {
    check_n(n);
    if (C == 0) {
        throw std::invalid_argument("block size C must be at least 1");
    }
    if (mode == LowerBoundMode::Plotted) {
        throw std::invalid_argument("the coarse bound has exact and simplified modes only");
    }
    if (!(eps > 0 && eps * 6 * C <= 1)) {
        throw std::invalid_argument("the coarse bound needs 0 < eps <= 1/(6C)");
    }
    double constant = mode == LowerBoundMode::Exact ? 1 / (12 * (1 + 2 * std::sqrt(f_of(2 * C * eps))))
                                                    : kSimplifiedConstant;
    return std::exp(std::log(constant) + log_pauli_ratio(n) - 2 * std::log(eps) - 2 * std::log(double(C)));
}

double log_af_previous_lower_bound(unsigned n) {
    check_n(n);
    // ln(2^n - 1) = n ln 2 + ln(1 - 2^-n).
    return (n * std::log(2.0) + std::log1p(-std::pow(2.0, -static_cast<double>(n)))) / 3 - std::log(6.0);
}

double af_previous_lower_bound(unsigned n) {
    check_n(n);
    return std::cbrt(std::pow(2.0, n) - 1) / 6;
}

double log_ea_upper_bound(unsigned n, double eps, double delta, double fidelity) {
    check_unit_open(eps, "eps");
    check_unit_open(delta, "delta");
    return std::log(2 / (eps * eps) * std::log(2 / delta)) - 2.0 * n * log_bell_base(fidelity);
}

double ea_upper_bound(unsigned n, double eps, double delta, double fidelity) {
    double v = std::exp(log_ea_upper_bound(n, eps, delta, fidelity));
    if (!std::isfinite(v)) {
        throw std::overflow_error("entanglement-assisted bound overflows a double at n = " + std::to_string(n));
    }
    return std::ceil(v);
}

CrossoverVariant parse_crossover_variant(const std::string &name) {
    if (name == "previous") {
        return CrossoverVariant::Previous;
    }
    if (name == "improved") {
        return CrossoverVariant::Improved;
    }
    throw std::invalid_argument("unknown crossover variant \"" + name + "\" (expected previous or improved)");
}

CrossoverResult crossover(double fidelity, double eps, double delta, CrossoverVariant variant) {
    log_ea_upper_bound(1, eps, delta, fidelity);
    bool previous = variant == CrossoverVariant::Previous;
    auto log_lower = [=](unsigned n) {
        return previous ? log_af_previous_lower_bound(n) : log_ef_lower_bound(n, eps, LowerBoundMode::Plotted);
    };
    auto log_upper = [=](unsigned n) {
        // Apply the ceiling wherever it is representable.
        double lu = log_ea_upper_bound(n, eps, delta, fidelity);
        return lu < 40 ? std::log(std::ceil(std::exp(lu))) : lu;
    };
    CrossoverResult out;
    out.lower_rate = previous ? std::cbrt(2.0) : 2.0;
    out.upper_rate = std::exp(-2 * log_bell_base(fidelity));
    out.log_advantage = [=](unsigned n) { return log_lower(n) - log_upper(n); };
    out.advantage = [=](unsigned n) { return std::exp(log_lower(n) - log_upper(n)); };
    for (unsigned n = 1; n <= kCrossoverScanLimit; n++) {
        if (log_lower(n) > log_upper(n)) {
            out.n_cross = n;
            break;
        }
        // Both sides are exponentials in n up to vanishing corrections, and the
        // lower bound's local growth only falls towards lower_rate, so once it
        // is behind with a smaller rate it stays behind.
        if (out.lower_rate <= out.upper_rate && n >= 64) {
            break;
        }
    }
    return out;
}

BoundVariant parse_bound_variant(const std::string &name) {
    if (name == "ef_exact") return BoundVariant::EfExact;
    if (name == "ef_plotted") return BoundVariant::EfPlotted;
    if (name == "ef_simplified") return BoundVariant::EfSimplified;
    if (name == "coarse") return BoundVariant::Coarse;
    if (name == "af_previous") return BoundVariant::AfPrevious;
    if (name == "ea_upper") return BoundVariant::EaUpper;
    throw std::invalid_argument("unknown bound variant \"" + name +
                                "\" (expected ef_exact, ef_plotted, ef_simplified, coarse, af_previous or ea_upper)");
}

std::string bound_variant_name(BoundVariant v) {
    switch (v) {
        case BoundVariant::EfExact:
            return "ef_exact";
        case BoundVariant::EfPlotted:
            return "ef_plotted";
        case BoundVariant::EfSimplified:
            return "ef_simplified";
        case BoundVariant::Coarse:
            return "coarse";
        case BoundVariant::AfPrevious:
            return "af_previous";
        case BoundVariant::EaUpper:
            return "ea_upper";
    }
    throw std::logic_error("unreachable");
}

BoundResult evaluate_bound(const BoundQuery &query) {
    BoundResult r;
    r.query = query;
    switch (query.variant) {
        case BoundVariant::EfExact:
            r.value = ef_lower_bound(query.n, query.eps, LowerBoundMode::Exact);
            r.formula = "(4^n-1)/(12(1+2sqrt(f(2eps)))2^n eps^2)";
            break;
        case BoundVariant::EfPlotted:
            r.value = ef_lower_bound(query.n, query.eps, LowerBoundMode::Plotted);
            r.formula = "0.01(4^n-1)/(2^n eps^2)";
            break;
        case BoundVariant::EfSimplified:
            r.value = ef_lower_bound(query.n, query.eps, LowerBoundMode::Simplified);
            r.formula = "0.005(4^n-1)/(2^n eps^2)";
            break;
        case BoundVariant::Coarse:
            if (!query.max_block_size) {
                throw std::invalid_argument("the coarse bound needs a maximum block size C");
            }
            r.value = coarse_lower_bound(query.n, query.eps, *query.max_block_size, LowerBoundMode::Exact);
            r.formula = "(4^n-1)/(12(1+2sqrt(f(2C eps)))2^n eps^2 C^2)";
            break;
        case BoundVariant::AfPrevious:
            r.value = af_previous_lower_bound(query.n);
            r.formula = "(2^n-1)^(1/3)/6";
            break;
        case BoundVariant::EaUpper:
            if (!query.fidelity) {
                throw std::invalid_argument("the entanglement-assisted bound needs a Bell fidelity");
            }
            r.value = ea_upper_bound(query.n, query.eps, query.delta, *query.fidelity);
            r.integer = true;
            r.formula = "ceil(2 eps^-2 ((4F-1)/3)^(-2n) ln(2/delta))";
            break;
    }
    return r;
}

}  // namespace paulilearn
