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

#include "paulilearn/random_scheme.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "paulilearn/limits.h"

namespace paulilearn {

namespace {

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index c = 0; c < cols; c++) {
        for (Eigen::Index r = 0; r < rows; r++) {
            double re = g(rng);
            double im = g(rng);
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

unsigned uniform_count(unsigned lo, unsigned hi, Rng &rng) {
    return std::uniform_int_distribution<unsigned>(lo, std::max(lo, hi))(rng);
}

// A random CPTP map (single branch) on `dim`.
std::vector<Matrix> random_channel_kraus(Eigen::Index dim, Rng &rng) {
    return random_isometry_instrument(dim, 1, uniform_count(1, 2, rng), rng).branches.begin()->second.kraus_ops;
}

}  // namespace

Matrix random_unitary(Eigen::Index dim, Rng &rng) {
    Eigen::HouseholderQR<Matrix> qr(gaussian_matrix(dim, dim, rng));
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; i++) {
        Complex d = r(i, i);
        double mag = std::abs(d);
        q.col(i) *= mag > 0 ? d / mag : Complex(1, 0);
    }
    return q;
}

Matrix random_density_matrix(Eigen::Index dim, Rng &rng) {
    Matrix g = gaussian_matrix(dim, dim, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return (rho + rho.adjoint()) / 2.0;
}

Instrument random_isometry_instrument(Eigen::Index dim, unsigned outcomes, unsigned rank, Rng &rng) {
    if (outcomes == 0 || rank == 0) {
        throw std::invalid_argument("instrument needs at least one outcome and one Kraus op");
    }
    Eigen::Index blocks = static_cast<Eigen::Index>(outcomes) * rank;
    Matrix v = random_unitary(dim * blocks, rng).leftCols(dim);
    Instrument instr;
    for (unsigned o = 0; o < outcomes; o++) {
        KrausBranch &branch = instr.branches[o];
        for (unsigned r = 0; r < rank; r++) {
            branch.kraus_ops.push_back(v.middleRows((o * rank + r) * dim, dim));
        }
    }
    return instr;
}

Instrument random_projective_instrument(Eigen::Index dim, Rng &rng) {
    Matrix u = random_unitary(dim, rng);
    Instrument instr;
    for (Eigen::Index i = 0; i < dim; i++) {
        instr.branches[static_cast<Outcome>(i)].kraus_ops.push_back(projector(u.col(i)));
    }
    return instr;
}

Instrument random_trivial_instrument(Eigen::Index dim, unsigned outcomes, Rng &rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(outcomes);
    double total = 0;
    for (double &x : w) {
        x = e(rng);
        total += x;
    }
    Instrument instr;
    for (unsigned o = 0; o < outcomes; o++) {
        instr.branches[o].kraus_ops.push_back(std::sqrt(w[o] / total) * random_unitary(dim, rng));
    }
    return instr;
}

Povm random_povm(Eigen::Index dim, unsigned outcomes, Rng &rng) {
    Povm povm;
    for (const auto &[o, b] : random_isometry_instrument(dim, outcomes, 1, rng).branches) {
        Matrix e = povm_element_of(b);
        povm.elements[o] = (e + e.adjoint()) / 2.0;
    }
    return povm;
}

SchemePolicy random_policy(unsigned n, unsigned depth, Rng &rng, const RandomPolicyOptions &options) {
    if (n == 0 || n > kMaxSchemeQubits || depth == 0) {
        throw std::invalid_argument("random_policy needs 1 <= n <= 4 and depth >= 1");
    }
    auto dim = Eigen::Index{1} << n;
    SchemePolicy policy;
    policy.n = n;
    policy.depth = depth;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    unsigned initial = uniform_count(1, options.max_initial_states, rng);
    std::vector<double> w(initial);
    double total = 0;
    for (double &x : w) {
        x = unit(rng) + 0.1;
        total += x;
    }
    for (unsigned o = 0; o < initial; o++) {
        policy.initial_ensemble[o] = (w[o] / total) * random_density_matrix(dim, rng);
    }

    std::vector<History> frontier;
    for (const auto &[o, rho] : policy.initial_ensemble) {
        frontier.push_back({o});
    }
    while (!frontier.empty()) {
        std::vector<History> next;
        for (const auto &h : frontier) {
            if (h.size() == depth) {
                policy.final_povms[h] = random_povm(dim, uniform_count(2, options.max_outcomes, rng), rng);
                continue;
            }
            unsigned outcomes = uniform_count(1, options.max_outcomes, rng);
            Instrument instr;
            double kind = unit(rng);
            if (kind < options.trivial_probability) {
                instr = random_trivial_instrument(dim, outcomes, rng);
            } else if (kind < options.trivial_probability + 0.15) {
                instr = random_projective_instrument(dim, rng);
            } else {
                instr = random_isometry_instrument(dim, outcomes, uniform_count(1, options.max_rank, rng), rng);
            }
            for (const auto &[o, b] : instr.branches) {
                History child = h;
                child.push_back(o);
                next.push_back(std::move(child));
            }
            policy.instruments[h] = std::move(instr);
        }
        frontier = std::move(next);
    }
    return policy;
}

SeparableScheme random_separable_scheme(unsigned ancilla_dim, unsigned depth, Rng &rng) {
    if (ancilla_dim == 0 || depth == 0) {
        throw std::invalid_argument("random_separable_scheme needs a positive ancilla dimension and depth");
    }
    auto da = static_cast<Eigen::Index>(ancilla_dim);
    const Eigen::Index ds = 2;
    SeparableScheme s;
    s.n = 1;
    s.ancilla_dim = ancilla_dim;
    s.depth = depth;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    unsigned terms = uniform_count(1, 3, rng);
    std::vector<double> w(terms);
    double total = 0;
    for (double &x : w) {
        x = unit(rng) + 0.1;
        total += x;
    }
    for (unsigned j = 0; j < terms; j++) {
        s.initial_state.push_back({(w[j] / total) * random_density_matrix(da, rng), random_density_matrix(ds, rng)});
    }

    for (unsigned t = 1; t < depth; t++) {
        std::vector<ProductMap> channel;
        unsigned outcomes = uniform_count(1, 3, rng);
        bool ancilla_side = unit(rng) < 0.5;
        Instrument instr = random_isometry_instrument(ancilla_side ? da : ds, outcomes, uniform_count(1, 2, rng), rng);
        for (const auto &[o, b] : instr.branches) {
            ProductMap m;
            if (ancilla_side) {
                m.ancilla_kraus = b.kraus_ops;
                m.system_kraus = random_channel_kraus(ds, rng);
            } else {
                m.ancilla_kraus = random_channel_kraus(da, rng);
                m.system_kraus = b.kraus_ops;
            }
            channel.push_back(std::move(m));
        }
        s.channels.push_back(std::move(channel));
    }

    unsigned outcomes = uniform_count(2, 3, rng);
    bool ancilla_first = unit(rng) < 0.5;
    Povm first = random_povm(ancilla_first ? da : ds, uniform_count(1, 3, rng), rng);
    for (const auto &[j, m] : first.elements) {
        Povm second = random_povm(ancilla_first ? ds : da, outcomes, rng);
        for (const auto &[k, e] : second.elements) {
            if (ancilla_first) {
                s.povm[k].push_back({m, e});
            } else {
                s.povm[k].push_back({e, m});
            }
        }
    }
    return s;
}

}  // namespace paulilearn
