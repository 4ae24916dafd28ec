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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace oracles {

Matrix letter_matrix(char c) {
    using C = std::complex<double>;
    Matrix m(2, 2);
    switch (c) {
        case 'I':
            m << 1, 0, 0, 1;
            break;
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, C(0, -1), C(0, 1), 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            throw std::invalid_argument("bad Pauli letter");
    }
    return m;
}

Matrix pauli_matrix(const std::string &letters) {
    Matrix m = Matrix::Identity(1, 1);
    for (char c : letters) {
        Matrix l = letter_matrix(c);
        Matrix out(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index i = 0; i < m.rows(); i++) {
            for (Eigen::Index j = 0; j < m.cols(); j++) {
                out.block(2 * i, 2 * j, 2, 2) = m(i, j) * l;
            }
        }
        m = out;
    }
    return m;
}

std::string index_letters(unsigned n, std::uint64_t a) {
    std::string s(n, 'I');
    for (unsigned k = 0; k < n; k++) {
        s[n - 1 - k] = "IZXY"[(a >> (2 * k)) & 3];
    }
    return s;
}

int anticommutes(const std::string &a, const std::string &b) {
    int parity = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        parity ^= a[k] != 'I' && b[k] != 'I' && a[k] != b[k];
    }
    return parity;
}

Matrix kraus_apply(const std::vector<double> &error_rates, const Matrix &rho) {
    unsigned n = 0;
    while ((std::size_t{1} << (2 * n)) < error_rates.size()) {
        n++;
    }
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (std::uint64_t a = 0; a < error_rates.size(); a++) {
        Matrix p = pauli_matrix(index_letters(n, a));
        out += error_rates[a] * p * rho * p.adjoint();
    }
    return out;
}

std::vector<double> eigenvalues_by_ptm(const std::vector<double> &error_rates) {
    unsigned n = 0;
    while ((std::size_t{1} << (2 * n)) < error_rates.size()) {
        n++;
    }
    std::vector<double> out;
    for (std::uint64_t b = 0; b < error_rates.size(); b++) {
        Matrix p = pauli_matrix(index_letters(n, b));
        out.push_back((p * kraus_apply(error_rates, p)).trace().real() / static_cast<double>(p.rows()));
    }
    return out;
}

std::vector<double> error_rates_naive(const std::vector<double> &eigenvalues) {
    unsigned n = 0;
    while ((std::size_t{1} << (2 * n)) < eigenvalues.size()) {
        n++;
    }
    std::vector<double> out(eigenvalues.size(), 0.0);
    for (std::uint64_t a = 0; a < eigenvalues.size(); a++) {
        std::string la = index_letters(n, a);
        for (std::uint64_t b = 0; b < eigenvalues.size(); b++) {
            out[a] += (anticommutes(la, index_letters(n, b)) ? -1 : 1) * eigenvalues[b];
        }
        out[a] /= static_cast<double>(eigenvalues.size());
    }
    return out;
}

std::vector<double> bell_distribution_by_convolution(const std::vector<double> &error_rates, double p) {
    std::size_t count = error_rates.size();
    unsigned n = 0;
    while ((std::size_t{1} << (2 * n)) < count) {
        n++;
    }
    // Law of one n-qubit depolarizing Pauli.
    std::vector<double> d(count, 1.0);
    for (std::uint64_t v = 0; v < count; v++) {
        for (unsigned k = 0; k < n; k++) {
            d[v] *= ((v >> (2 * k)) & 3) ? p / 4 : 1 - 3 * p / 4;
        }
    }
    std::vector<double> out(count, 0.0);
    for (std::uint64_t b = 0; b < count; b++) {
        for (std::uint64_t u = 0; u < count; u++) {
            for (std::uint64_t v = 0; v < count; v++) {
                out[b ^ u ^ v] += error_rates[b] * d[u] * d[v];
            }
        }
    }
    return out;
}

std::uint64_t lagrangian_count(unsigned n) {
    std::uint64_t c = 1;
    for (unsigned i = 1; i <= n; i++) {
        c *= (std::uint64_t{1} << i) + 1;
    }
    return c;
}

unsigned minimum_cover_size_exhaustive(unsigned n) {
    if (n == 0 || n > 2) {
        throw std::invalid_argument("exhaustive cover search supports n <= 2");
    }
    std::size_t count = std::size_t{1} << (2 * n);
    std::vector<std::string> letters;
    for (std::uint64_t a = 0; a < count; a++) {
        letters.push_back(index_letters(n, a));
    }
    // All maximal commuting sets: subsets of size 2^n - 1 that pairwise
    // commute, found by brute force over bitmasks.
    std::vector<std::uint32_t> sets;
    std::size_t target = (std::size_t{1} << n) - 1;
    for (std::uint32_t mask = 0; mask < (1u << (count - 1)); mask++) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != target) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i + 1 < count && ok; i++) {
            for (std::size_t j = i + 1; j + 1 < count && ok; j++) {
                if ((mask >> i & 1) && (mask >> j & 1)) {
                    ok = !anticommutes(letters[i + 1], letters[j + 1]);
                }
            }
        }
        if (ok) {
            sets.push_back(mask);
        }
    }
    std::uint32_t full = (1u << (count - 1)) - 1;
    for (unsigned k = 1;; k++) {
        std::function<bool(std::size_t, unsigned, std::uint32_t)> search = [&](std::size_t start, unsigned left,
                                                                              std::uint32_t covered) {
            if (covered == full) {
                return true;
            }
            if (left == 0) {
                return false;
            }
            for (std::size_t i = start; i < sets.size(); i++) {
                if (search(i + 1, left - 1, covered | sets[i])) {
                    return true;
                }
            }
            return false;
        };
        if (search(0, k, 0)) {
            return k;
        }
    }
}

Matrix qubit_state(const std::string &name) {
    using C = std::complex<double>;
    Eigen::VectorXcd v(2);
    double r = 1 / std::sqrt(2.0);
    if (name == "0") {
        v << 1, 0;
    } else if (name == "1") {
        v << 0, 1;
    } else if (name == "+") {
        v << r, r;
    } else if (name == "-") {
        v << r, -r;
    } else if (name == "+i") {
        v << r, C(0, r);
    } else if (name == "-i") {
        v << r, C(0, -r);
    } else {
        throw std::invalid_argument("unknown state");
    }
    return v * v.adjoint();
}

paulilearn::SchemePolicy repeated_measurement_policy(const std::string &state, char basis, unsigned depth) {
    using namespace paulilearn;
    Matrix up;
    Matrix down;
    switch (basis) {
        case 'X':
            up = qubit_state("+");
            down = qubit_state("-");
            break;
        case 'Y':
            up = qubit_state("+i");
            down = qubit_state("-i");
            break;
        default:
            up = qubit_state("0");
            down = qubit_state("1");
    }
    SchemePolicy policy;
    policy.n = 1;
    policy.depth = depth;
    policy.initial_ensemble[0] = qubit_state(state);
    Instrument instr;
    instr.branches[0].kraus_ops.push_back(up);
    instr.branches[1].kraus_ops.push_back(down);
    Povm povm;
    povm.elements[0] = up;
    povm.elements[1] = down;
    std::vector<History> frontier{{0}};
    for (unsigned t = 1; t <= depth; t++) {
        std::vector<History> next;
        for (const auto &h : frontier) {
            if (t == depth) {
                policy.final_povms[h] = povm;
                continue;
            }
            policy.instruments[h] = instr;
            for (Outcome o : {0u, 1u}) {
                History c = h;
                c.push_back(o);
                next.push_back(c);
            }
        }
        frontier = next;
    }
    return policy;
}

std::vector<double> random_error_rates(unsigned n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> p(std::size_t{1} << (2 * n));
    double total = 0;
    for (double &x : p) {
        x = -std::log(1 - u(rng));
        total += x;
    }
    for (double &x : p) {
        x /= total;
    }
    return p;
}

}  // namespace oracles
