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

#include "paulilearn/dense.h"

#include <stdexcept>
#include <string>

namespace paulilearn {

namespace {

const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

unsigned qubits_for_dimension(Eigen::Index dim) {
    unsigned n = 0;
    while ((Eigen::Index{1} << n) < dim && n < 30) {
        n++;
    }
    if ((Eigen::Index{1} << n) != dim) {
        throw std::invalid_argument("matrix dimension " + std::to_string(dim) + " is not a power of 2");
    }
    return n;
}

double pauli_expectation(const Matrix &rho, const PauliString &a) {
    if (rho.rows() != rho.cols() || qubits_for_dimension(rho.rows()) != a.num_qubits()) {
        throw std::invalid_argument("state dimension does not match Pauli string");
    }
    Complex global = kIPowers[std::popcount(a.x_bits() & a.z_bits()) & 3];
    Complex acc = 0;
    for (Eigen::Index col = 0; col < rho.cols(); col++) {
        auto row = static_cast<Eigen::Index>(static_cast<std::uint64_t>(col) ^ a.x_bits());
        double sign = (std::popcount(a.z_bits() & static_cast<std::uint64_t>(col)) & 1) ? -1.0 : 1.0;
        acc += sign * rho(col, row);
    }
    return (global * acc).real();
}

std::vector<double> pauli_expectations(const Matrix &rho) {
    unsigned n = qubits_for_dimension(rho.rows());
    std::vector<double> r(pauli_count(n));
    for (std::uint64_t b = 0; b < r.size(); b++) {
        r[b] = pauli_expectation(rho, PauliString::from_index(n, b));
    }
    return r;
}

Matrix from_pauli_expectations(unsigned n, std::span<const double> r) {
    if (r.size() != pauli_count(n)) {
        throw std::invalid_argument("expected 4^n Pauli coefficients");
    }
    auto dim = Eigen::Index{1} << n;
    Matrix m = Matrix::Zero(dim, dim);
    double scale = 1.0 / static_cast<double>(dim);
    for (std::uint64_t b = 0; b < r.size(); b++) {
        if (r[b] == 0.0) {
            continue;
        }
        auto p = PauliString::from_index(n, b);
        Complex g = kIPowers[std::popcount(p.x_bits() & p.z_bits()) & 3] * (r[b] * scale);
        for (Eigen::Index col = 0; col < dim; col++) {
            auto row = static_cast<Eigen::Index>(static_cast<std::uint64_t>(col) ^ p.x_bits());
            double sign = (std::popcount(p.z_bits() & static_cast<std::uint64_t>(col)) & 1) ? -1.0 : 1.0;
            m(row, col) += sign * g;
        }
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double hermiticity_error(const Matrix &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() / 2;
}

double min_eigenvalue(const Matrix &m) {
    Matrix h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shapes differ");
    }
    if (a.size() == 0) {
        return 0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

Matrix projector(const Eigen::VectorXcd &psi) {
    return psi * psi.adjoint();
}

}  // namespace paulilearn
