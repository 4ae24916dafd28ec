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

#ifndef PAULILEARN_DENSE_H
#define PAULILEARN_DENSE_H

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "paulilearn/pauli_string.h"

namespace paulilearn {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// n such that dim == 2^n; throws otherwise.
unsigned qubits_for_dimension(Eigen::Index dim);

/// Tr(P_a rho), real part (exact for Hermitian rho).
double pauli_expectation(const Matrix &rho, const PauliString &a);

/// r_b = Tr(P_b rho) for every canonical index b.
std::vector<double> pauli_expectations(const Matrix &rho);

/// rho = 2^{-n} sum_b r_b P_b.
Matrix from_pauli_expectations(unsigned n, std::span<const double> r);

Matrix kron(const Matrix &a, const Matrix &b);

/// Max-abs distance from the Hermitian part.
double hermiticity_error(const Matrix &m);

/// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const Matrix &m);

/// Max-abs entrywise distance.
double max_abs_diff(const Matrix &a, const Matrix &b);

/// |psi><psi| for a (not necessarily normalized) vector.
Matrix projector(const Eigen::VectorXcd &psi);

}  // namespace paulilearn

#endif
