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

#include "paulilearn/pauli_string.h"

#include <complex>
#include <stdexcept>

namespace paulilearn {

namespace {

std::uint64_t low_mask(unsigned n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "Pauli strings act on different qubit counts: " + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()));
    }
}

}  // namespace

PauliString::PauliString(unsigned num_qubits, std::uint64_t x_bits, std::uint64_t z_bits)
    : n_(num_qubits), x_(x_bits), z_(z_bits) {
    if (num_qubits > 64) {
        throw std::invalid_argument("Pauli strings are limited to 64 qubits.");
    }
    std::uint64_t m = low_mask(num_qubits);
    if ((x_bits & ~m) || (z_bits & ~m)) {
        throw std::invalid_argument("Pauli string has bits set above its qubit count.");
    }
}

PauliString PauliString::identity(unsigned num_qubits) {
    return PauliString(num_qubits, 0, 0);
}

PauliString PauliString::from_index(unsigned num_qubits, std::uint64_t index) {
    if (num_qubits > kMaxIndexQubits) {
        throw std::invalid_argument("Canonical indices support at most 31 qubits.");
    }
    if (index >= pauli_count(num_qubits)) {
        throw std::out_of_range("Pauli index " + std::to_string(index) + " out of range for " +
                                std::to_string(num_qubits) + " qubits.");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (unsigned m = 0; m < num_qubits; m++) {
        z |= ((index >> (2 * m)) & 1) << m;
        x |= ((index >> (2 * m + 1)) & 1) << m;
    }
    return PauliString(num_qubits, x, z);
}

PauliString PauliString::from_letters(std::string_view letters) {
    if (!letters.empty() && letters.front() == '+') {
        letters.remove_prefix(1);
    }
    if (letters.size() > 64) {
        throw std::invalid_argument("Pauli strings are limited to 64 qubits.");
    }
    auto n = static_cast<unsigned>(letters.size());
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (unsigned k = 0; k < n; k++) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
        switch (letters[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw std::invalid_argument("Unrecognized Pauli letter '" + std::string(1, letters[k]) + "' in \"" +
                                            std::string(letters) + "\".");
        }
    }
    return PauliString(n, x, z);
}

std::uint64_t PauliString::index() const {
    if (n_ > kMaxIndexQubits) {
        throw std::invalid_argument("Canonical indices support at most 31 qubits.");
    }
    std::uint64_t result = 0;
    for (unsigned m = 0; m < n_; m++) {
        result |= ((z_ >> m) & 1) << (2 * m);
        result |= ((x_ >> m) & 1) << (2 * m + 1);
    }
    return result;
}

char PauliString::letter(unsigned qubit) const {
    if (qubit < 1 || qubit > n_) {
        throw std::out_of_range("qubit index out of range");
    }
    unsigned m = n_ - qubit;
    int x = (x_ >> m) & 1;
    int z = (z_ >> m) & 1;
    return "IZXY"[2 * x + z];
}

std::string PauliString::letters() const {
    std::string out;
    out.reserve(n_);
    for (unsigned k = 1; k <= n_; k++) {
        out.push_back(letter(k));
    }
    return out;
}

int symplectic_product(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    return std::popcount((a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits())) & 1;
}

unsigned weight(const PauliString &a) {
    return static_cast<unsigned>(std::popcount(a.x_bits() | a.z_bits()));
}

PauliString multiply(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    return PauliString(a.num_qubits(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits());
}

Eigen::MatrixXcd to_matrix(const PauliString &a) {
    unsigned n = a.num_qubits();
    if (n > kMaxMatrixQubits) {
        throw std::invalid_argument("to_matrix is limited to " + std::to_string(kMaxMatrixQubits) + " qubits, got " +
                                    std::to_string(n) + ".");
    }
    // P|j> = i^{#Y} (-1)^{|z & j|} |j ^ x>.
    std::size_t dim = std::size_t{1} << n;
    static const std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> global = kIPowers[std::popcount(a.x_bits() & a.z_bits()) & 3];
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; col++) {
        std::size_t row = col ^ a.x_bits();
        double sign = (std::popcount(a.z_bits() & col) & 1) ? -1.0 : 1.0;
        m(row, col) = global * sign;
    }
    return m;
}

std::uint64_t pauli_count(unsigned num_qubits) {
    if (num_qubits > kMaxIndexQubits) {
        throw std::invalid_argument("4^n overflows for n > 31.");
    }
    return std::uint64_t{1} << (2 * num_qubits);
}

}  // namespace paulilearn
