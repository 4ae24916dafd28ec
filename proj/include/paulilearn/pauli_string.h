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

#ifndef PAULILEARN_PAULI_STRING_H
#define PAULILEARN_PAULI_STRING_H

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace paulilearn {

/// Largest qubit count whose 4^n canonical indices fit in a 64-bit word.
inline constexpr unsigned kMaxIndexQubits = 31;

/// Largest qubit count accepted by `to_matrix`.
inline constexpr unsigned kMaxMatrixQubits = 6;

/// An n-qubit Pauli operator modulo phase, stored as two bit masks.
///
/// Bit (n - k) of each mask holds the component of qubit k (qubits numbered
/// 1..n), so qubit 1 is the most significant bit. This is the same order as
/// the computational basis index of a 2^n dimensional state vector.
///
/// The canonical integer index interleaves the masks as
/// x_1 z_1 x_2 z_2 ... x_n z_n (most significant first). Per qubit the value
/// 2x + z encodes I=0, Z=1, X=2, Y=3. Index 0 is the identity.
class PauliString {
   public:
    PauliString() = default;
    PauliString(unsigned num_qubits, std::uint64_t x_bits, std::uint64_t z_bits);

    static PauliString identity(unsigned num_qubits);
    static PauliString from_index(unsigned num_qubits, std::uint64_t index);
    /// Parses letters "IXYZ" (qubit 1 leftmost). Accepts an optional leading '+'.
    static PauliString from_letters(std::string_view letters);

    unsigned num_qubits() const {
        return n_;
    }
    std::uint64_t x_bits() const {
        return x_;
    }
    std::uint64_t z_bits() const {
        return z_;
    }
    bool is_identity() const {
        return x_ == 0 && z_ == 0;
    }

    std::uint64_t index() const;
    std::string letters() const;
    /// Letter acting on qubit k, 1-based.
    char letter(unsigned qubit) const;

    bool operator==(const PauliString &) const = default;

   private:
    unsigned n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// 1 iff the two operators anticommute.
int symplectic_product(const PauliString &a, const PauliString &b);

/// Number of qubits acted on non-trivially.
unsigned weight(const PauliString &a);

/// Group product modulo phase (componentwise XOR).
PauliString multiply(const PauliString &a, const PauliString &b);

/// Dense Hermitian matrix of P_a = (x) i^{x_k z_k} X^{x_k} Z^{z_k}.
Eigen::MatrixXcd to_matrix(const PauliString &a);

/// 4^n.
std::uint64_t pauli_count(unsigned num_qubits);

namespace index_ops {

inline constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;
inline constexpr std::uint64_t kOddBits = 0xAAAAAAAAAAAAAAAAULL;

/// Symplectic product directly on canonical indices.
inline int symplectic_product(std::uint64_t a, std::uint64_t b) {
    std::uint64_t swapped = ((b & kOddBits) >> 1) | ((b & kEvenBits) << 1);
    return std::popcount(a & swapped) & 1;
}

inline unsigned weight(std::uint64_t a) {
    return static_cast<unsigned>(std::popcount((a | (a >> 1)) & kEvenBits));
}

}  // namespace index_ops

}  // namespace paulilearn

#endif
