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

#include "paulilearn/symplectic_transform.h"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "paulilearn/pauli_string.h"

namespace paulilearn::kernels {

namespace {

constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

// One qubit's 4x4 block of (-1)^{<u,v>} in I, Z, X, Y order.
inline void butterfly4(double *base, std::size_t stride) {
    double i = base[0];
    double z = base[stride];
    double x = base[2 * stride];
    double y = base[3 * stride];
    base[0] = i + z + x + y;
    base[stride] = i + z - x - y;
    base[2 * stride] = i - z + x - y;
    base[3 * stride] = i - z - x + y;
}

}  // namespace

unsigned qubits_for_length(std::size_t length) {
    unsigned n = 0;
    std::size_t v = 1;
    while (v < length && n <= kMaxIndexQubits) {
        v <<= 2;
        n++;
    }
    if (v != length) {
        throw std::invalid_argument("Array length " + std::to_string(length) + " is not a power of 4.");
    }
    return n;
}

std::vector<double> symplectic_transform_reference(std::span<const double> in) {
    qubits_for_length(in.size());
    std::vector<double> out(in.size(), 0.0);
    for (std::uint64_t b = 0; b < in.size(); b++) {
        double acc = 0;
        for (std::uint64_t a = 0; a < in.size(); a++) {
            acc += index_ops::symplectic_product(a, b) ? -in[a] : in[a];
        }
        out[b] = acc;
    }
    return out;
}

void symplectic_transform_serial(std::span<double> data) {
    unsigned n = qubits_for_length(data.size());
    std::size_t len = data.size();
    for (unsigned m = 0; m < n; m++) {
        std::size_t stride = std::size_t{1} << (2 * m);
        for (std::size_t high = 0; high < len; high += 4 * stride) {
            for (std::size_t low = 0; low < stride; low++) {
                butterfly4(data.data() + high + low, stride);
            }
        }
    }
}

void symplectic_transform_parallel(std::span<double> data) {
    unsigned n = qubits_for_length(data.size());
    std::size_t len = data.size();
    if (n == 0) {
        return;
    }
    auto blocks = static_cast<std::int64_t>(len / 4);
    double *ptr = data.data();
    for (unsigned m = 0; m < n; m++) {
        std::size_t stride = std::size_t{1} << (2 * m);
#pragma omp parallel for schedule(static)
        for (std::int64_t j = 0; j < blocks; j++) {
            auto uj = static_cast<std::size_t>(j);
            std::size_t low = uj % stride;
            std::size_t high = uj / stride;
            butterfly4(ptr + high * 4 * stride + low, stride);
        }
    }
}

void symplectic_transform(std::span<double> data) {
    if (data.size() >= kParallelThreshold) {
        symplectic_transform_parallel(data);
    } else {
        symplectic_transform_serial(data);
    }
}

}  // namespace paulilearn::kernels
