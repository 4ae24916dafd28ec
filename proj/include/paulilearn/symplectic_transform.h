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

#ifndef PAULILEARN_SYMPLECTIC_TRANSFORM_H
#define PAULILEARN_SYMPLECTIC_TRANSFORM_H

#include <cstddef>
#include <span>
#include <vector>

namespace paulilearn::kernels {

/// Returns n for an array of length 4^n; throws std::invalid_argument otherwise.
unsigned qubits_for_length(std::size_t length);

// All variants compute the unnormalized symplectic Walsh-Hadamard transform
//     out[b] = sum_a in[a] * (-1)^{<a,b>}
// over canonical Pauli indices. Applying it twice multiplies by 4^n.

/// Direct O(16^n) double sum. Test and benchmark reference only.
std::vector<double> symplectic_transform_reference(std::span<const double> in);

/// In-place per-qubit 4-point butterfly, O(n 4^n), single threaded.
void symplectic_transform_serial(std::span<double> data);

/// Same butterfly with each stage split across OpenMP threads.
void symplectic_transform_parallel(std::span<double> data);

/// Picks the parallel kernel once the array is large enough to amortize
/// thread startup, otherwise the serial one.
void symplectic_transform(std::span<double> data);

}  // namespace paulilearn::kernels

#endif
