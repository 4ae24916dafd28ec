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

#ifndef PAULILEARN_COVER_H
#define PAULILEARN_COVER_H

#include <cstdint>
#include <string>
#include <vector>

namespace paulilearn {

/// A maximal abelian subgroup of the n-qubit Pauli group modulo phase.
struct CommutingGroup {
    /// n independent, pairwise commuting canonical indices.
    std::vector<std::uint64_t> generators;
    /// The 2^n - 1 non-identity elements, ascending.
    std::vector<std::uint64_t> elements;
};

enum class CoverStrategy { Greedy, Product };

CoverStrategy parse_cover_strategy(const std::string &name);
std::string cover_strategy_name(CoverStrategy s);

/// Maximal abelian subgroups whose union is every non-identity Pauli.
///
/// Product gives the 3^n groups generated by one single-qubit Pauli per
/// qubit. Greedy (n <= 4) searches for pairwise disjoint groups, which
/// reaches the minimum 2^n + 1; failing that it falls back to a randomized
/// greedy max-coverage pass.
std::vector<CommutingGroup> commuting_cover(unsigned n, CoverStrategy strategy);

/// Every Lagrangian subgroup as its sorted non-identity elements (n <= 4).
std::vector<std::vector<std::uint64_t>> enumerate_maximal_abelian_subgroups(unsigned n);

/// All 2^k - 1 non-identity products of the given generators, ascending.
std::vector<std::uint64_t> span_of(const std::vector<std::uint64_t> &generators);

/// Throws std::invalid_argument unless every group is abelian with n
/// independent generators whose span matches `elements`, and the union
/// covers all 4^n - 1 non-identity indices.
void validate_cover(unsigned n, const std::vector<CommutingGroup> &cover);

}  // namespace paulilearn

#endif
