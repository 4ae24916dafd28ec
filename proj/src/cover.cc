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

#include "paulilearn/cover.h"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "paulilearn/pauli_string.h"
#include "paulilearn/seeding.h"

namespace paulilearn {

namespace {

constexpr unsigned kMaxGreedyQubits = 4;
constexpr std::size_t kSpreadNodeLimit = 2000000;
constexpr unsigned kGreedyRestarts = 64;

bool commutes_with_all(std::uint64_t v, const std::vector<std::uint64_t> &gens) {
    for (std::uint64_t g : gens) {
        if (index_ops::symplectic_product(v, g)) {
            return false;
        }
    }
    return true;
}

// First n elements of an ascending list that are independent of the earlier ones.
std::vector<std::uint64_t> greedy_basis(const std::vector<std::uint64_t> &elements) {
    std::vector<std::uint64_t> basis;
    std::set<std::uint64_t> span{0};
    for (std::uint64_t e : elements) {
        if (span.count(e)) {
            continue;
        }
        basis.push_back(e);
        std::vector<std::uint64_t> shifted;
        for (std::uint64_t s : span) {
            shifted.push_back(s ^ e);
        }
        span.insert(shifted.begin(), shifted.end());
    }
    return basis;
}

CommutingGroup group_from_elements(std::vector<std::uint64_t> elements) {
    std::sort(elements.begin(), elements.end());
    CommutingGroup g;
    g.generators = greedy_basis(elements);
    g.elements = std::move(elements);
    return g;
}

std::vector<CommutingGroup> product_cover(unsigned n) {
    std::vector<CommutingGroup> out;
    std::vector<unsigned> word(n, 1);
    while (true) {
        CommutingGroup g;
        for (unsigned k = 0; k < n; k++) {
            g.generators.push_back(static_cast<std::uint64_t>(word[k]) << (2 * (n - 1 - k)));
        }
        g.elements = span_of(g.generators);
        out.push_back(std::move(g));
        unsigned k = n;
        while (k > 0 && word[k - 1] == 3) {
            word[k - 1] = 1;
            k--;
        }
        if (k == 0) {
            break;
        }
        word[k - 1]++;
    }
    return out;
}

// Searches for 2^n + 1 pairwise disjoint Lagrangians. Empty on failure.
std::vector<std::size_t> find_spread(unsigned n, const std::vector<std::vector<std::uint64_t>> &lagrangians) {
    std::uint64_t count = pauli_count(n);
    std::vector<std::vector<std::size_t>> containing(count);
    for (std::size_t i = 0; i < lagrangians.size(); i++) {
        for (std::uint64_t e : lagrangians[i]) {
            containing[e].push_back(i);
        }
    }
    std::vector<char> covered(count, 0);
    covered[0] = 1;
    std::vector<std::size_t> chosen;
    std::size_t nodes = 0;
    std::function<bool()> dfs = [&]() {
        auto it = std::find(covered.begin(), covered.end(), 0);
        if (it == covered.end()) {
            return true;
        }
        if (++nodes > kSpreadNodeLimit) {
            return false;
        }
        auto e = static_cast<std::uint64_t>(it - covered.begin());
        for (std::size_t i : containing[e]) {
            const auto &l = lagrangians[i];
            if (std::any_of(l.begin(), l.end(), [&](std::uint64_t x) { return covered[x]; })) {
                continue;
            }
            for (std::uint64_t x : l) {
                covered[x] = 1;
            }
            chosen.push_back(i);
            if (dfs()) {
                return true;
            }
            chosen.pop_back();
            for (std::uint64_t x : l) {
                covered[x] = 0;
            }
            if (nodes > kSpreadNodeLimit) {
                return false;
            }
        }
        return false;
    };
    return dfs() ? chosen : std::vector<std::size_t>{};
}

std::vector<std::size_t> randomized_greedy(unsigned n, const std::vector<std::vector<std::uint64_t>> &lagrangians) {
    std::uint64_t count = pauli_count(n);
    std::vector<std::size_t> best;
    Rng rng(derive_seed(0xC0FE5ULL, n));
    for (unsigned restart = 0; restart < kGreedyRestarts; restart++) {
        std::vector<char> covered(count, 0);
        covered[0] = 1;
        std::uint64_t remaining = count - 1;
        std::vector<std::size_t> chosen;
        while (remaining > 0) {
            std::size_t best_gain = 0;
            std::vector<std::size_t> ties;
            for (std::size_t i = 0; i < lagrangians.size(); i++) {
                std::size_t gain = 0;
                for (std::uint64_t x : lagrangians[i]) {
                    gain += !covered[x];
                }
                if (gain > best_gain) {
                    best_gain = gain;
                    ties.clear();
                }
                if (gain == best_gain && gain > 0) {
                    ties.push_back(i);
                }
            }
            std::size_t pick = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];
            for (std::uint64_t x : lagrangians[pick]) {
                remaining -= !covered[x];
                covered[x] = 1;
            }
            chosen.push_back(pick);
        }
        if (best.empty() || chosen.size() < best.size()) {
            best = std::move(chosen);
        }
        if (best.size() == (std::uint64_t{1} << n) + 1) {
            break;
        }
    }
    return best;
}

}  // namespace

CoverStrategy parse_cover_strategy(const std::string &name) {
    if (name == "greedy") {
        return CoverStrategy::Greedy;
    }
    if (name == "product") {
        return CoverStrategy::Product;
    }
    throw std::invalid_argument("unknown cover strategy \"" + name + "\" (expected greedy or product)");
}

std::string cover_strategy_name(CoverStrategy s) {
    return s == CoverStrategy::Greedy ? "greedy" : "product";
}

std::vector<std::uint64_t> span_of(const std::vector<std::uint64_t> &generators) {
    std::vector<std::uint64_t> out{0};
    for (std::uint64_t g : generators) {
        std::size_t size = out.size();
        for (std::size_t i = 0; i < size; i++) {
            out.push_back(out[i] ^ g);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(out.begin());
    return out;
}

std::vector<std::vector<std::uint64_t>> enumerate_maximal_abelian_subgroups(unsigned n) {
    if (n == 0 || n > kMaxGreedyQubits) {
        throw std::invalid_argument("subgroup enumeration supports 1.." + std::to_string(kMaxGreedyQubits) + " qubits");
    }
    std::uint64_t count = pauli_count(n);
    std::vector<std::vector<std::uint64_t>> out;
    // Each isotropic subspace is built once, from its greedy basis: the next
    // generator v must exceed the previous one and be the minimum of v + S.
    std::vector<std::uint64_t> gens;
    std::vector<std::uint64_t> elements{0};
    std::function<void()> extend = [&]() {
        if (gens.size() == n) {
            std::vector<std::uint64_t> l(elements.begin() + 1, elements.end());
            std::sort(l.begin(), l.end());
            out.push_back(std::move(l));
            return;
        }
        std::uint64_t start = gens.empty() ? 1 : gens.back() + 1;
        for (std::uint64_t v = start; v < count; v++) {
            if (!commutes_with_all(v, gens)) {
                continue;
            }
            bool coset_min = true;
            for (std::size_t i = 1; i < elements.size() && coset_min; i++) {
                coset_min = v < (v ^ elements[i]);
            }
            if (!coset_min) {
                continue;
            }
            std::size_t size = elements.size();
            for (std::size_t i = 0; i < size; i++) {
                elements.push_back(elements[i] ^ v);
            }
            gens.push_back(v);
            extend();
            gens.pop_back();
            elements.resize(size);
        }
    };
    extend();
    return out;
}

std::vector<CommutingGroup> commuting_cover(unsigned n, CoverStrategy strategy) {
    if (n == 0 || n > kMaxIndexQubits) {
        throw std::invalid_argument("cover qubit count out of range");
    }
    if (strategy == CoverStrategy::Product) {
        return product_cover(n);
    }
    if (n > kMaxGreedyQubits) {
        throw std::invalid_argument("greedy cover supports n <= " + std::to_string(kMaxGreedyQubits) +
                                    "; use the product strategy");
    }
    auto lagrangians = enumerate_maximal_abelian_subgroups(n);
    std::vector<std::size_t> chosen = find_spread(n, lagrangians);
    if (chosen.empty()) {
        chosen = randomized_greedy(n, lagrangians);
    }
    std::vector<CommutingGroup> out;
    for (std::size_t i : chosen) {
        out.push_back(group_from_elements(lagrangians[i]));
    }
    return out;
}

void validate_cover(unsigned n, const std::vector<CommutingGroup> &cover) {
    std::uint64_t count = pauli_count(n);
    std::vector<char> seen(count, 0);
    for (std::size_t i = 0; i < cover.size(); i++) {
        const auto &g = cover[i];
        std::string where = "group " + std::to_string(i);
        if (g.generators.size() != n) {
            throw std::invalid_argument(where + " has " + std::to_string(g.generators.size()) + " generators, expected " +
                                        std::to_string(n));
        }
        for (std::uint64_t a : g.generators) {
            if (a == 0 || a >= count) {
                throw std::invalid_argument(where + " has an invalid generator");
            }
            if (!commutes_with_all(a, g.generators)) {
                throw std::invalid_argument(where + " has anticommuting generators");
            }
        }
        std::vector<std::uint64_t> span = span_of(g.generators);
        if (std::adjacent_find(span.begin(), span.end()) != span.end() ||
            std::find(span.begin(), span.end(), 0) != span.end()) {
            throw std::invalid_argument(where + " has dependent generators");
        }
        if (span != g.elements) {
            throw std::invalid_argument(where + " elements do not match its generators");
        }
        for (std::uint64_t e : span) {
            seen[e] = 1;
        }
    }
    for (std::uint64_t a = 1; a < count; a++) {
        if (!seen[a]) {
            throw std::invalid_argument("cover misses " + PauliString::from_index(n, a).letters());
        }
    }
}

}  // namespace paulilearn
