/*
 * Copyright 2026 The nodaldcg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "nodaldcg/int_matrix.hpp"
#include "nodaldcg/integer.hpp"
#include "nodaldcg/multigraph.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ndcg {

/// Two vertices joined by k parallel edges (the vine curve with k nodes).
Multigraph banana_graph(unsigned k);

/// k vertices in a cycle; k = 1 is a single loop, k = 2 is the banana graph with 2 edges.
Multigraph cycle_graph(unsigned k);

/// Chain of n cycles: lengths k[i] >= 2, gluing positions 1 <= h[i] < k[i].
struct ChainOfCyclesParams {
    std::vector<unsigned> k;
    std::vector<unsigned> h;

    /// Throws InvalidArgument on a length mismatch or a bound violation.
    void validate() const;
    std::size_t cycles() const noexcept { return k.size(); }
};

/**
 * Cycle i+1 shares with cycle i the edge (v^i_{h_i}, v^i_{h_i + 1}); its own
 * closing edge (v^{i+1}_{k}, v^{i+1}_1) is that shared edge. Vertices are
 * numbered cycle by cycle, each cycle clockwise from v_1. h of the last
 * cycle is unused.
 */
Multigraph chain_of_cycles(const ChainOfCyclesParams& p);

/// c_1 = k1, c_2 = k1 k2 - 1, c_n = k_n c_{n-1} - c_{n-2}.
Integer cs_complexity(std::span<const unsigned> k);

/// Polynomial with arbitrary-precision coefficients, indexed by degree.
struct IntPolynomial {
    std::vector<Integer> coefficients;

    std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    Integer operator()(const Integer& x) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

/// "k^3 - 2k" style rendering in the variable `var`.
std::string to_string(const IntPolynomial& p, const std::string& var = "k");

/// Complexity of the chain of n cycles all of length k, as a polynomial in k.
IntPolynomial cs_equal_k_polynomial(unsigned n);

/// Path lengths of a vine graph, kept sorted non-increasing.
class VineParams {
public:
    explicit VineParams(std::vector<unsigned long> m);

    std::span<const unsigned long> m() const noexcept { return m_; }
    std::size_t size() const noexcept { return m_.size(); }
    unsigned long operator[](std::size_t i) const { return m_.at(i); }

private:
    std::vector<unsigned long> m_;
};

/// Vertices A = 0 and B = 1 joined by paths of m_i edges; inner vertices appended path by path.
Multigraph vine_graph(const VineParams& p);

/// sum_k prod_{i != k} m_i
Integer vine_complexity(const VineParams& p);

/// Order of t_k = e_{R^1_k} - e_A (0-based k) in the degree class group.
Integer vine_generator_order(const VineParams& p, std::size_t k);

/// True when t_k generates the group: the m_i with i != k are pairwise coprime.
bool vine_cyclic_by_tk(const VineParams& p, std::size_t k);

/// (N-1) x (N-1) matrix a_ij = m_N + [i == j] m_i, with the stored (sorted) order.
IntMatrix vine_presentation(const VineParams& p);

/// Same matrix for m taken in the given order.
IntMatrix vine_presentation_matrix(std::span<const unsigned long> m);

/**
 * Presentation on generators t_1..t_N: one column m_i e_i - m_j e_j for each
 * pair i < j, then the all-ones column.
 */
IntMatrix vine_relation_matrix(const VineParams& p);

/// Divides out d = gcd(m), reduces the presentation, and rescales its factors by d.
GroupStructure vine_structure(const VineParams& p);

/// Closed form for m = (m x k, 1 x (N - k)), 1 <= k <= N.
GroupStructure vine_structure_equal_m(unsigned n, unsigned k, unsigned long m);

/// N = 3 only: Z/d + Z/(c/d) with d = gcd(m), c = vine_complexity.
GroupStructure dollar_structure(const VineParams& p);

} // namespace ndcg
