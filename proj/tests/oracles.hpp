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

// Independent reference computations for the test suites. Nothing here calls
// the Bareiss determinant or the Smith normal form of the library.

#include "nodaldcg/int_matrix.hpp"
#include "nodaldcg/multigraph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace ndcg::oracle {

/// Cofactor expansion along the first row; fine up to n = 8.
Integer cofactor_determinant(const IntMatrix& a);

/// Diagonal of the Smith form from determinantal divisors: D_k = gcd of all k x k minors, d_k = D_k / D_{k-1}.
std::vector<Integer> determinantal_divisors_diagonal(const IntMatrix& a);

/// Whether A x = w has an integer solution, A square and nonsingular (Cramer's rule with the adjugate).
bool cramer_solvable(const IntMatrix& a, std::span<const Integer> w);

/// Smallest d >= 1 with d*v in the column lattice of a square nonsingular A, by trying d = 1, 2, ...
std::optional<Integer> brute_force_order(const IntMatrix& a, std::span<const Integer> v, long limit);

/// Every connected loopless multigraph (as an edge-multiplicity pattern on labelled vertices).
std::vector<Multigraph> exhaustive_connected_loopless(std::size_t max_vertices, std::size_t max_edges);

/// Random spanning tree plus extra random non-loop edges. `extra` loops are added if requested.
Multigraph random_connected(std::mt19937_64& rng, std::size_t vertices, std::size_t edges,
                            std::size_t loops = 0);

/// Random graph with 1..max_vertices vertices and up to max_edges edges, connected, loopless.
Multigraph random_connected_loopless(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges);

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound);

std::vector<VertexIndex> random_permutation(std::mt19937_64& rng, std::size_t n);

} // namespace ndcg::oracle
