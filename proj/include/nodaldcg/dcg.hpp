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

namespace ndcg {

/**
 * Symmetric gamma x gamma matrix: off-diagonal (i, j) counts the non-loop
 * edges joining v_i and v_j, the diagonal holds minus the loopless degree.
 * Loops are ignored, so row and column sums vanish.
 */
IntMatrix intersection_matrix(const Multigraph& g);

/// Matrix-tree theorem on the intersection matrix with its last row and column removed.
Integer complexity_mtt(const Multigraph& g);

/// c(G) = c(G - e) + c(G . e) on the smallest non-loop edge. Exponential; an oracle.
Integer complexity_deletion_contraction(const Multigraph& g);

inline constexpr std::size_t default_enumeration_limit = 24;

/**
 * Counts (gamma - 1)-subsets of non-loop edges that form a spanning tree.
 * Parallel edges are distinct. Throws LimitExceeded when the loopless edge
 * count exceeds `edge_limit`.
 */
Integer complexity_enumeration(const Multigraph& g,
                               std::size_t edge_limit = default_enumeration_limit);

/// Reduced presentation M*: intersection matrix without its last row and column.
IntMatrix reduced_presentation(const Multigraph& g);

/// Degree class group, the cokernel of M*. Throws DisconnectedGraph.
GroupStructure degree_class_group(const Multigraph& g);

struct DcgReport {
    Integer complexity;
    GroupStructure group;
    std::size_t gamma = 0;
    std::size_t delta = 0;
    std::size_t loops = 0;
    long long betti = 0;
    long long genus = 0;
};

/// Complexity and group of a connected graph; checks |group| == complexity.
DcgReport dcg_report(const Multigraph& g);

} // namespace ndcg
