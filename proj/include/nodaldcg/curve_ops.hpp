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

#include "nodaldcg/integer.hpp"
#include "nodaldcg/multigraph.hpp"

#include <map>
#include <span>

namespace ndcg {

/// Number of blow-ups k_e to perform at each node; absent edges mean 0.
using BlowUpVector = std::map<EdgeId, unsigned>;

/**
 * Blows up the node of edge `e` `times` times. A non-loop edge u-v becomes
 * the path u - w1 - ... - wk - v; a loop at u becomes the (k+1)-cycle
 * u - w1 - ... - wk - u. New genus-0 vertices are appended in path order.
 * The first segment keeps the id of `e`, the other segments get fresh ids.
 */
Multigraph blow_up(const Multigraph& g, EdgeId e, unsigned times = 1);

/// Normalisation at a node: the edge is deleted.
Multigraph normalise(const Multigraph& g, EdgeId e);

Multigraph normalisation_subset(const Multigraph& g, std::span<const EdgeId> nodes);

/// Smoothing of a node joining two distinct components: the edge is contracted.
Multigraph smooth(const Multigraph& g, EdgeId e);

/// Blow-ups processed in ascending edge-id order.
Multigraph multi_blow_up(const Multigraph& g, const BlowUpVector& k);

/**
 * Sum over subsets T of the support S of k of (prod_{e in T} k_e) * c(N_T G),
 * each complexity by the matrix-tree theorem. Throws InvalidArgument when the
 * support contains a loop.
 */
Integer blow_up_complexity_formula(const Multigraph& g, const BlowUpVector& k);

} // namespace ndcg
