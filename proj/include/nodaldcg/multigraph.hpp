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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ndcg {

using VertexIndex = std::size_t;

/// Stable identifier of an edge. Survives deletion and contraction of other edges.
enum class EdgeId : std::uint64_t {};

constexpr std::uint64_t raw(EdgeId id) noexcept { return static_cast<std::uint64_t>(id); }

struct Edge {
    EdgeId id;
    VertexIndex u;
    VertexIndex v;

    bool is_loop() const noexcept { return u == v; }
    /// Endpoint that is not `w` (or `w` itself for a loop).
    VertexIndex other(VertexIndex w) const noexcept { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Dual graph of a nodal curve: one vertex per irreducible component (carrying
 * its geometric genus), one edge per node. Loops and parallel edges allowed.
 *
 * Values are immutable; every operation below returns a new graph.
 */
class Multigraph {
public:
    /// Validates endpoints, id uniqueness and the genus vector length.
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges,
               std::vector<unsigned> genus = {});

    /// Edge ids are assigned 0, 1, ... in the order of `pairs`.
    static Multigraph from_pairs(std::size_t vertex_count,
                                 std::span<const std::pair<VertexIndex, VertexIndex>> pairs,
                                 std::vector<unsigned> genus = {});
    static Multigraph from_pairs(std::size_t vertex_count,
                                 std::initializer_list<std::pair<VertexIndex, VertexIndex>> pairs,
                                 std::vector<unsigned> genus = {});

    std::size_t vertex_count() const noexcept { return genus_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t loop_count() const noexcept;

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const unsigned> genus() const noexcept { return genus_; }
    unsigned genus(VertexIndex v) const { return genus_.at(v); }

    std::optional<Edge> find_edge(EdgeId id) const noexcept;
    /// Throws InvalidArgument for an unknown id.
    const Edge& edge(EdgeId id) const;
    bool has_vertex(VertexIndex v) const noexcept { return v < vertex_count(); }

    /// Smallest id strictly larger than every id in use.
    EdgeId next_edge_id() const noexcept;

    /// Half-edge degree: a loop contributes 2.
    std::size_t degree(VertexIndex v) const;

    /// Same vertex count, genus weights, and edge multiset (ignoring ids).
    bool same_structure(const Multigraph& other) const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::vector<Edge> edges_;
    std::vector<unsigned> genus_;
};

Multigraph loopless_reduction(const Multigraph& g);

/// Loops are irrelevant; the one-vertex graph is connected.
bool is_connected(const Multigraph& g);

std::size_t connected_components(const Multigraph& g);

/// b1 = edges - vertices + 1, loops included. Throws DisconnectedGraph.
long long first_betti(const Multigraph& g);

/// Sum of component genera plus b1. Throws DisconnectedGraph.
long long arithmetic_genus(const Multigraph& g);

Multigraph delete_edge(const Multigraph& g, EdgeId e);

/**
 * Merges the endpoints of the non-loop edge `e` into the lower of the two
 * vertex indices; the higher index is removed and later indices shift down.
 * Other edges between the endpoints become loops. Genera add.
 */
Multigraph contract_edge(const Multigraph& g, EdgeId e);

/**
 * Disjoint union with `v1` identified to `v2`. Vertices of `g1` keep their
 * indices, `g2`'s vertices other than `v2` follow in order. Edge ids of `g2`
 * are shifted past those of `g1`.
 */
Multigraph wedge_sum(const Multigraph& g1, const Multigraph& g2, VertexIndex v1,
                     VertexIndex v2);

/// Applies `perm` (old index -> new index) to every endpoint and weight.
Multigraph relabel_vertices(const Multigraph& g, std::span<const VertexIndex> perm);

} // namespace ndcg
