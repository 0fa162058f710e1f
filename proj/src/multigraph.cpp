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

#include "nodaldcg/multigraph.hpp"

#include "nodaldcg/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace ndcg {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

std::vector<std::pair<VertexIndex, VertexIndex>> sorted_endpoints(std::span<const Edge> edges)
{
    std::vector<std::pair<VertexIndex, VertexIndex>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges)
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<unsigned> genus)
    : edges_(std::move(edges)), genus_(std::move(genus))
{
    if (vertex_count == 0)
        throw InvalidArgument("a graph needs at least one vertex");
    if (genus_.empty())
        genus_.assign(vertex_count, 0);
    else if (genus_.size() != vertex_count)
        throw InvalidArgument("genus vector has " + std::to_string(genus_.size())
                              + " entries for " + std::to_string(vertex_count) + " vertices");

    std::unordered_set<std::uint64_t> seen;
    for (const Edge& e : edges_) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw InvalidArgument("edge " + std::to_string(raw(e.id)) + " has an endpoint out of range");
        if (!seen.insert(raw(e.id)).second)
            throw InvalidArgument("duplicate edge id " + std::to_string(raw(e.id)));
    }
}

Multigraph Multigraph::from_pairs(std::size_t vertex_count,
                                  std::span<const std::pair<VertexIndex, VertexIndex>> pairs,
                                  std::vector<unsigned> genus)
{
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        edges.push_back({EdgeId{i}, pairs[i].first, pairs[i].second});
    return Multigraph(vertex_count, std::move(edges), std::move(genus));
}

Multigraph Multigraph::from_pairs(std::size_t vertex_count,
                                  std::initializer_list<std::pair<VertexIndex, VertexIndex>> pairs,
                                  std::vector<unsigned> genus)
{
    return from_pairs(vertex_count, std::span(pairs.begin(), pairs.size()), std::move(genus));
}

std::size_t Multigraph::loop_count() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

std::optional<Edge> Multigraph::find_edge(EdgeId id) const noexcept
{
    auto it = std::find_if(edges_.begin(), edges_.end(), [id](const Edge& e) { return e.id == id; });
    if (it == edges_.end())
        return std::nullopt;
    return *it;
}

const Edge& Multigraph::edge(EdgeId id) const
{
    auto it = std::find_if(edges_.begin(), edges_.end(), [id](const Edge& e) { return e.id == id; });
    if (it == edges_.end())
        throw InvalidArgument("unknown edge id " + std::to_string(raw(id)));
    return *it;
}

EdgeId Multigraph::next_edge_id() const noexcept
{
    std::uint64_t next = 0;
    for (const Edge& e : edges_)
        next = std::max(next, raw(e.id) + 1);
    return EdgeId{next};
}

std::size_t Multigraph::degree(VertexIndex v) const
{
    if (!has_vertex(v))
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    std::size_t d = 0;
    for (const Edge& e : edges_)
        d += static_cast<std::size_t>(e.u == v) + static_cast<std::size_t>(e.v == v);
    return d;
}

bool Multigraph::same_structure(const Multigraph& other) const
{
    return genus_ == other.genus_ && sorted_endpoints(edges_) == sorted_endpoints(other.edges_);
}

Multigraph loopless_reduction(const Multigraph& g)
{
    std::vector<Edge> kept;
    kept.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        if (!e.is_loop())
            kept.push_back(e);
    return Multigraph(g.vertex_count(), std::move(kept), {g.genus().begin(), g.genus().end()});
}

std::size_t connected_components(const Multigraph& g)
{
    DisjointSets sets(g.vertex_count());
    std::size_t components = g.vertex_count();
    for (const Edge& e : g.edges())
        if (sets.unite(e.u, e.v))
            --components;
    return components;
}

bool is_connected(const Multigraph& g) { return connected_components(g) == 1; }

long long first_betti(const Multigraph& g)
{
    if (!is_connected(g))
        throw DisconnectedGraph("first Betti number requires a connected graph");
    return static_cast<long long>(g.edge_count()) - static_cast<long long>(g.vertex_count()) + 1;
}

long long arithmetic_genus(const Multigraph& g)
{
    long long total = first_betti(g);
    for (unsigned w : g.genus())
        total += w;
    return total;
}

Multigraph delete_edge(const Multigraph& g, EdgeId e)
{
    g.edge(e);
    std::vector<Edge> kept;
    kept.reserve(g.edge_count());
    for (const Edge& x : g.edges())
        if (x.id != e)
            kept.push_back(x);
    return Multigraph(g.vertex_count(), std::move(kept), {g.genus().begin(), g.genus().end()});
}

Multigraph contract_edge(const Multigraph& g, EdgeId e)
{
    const Edge target = g.edge(e);
    if (target.is_loop())
        throw InvalidArgument("cannot contract loop " + std::to_string(raw(e)));

    const VertexIndex keep = std::min(target.u, target.v);
    const VertexIndex drop = std::max(target.u, target.v);
    auto remap = [&](VertexIndex w) {
        if (w == drop)
            return keep;
        return w > drop ? w - 1 : w;
    };

    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (const Edge& x : g.edges())
        if (x.id != e)
            edges.push_back({x.id, remap(x.u), remap(x.v)});

    std::vector<unsigned> genus(g.genus().begin(), g.genus().end());
    genus[keep] += genus[drop];
    genus.erase(genus.begin() + static_cast<std::ptrdiff_t>(drop));
    return Multigraph(g.vertex_count() - 1, std::move(edges), std::move(genus));
}

Multigraph wedge_sum(const Multigraph& g1, const Multigraph& g2, VertexIndex v1, VertexIndex v2)
{
    if (!g1.has_vertex(v1) || !g2.has_vertex(v2))
        throw InvalidArgument("wedge point out of range");

    const std::size_t n1 = g1.vertex_count();
    auto remap = [&](VertexIndex w) -> VertexIndex {
        if (w == v2)
            return v1;
        return n1 + (w > v2 ? w - 1 : w);
    };

    std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
    const std::uint64_t shift = raw(g1.next_edge_id());
    for (const Edge& x : g2.edges())
        edges.push_back({EdgeId{raw(x.id) + shift}, remap(x.u), remap(x.v)});

    std::vector<unsigned> genus(g1.genus().begin(), g1.genus().end());
    genus[v1] += g2.genus(v2);
    for (VertexIndex w = 0; w < g2.vertex_count(); ++w)
        if (w != v2)
            genus.push_back(g2.genus(w));
    return Multigraph(n1 + g2.vertex_count() - 1, std::move(edges), std::move(genus));
}

Multigraph relabel_vertices(const Multigraph& g, std::span<const VertexIndex> perm)
{
    const std::size_t n = g.vertex_count();
    if (perm.size() != n)
        throw InvalidArgument("permutation has the wrong length");
    std::vector<bool> hit(n, false);
    for (VertexIndex p : perm) {
        if (p >= n || hit[p])
            throw InvalidArgument("not a permutation");
        hit[p] = true;
    }

    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        edges.push_back({e.id, perm[e.u], perm[e.v]});
    std::vector<unsigned> genus(n);
    for (VertexIndex v = 0; v < n; ++v)
        genus[perm[v]] = g.genus(v);
    return Multigraph(n, std::move(edges), std::move(genus));
}

} // namespace ndcg
