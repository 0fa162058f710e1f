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

#include "nodaldcg/curve_ops.hpp"

#include "nodaldcg/dcg.hpp"
#include "nodaldcg/error.hpp"

#include <string>
#include <vector>

namespace ndcg {

Multigraph blow_up(const Multigraph& g, EdgeId e, unsigned times)
{
    const Edge target = g.edge(e);
    if (times == 0)
        return g;

    const VertexIndex first_new = g.vertex_count();
    std::uint64_t fresh = raw(g.next_edge_id());

    std::vector<Edge> edges;
    edges.reserve(g.edge_count() + times);
    for (const Edge& x : g.edges()) {
        if (x.id != e) {
            edges.push_back(x);
            continue;
        }
        // chain u = w0, w1..wk, w(k+1) = v; a loop closes back at u
        edges.push_back({e, target.u, first_new});
        for (unsigned i = 1; i < times; ++i)
            edges.push_back({EdgeId{fresh++}, first_new + i - 1, first_new + i});
        edges.push_back({EdgeId{fresh++}, first_new + times - 1, target.v});
    }

    std::vector<unsigned> genus(g.genus().begin(), g.genus().end());
    genus.resize(g.vertex_count() + times, 0);
    return Multigraph(g.vertex_count() + times, std::move(edges), std::move(genus));
}

Multigraph normalise(const Multigraph& g, EdgeId e) { return delete_edge(g, e); }

Multigraph normalisation_subset(const Multigraph& g, std::span<const EdgeId> nodes)
{
    for (EdgeId id : nodes)
        g.edge(id);
    std::vector<Edge> kept;
    for (const Edge& x : g.edges()) {
        bool drop = false;
        for (EdgeId id : nodes)
            drop = drop || x.id == id;
        if (!drop)
            kept.push_back(x);
    }
    return Multigraph(g.vertex_count(), std::move(kept), {g.genus().begin(), g.genus().end()});
}

Multigraph smooth(const Multigraph& g, EdgeId e) { return contract_edge(g, e); }

Multigraph multi_blow_up(const Multigraph& g, const BlowUpVector& k)
{
    for (const auto& [id, times] : k)
        g.edge(id);
    Multigraph out = g;
    for (const auto& [id, times] : k)
        if (times > 0)
            out = blow_up(out, id, times);
    return out;
}

Integer blow_up_complexity_formula(const Multigraph& g, const BlowUpVector& k)
{
    std::vector<std::pair<EdgeId, unsigned>> support;
    for (const auto& [id, times] : k) {
        if (g.edge(id).is_loop() && times > 0)
            throw InvalidArgument("blow-up formula needs a loop-free support; edge "
                                  + std::to_string(raw(id)) + " is a loop");
        if (times > 0)
            support.emplace_back(id, times);
    }
    if (support.size() >= 63)
        throw InvalidArgument("support too large for subset summation");

    Integer total = 0;
    std::vector<EdgeId> subset;
    const std::uint64_t subsets = std::uint64_t{1} << support.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        subset.clear();
        Integer weight = 1;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (mask >> i & 1U) {
                subset.push_back(support[i].first);
                weight *= support[i].second;
            }
        total += weight * complexity_mtt(normalisation_subset(g, subset));
    }
    return total;
}

} // namespace ndcg
