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

#include "nodaldcg/dcg.hpp"

#include "nodaldcg/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

namespace ndcg {

IntMatrix intersection_matrix(const Multigraph& g)
{
    const std::size_t n = g.vertex_count();
    IntMatrix m(n, n);
    for (const Edge& e : g.edges()) {
        if (e.is_loop())
            continue;
        m(e.u, e.v) += 1;
        m(e.v, e.u) += 1;
        m(e.u, e.u) -= 1;
        m(e.v, e.v) -= 1;
    }
    return m;
}

IntMatrix reduced_presentation(const Multigraph& g)
{
    // intersection_matrix without its last row and column; counts are
    // gathered in machine integers so untouched entries never allocate
    const std::size_t last = g.vertex_count() - 1;
    std::vector<long> counts(last * last, 0);
    for (const Edge& e : g.edges()) {
        if (e.is_loop())
            continue;
        if (e.u != last && e.v != last) {
            ++counts[e.u * last + e.v];
            ++counts[e.v * last + e.u];
        }
        if (e.u != last)
            --counts[e.u * last + e.u];
        if (e.v != last)
            --counts[e.v * last + e.v];
    }
    IntMatrix m(last, last);
    for (std::size_t i = 0; i < last; ++i)
        for (std::size_t j = 0; j < last; ++j)
            if (counts[i * last + j] != 0)
                m(i, j) = counts[i * last + j];
    return m;
}

Integer complexity_mtt(const Multigraph& g)
{
    const std::size_t n = g.vertex_count();
    // (-1)^(s+t+n-1) det(M^s_t) with s = t = n
    Integer c = determinant(reduced_presentation(g));
    if ((n - 1) % 2 == 1)
        c = -c;
    return c;
}

namespace {

Integer deletion_contraction(const Multigraph& g)
{
    if (g.vertex_count() == 1)
        return 1;
    if (!is_connected(g))
        return 0;

    const Edge* pick = nullptr;
    auto key = [](const Edge& e) {
        return std::tuple(std::min(e.u, e.v), std::max(e.u, e.v), raw(e.id));
    };
    for (const Edge& e : g.edges())
        if (!e.is_loop() && (pick == nullptr || key(e) < key(*pick)))
            pick = &e;

    const EdgeId id = pick->id;
    return deletion_contraction(delete_edge(g, id))
        + deletion_contraction(loopless_reduction(contract_edge(g, id)));
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
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

} // namespace

Integer complexity_deletion_contraction(const Multigraph& g)
{
    return deletion_contraction(loopless_reduction(g));
}

Integer complexity_enumeration(const Multigraph& g, std::size_t edge_limit)
{
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!e.is_loop())
            edges.push_back(e);
    if (edges.size() > edge_limit)
        throw LimitExceeded("enumeration over " + std::to_string(edges.size())
                            + " edges exceeds the limit of " + std::to_string(edge_limit)
                            + "; use the matrix-tree method");

    const std::size_t n = g.vertex_count();
    const std::size_t choose = n - 1;
    if (choose == 0)
        return 1;
    if (edges.size() < choose)
        return 0;

    // Walk all (n-1)-combinations of edge indices in lexicographic order.
    std::vector<std::size_t> pick(choose);
    std::iota(pick.begin(), pick.end(), 0);
    Integer count = 0;
    const std::size_t m = edges.size();
    for (;;) {
        UnionFind sets(n);
        bool acyclic = true;
        for (std::size_t i : pick)
            if (!sets.unite(edges[i].u, edges[i].v)) {
                acyclic = false;
                break;
            }
        if (acyclic)
            ++count;

        std::size_t i = choose;
        while (i > 0 && pick[i - 1] == m - choose + (i - 1))
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < choose; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return count;
}

GroupStructure degree_class_group(const Multigraph& g)
{
    if (!is_connected(g))
        throw DisconnectedGraph("the degree class group is defined only for connected graphs");
    if (g.vertex_count() == 1)
        return {};
    GroupStructure group = invariant_factors_of_cokernel(reduced_presentation(g), g.vertex_count() - 1);
    if (group.free_rank != 0)
        throw Error("internal error: connected graph produced a presentation with free part");
    return group;
}

DcgReport dcg_report(const Multigraph& g)
{
    DcgReport r;
    r.group = degree_class_group(g);
    r.complexity = complexity_mtt(g);
    r.gamma = g.vertex_count();
    r.delta = g.edge_count();
    r.loops = g.loop_count();
    r.betti = first_betti(g);
    r.genus = arithmetic_genus(g);
    if (r.group.order() != r.complexity)
        throw Error("internal error: group order " + r.group.order().get_str()
                    + " differs from complexity " + r.complexity.get_str());
    return r;
}

} // namespace ndcg
