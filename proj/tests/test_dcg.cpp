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

#include "doctest.h"
#include "oracles.hpp"

#include "nodaldcg/dcg.hpp"
#include "nodaldcg/error.hpp"
#include "nodaldcg/families.hpp"

#include <random>

using namespace ndcg;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

Multigraph k4() { return Multigraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// Square 0-1-3-2-0 with the sides 0-2 and 1-3 doubled.
Multigraph doubled_square()
{
    return Multigraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 2}, {1, 3}, {1, 3}, {2, 3}});
}

Integer all_engines(const Multigraph& g)
{
    const Integer c = complexity_mtt(g);
    CHECK(complexity_deletion_contraction(g) == c);
    CHECK(complexity_enumeration(g) == c);
    return c;
}

} // namespace

TEST_CASE("intersection matrices")
{
    for (long k = 1; k <= 5; ++k)
        CHECK(intersection_matrix(banana_graph(static_cast<unsigned>(k))) == IntMatrix{{-k, k}, {k, -k}});
    CHECK(intersection_matrix(cycle_graph(3)) == IntMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
    CHECK(intersection_matrix(Multigraph::from_pairs(1, {{0, 0}, {0, 0}})) == IntMatrix{{0}});
}

TEST_CASE("complexity of small families")
{
    for (unsigned k = 1; k <= 8; ++k) {
        CHECK(all_engines(cycle_graph(k)) == k);
        CHECK(all_engines(banana_graph(k)) == k);
    }
    CHECK(all_engines(k4()) == 16);
    CHECK(all_engines(Multigraph::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}})) == 3);
    CHECK(all_engines(wedge_sum(cycle_graph(3), cycle_graph(3), 0, 1)) == 9);
    CHECK(all_engines(wedge_sum(cycle_graph(3), cycle_graph(4), 2, 0)) == 12);
    CHECK(all_engines(Multigraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}})) == 1);
    CHECK(all_engines(doubled_square()) == 12);
    CHECK(all_engines(Multigraph(1, {})) == 1);
}

TEST_CASE("disconnected graphs")
{
    const Multigraph two_edges = Multigraph::from_pairs(4, {{0, 1}, {2, 3}});
    CHECK(complexity_mtt(two_edges) == 0);
    CHECK(complexity_deletion_contraction(two_edges) == 0);
    CHECK(complexity_enumeration(two_edges) == 0);
    CHECK_THROWS_AS(degree_class_group(two_edges), DisconnectedGraph);
    CHECK_THROWS_AS(dcg_report(two_edges), DisconnectedGraph);
}

TEST_CASE("enumeration limit")
{
    CHECK_THROWS_AS(complexity_enumeration(banana_graph(30)), LimitExceeded);
    CHECK(complexity_enumeration(banana_graph(30), 30) == 30);
    CHECK(complexity_enumeration(Multigraph::from_pairs(2, {{0, 1}, {0, 0}, {0, 0}}), 1) == 1);
}

TEST_CASE("degree class groups")
{
    CHECK(degree_class_group(banana_graph(4)).invariant_factors == ints({4}));
    CHECK(degree_class_group(k4()).invariant_factors == ints({4, 4}));
    // Cofactor and determinantal-divisor oracles both give a cyclic group here:
    // the 2x2 minors 8 and 9 of the reduced matrix are coprime.
    const IntMatrix reduced = reduced_presentation(doubled_square());
    CHECK(oracle::determinantal_divisors_diagonal(reduced) == ints({1, 1, 12}));
    CHECK(degree_class_group(doubled_square()).invariant_factors == ints({12}));
    CHECK(degree_class_group(Multigraph(1, {})).is_trivial());
    for (unsigned k = 2; k <= 6; ++k)
        CHECK(degree_class_group(cycle_graph(k)).invariant_factors == ints({k}));
}

TEST_CASE("reports")
{
    const DcgReport tree = dcg_report(Multigraph::from_pairs(3, {{0, 1}, {0, 2}}));
    CHECK(tree.complexity == 1);
    CHECK(tree.group.is_trivial());
    CHECK(tree.betti == 0);

    const DcgReport c5 = dcg_report(cycle_graph(5));
    CHECK(c5.complexity == 5);
    CHECK(c5.group.invariant_factors == ints({5}));

    const Multigraph cs2 = chain_of_cycles({{3, 4}, {2, 1}});
    const DcgReport r = dcg_report(cs2);
    CHECK(r.complexity == 11);
    CHECK(complexity_enumeration(cs2) == 11);
    CHECK(r.group.invariant_factors == ints({11}));

    const DcgReport looped = dcg_report(Multigraph::from_pairs(2, {{0, 1}, {1, 1}}, {1, 0}));
    CHECK(looped.loops == 1);
    CHECK(looped.genus == 2);
    CHECK(looped.delta == 2);
    CHECK(looped.gamma == 2);
}

TEST_CASE("complexity and group properties on random graphs")
{
    std::mt19937_64 rng(0xdc9);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<std::size_t> nv(1, 6), extra(0, 5), loops(0, 2);
        const std::size_t n = nv(rng);
        const Multigraph g = oracle::random_connected(rng, n, n - 1 + (n > 1 ? extra(rng) : 0), loops(rng));
        const Multigraph stripped = loopless_reduction(g);
        const Integer c = all_engines(g);
        const GroupStructure group = degree_class_group(g);
        CHECK(group.order() == c);
        CHECK(complexity_mtt(stripped) == c);
        CHECK(degree_class_group(stripped) == group);

        const std::vector<VertexIndex> perm = oracle::random_permutation(rng, n);
        const Multigraph relabelled = relabel_vertices(g, perm);
        CHECK(complexity_mtt(relabelled) == c);
        CHECK(degree_class_group(relabelled) == group);

        const IntMatrix m = intersection_matrix(g);
        for (std::size_t r = 0; r < n && n > 1; ++r)
            for (std::size_t t = 0; t < n; ++t)
                CHECK(invariant_factors_of_cokernel(m.without(r, t), n - 1) == group);

        // c(G) = c(G - e) + c(G / e)
        for (const Edge& e : g.edges())
            if (!e.is_loop())
                CHECK(c == complexity_mtt(delete_edge(g, e.id)) + complexity_mtt(contract_edge(g, e.id)));

        // c(G) = c(G minus all r edges joining v, w) + r * c(that graph with v and w identified)
        for (VertexIndex v = 0; v < n; ++v)
            for (VertexIndex w = v + 1; w < n; ++w) {
                std::vector<EdgeId> between;
                for (const Edge& e : g.edges())
                    if ((e.u == v && e.v == w) || (e.u == w && e.v == v))
                        between.push_back(e.id);
                if (between.empty())
                    continue;
                Multigraph others_removed = g;
                for (std::size_t i = 1; i < between.size(); ++i)
                    others_removed = delete_edge(others_removed, between[i]);
                const Multigraph removed = delete_edge(others_removed, between[0]);
                const Multigraph identified = contract_edge(others_removed, between[0]);
                const Integer r = static_cast<long>(between.size());
                CHECK(c == complexity_mtt(removed) + r * complexity_mtt(identified));
            }
    }
}

TEST_CASE("wedge sums merge the groups")
{
    std::mt19937_64 rng(0x3ed9e);
    for (int trial = 0; trial < 60; ++trial) {
        const Multigraph a = oracle::random_connected_loopless(rng, 4, 7);
        const Multigraph b = oracle::random_connected_loopless(rng, 4, 7);
        const VertexIndex va = rng() % a.vertex_count(), vb = rng() % b.vertex_count();
        const Multigraph w = wedge_sum(a, b, va, vb);
        const GroupStructure group = degree_class_group(w);
        CHECK(group == direct_sum(degree_class_group(a), degree_class_group(b)));
        const IntMatrix stacked = block_diagonal(reduced_presentation(a), reduced_presentation(b));
        CHECK(group == invariant_factors_of_cokernel(stacked, stacked.rows()));
        CHECK(complexity_mtt(w) == complexity_mtt(a) * complexity_mtt(b));
    }
}
