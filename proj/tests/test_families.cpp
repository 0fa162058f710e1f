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

#include <functional>
#include <random>

using namespace ndcg;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

GroupStructure cyclic(long n)
{
    const Integer x[] = {n};
    return canonical_group(x);
}

// Tridiagonal determinant with the k_i on the diagonal and -1 beside it.
Integer continuant(const std::vector<unsigned>& k)
{
    IntMatrix t(k.size(), k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        t(i, i) = k[i];
        if (i + 1 < k.size())
            t(i, i + 1) = t(i + 1, i) = -1;
    }
    return oracle::cofactor_determinant(t);
}

std::vector<unsigned long> random_m(std::mt19937_64& rng, std::size_t max_n, unsigned long max_m)
{
    std::vector<unsigned long> m(2 + rng() % (max_n - 1));
    for (auto& x : m)
        x = 1 + rng() % max_m;
    return m;
}

// First vertex after A on path k of the vine graph (B itself for a single edge).
VertexIndex first_inner_vertex(const VineParams& p, std::size_t k)
{
    if (p[k] == 1)
        return 1;
    VertexIndex v = 2;
    for (std::size_t i = 0; i < k; ++i)
        v += p[i] - 1;
    return v;
}

} // namespace

TEST_CASE("banana and cycle graphs")
{
    CHECK(banana_graph(1).edge_count() == 1);
    CHECK(banana_graph(3).vertex_count() == 2);
    CHECK(cycle_graph(1).loop_count() == 1);
    CHECK(complexity_mtt(cycle_graph(1)) == 1);
    CHECK(cycle_graph(2).same_structure(banana_graph(2)));
    for (long k = 2; k <= 9; ++k) {
        CHECK(degree_class_group(banana_graph(k)) == cyclic(k));
        CHECK(degree_class_group(cycle_graph(k)) == cyclic(k));
    }
    CHECK_THROWS_AS(banana_graph(0), InvalidArgument);
    CHECK_THROWS_AS(cycle_graph(0), InvalidArgument);
}

TEST_CASE("chain of cycles construction")
{
    for (unsigned k = 2; k <= 6; ++k)
        CHECK(chain_of_cycles({{k}, {1}}).same_structure(cycle_graph(k)));

    for (unsigned e = 2; e <= 6; ++e) {
        const Multigraph g = chain_of_cycles({std::vector<unsigned>(e - 1, 2), std::vector<unsigned>(e - 1, 1)});
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == e);
        CHECK(degree_class_group(g) == degree_class_group(banana_graph(e)));
    }

    const Multigraph six = chain_of_cycles({{3, 4, 5, 6, 3, 2}, {2, 2, 2, 3, 1, 1}});
    CHECK(six.vertex_count() == 13);
    CHECK(six.edge_count() == 18);

    CHECK_THROWS_AS(chain_of_cycles({{3, 4}, {1}}), InvalidArgument);
    CHECK_THROWS_AS(chain_of_cycles({{3, 4}, {3, 1}}), InvalidArgument);
    CHECK_THROWS_AS(chain_of_cycles({{1}, {1}}), InvalidArgument);
}

TEST_CASE("chain of cycles complexity")
{
    for (unsigned k = 2; k <= 9; ++k)
        CHECK(cs_complexity(std::vector<unsigned>{k}) == k);
    for (unsigned a = 2; a <= 6; ++a)
        for (unsigned b = 2; b <= 6; ++b) {
            CHECK(cs_complexity(std::vector<unsigned>{a, b}) == a * b - 1);
            for (unsigned c = 2; c <= 6; ++c)
                CHECK(cs_complexity(std::vector<unsigned>{a, b, c}) == a * b * c - a - c);
        }
    CHECK(cs_complexity(std::vector<unsigned>{3, 4, 5}) == 52);

    const Multigraph g = chain_of_cycles({{3, 4, 5}, {2, 2, 2}});
    CHECK(complexity_enumeration(g) == 52);
    CHECK(degree_class_group(g) == cyclic(52));
}

TEST_CASE("chain of cycles: every gluing gives the same cyclic group")
{
    std::mt19937_64 rng(0xc5);
    for (int trial = 0; trial < 80; ++trial) {
        ChainOfCyclesParams p;
        const std::size_t n = 1 + rng() % 4;
        for (std::size_t i = 0; i < n; ++i) {
            p.k.push_back(2 + static_cast<unsigned>(rng() % 5));
            p.h.push_back(1 + static_cast<unsigned>(rng() % (p.k.back() - 1)));
        }
        const Multigraph g = chain_of_cycles(p);
        const Integer expected = cs_complexity(p.k);
        CHECK(expected == continuant(p.k));
        CHECK(complexity_mtt(g) == expected);
        CHECK(complexity_deletion_contraction(g) == expected);
        const GroupStructure group = degree_class_group(g);
        CHECK(group.invariant_factors.size() <= 1);
        CHECK(group.order() == expected);
    }
}

TEST_CASE("equal-length polynomial")
{
    CHECK(to_string(cs_equal_k_polynomial(1)) == "k");
    CHECK(cs_equal_k_polynomial(2).coefficients == ints({-1, 0, 1}));
    CHECK(cs_equal_k_polynomial(3).coefficients == ints({0, -2, 0, 1}));
    CHECK(to_string(cs_equal_k_polynomial(2)) == "k^2 - 1");
    CHECK(to_string(cs_equal_k_polynomial(3)) == "k^3 - 2k");
    CHECK(cs_equal_k_polynomial(4).coefficients == ints({1, 0, -3, 0, 1}));
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 2; k <= 6; ++k)
            CHECK(cs_equal_k_polynomial(n)(k) == continuant(std::vector<unsigned>(n, k)));
    CHECK_THROWS_AS(cs_equal_k_polynomial(0), InvalidArgument);
}

TEST_CASE("vine graphs")
{
    CHECK(vine_graph(VineParams({1, 1, 1, 1})).same_structure(banana_graph(4)));
    const Multigraph g = vine_graph(VineParams({1, 2, 1}));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 4);
    CHECK(VineParams({1, 2, 1})[0] == 2);
    CHECK(vine_graph(VineParams({5, 3, 2})).vertex_count() == 2 + 4 + 2 + 1);
    CHECK_THROWS_AS(VineParams({3}), InvalidArgument);
    CHECK_THROWS_AS(VineParams({3, 0}), InvalidArgument);
}

TEST_CASE("vine closed forms")
{
    CHECK(vine_complexity(VineParams({1, 1, 1})) == 3);
    CHECK(vine_complexity(VineParams({2, 3, 5})) == 31);
    CHECK(complexity_enumeration(vine_graph(VineParams({2, 3, 5}))) == 31);
    for (unsigned long n = 2; n <= 5; ++n)
        for (unsigned long m = 1; m <= 4; ++m) {
            const VineParams p(std::vector<unsigned long>(n, m));
            Integer power;
            mpz_ui_pow_ui(power.get_mpz_t(), m, n - 1);
            CHECK(vine_complexity(p) == n * power);
            for (std::size_t k = 0; k < n; ++k)
                CHECK(vine_generator_order(VineParams(std::vector<unsigned long>(n, 1)), k) == n);
        }

    CHECK(vine_generator_order(VineParams({2, 3, 5}), 2) == 31);
    CHECK(vine_generator_order(VineParams({2, 2, 2, 2}), 0) == 8);

    CHECK(vine_cyclic_by_tk(VineParams({6, 2, 3}), 0));
    for (std::size_t k = 0; k < 4; ++k)
        CHECK_FALSE(vine_cyclic_by_tk(VineParams({2, 2, 2, 2}), k));
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(vine_cyclic_by_tk(VineParams({2, 3, 5}), k));

    CHECK(vine_presentation(VineParams({4, 3})) == IntMatrix{{7}});
    const unsigned long raw_order[] = {2, 3, 5};
    CHECK(vine_presentation_matrix(raw_order) == IntMatrix{{7, 5}, {5, 8}});
    CHECK(determinant(vine_presentation(VineParams({2, 3, 5}))) == 31);

    CHECK(vine_structure(VineParams({1, 1, 1})) == cyclic(3));
    CHECK(vine_structure(VineParams({2, 2, 2, 2})).invariant_factors == ints({2, 2, 8}));
    CHECK(vine_structure(VineParams({2, 3, 5})) == cyclic(31));

    CHECK(vine_structure_equal_m(4, 1, 3) == cyclic(10));
    CHECK(vine_structure_equal_m(4, 4, 2).invariant_factors == ints({2, 2, 8}));
    CHECK(vine_structure_equal_m(3, 2, 2) == cyclic(8));
    CHECK(degree_class_group(vine_graph(VineParams({2, 2, 1}))) == cyclic(8));

    CHECK(dollar_structure(VineParams({1, 1, 1})) == cyclic(3));
    CHECK(dollar_structure(VineParams({2, 3, 5})) == cyclic(31));
    CHECK(dollar_structure(VineParams({2, 2, 4})).invariant_factors == ints({2, 10}));
    CHECK(degree_class_group(vine_graph(VineParams({2, 2, 4}))).invariant_factors == ints({2, 10}));
    CHECK_THROWS_AS(dollar_structure(VineParams({1, 1})), InvalidArgument);
}

TEST_CASE("vine formulas against the graph on random parameters")
{
    std::mt19937_64 rng(0x5e);
    for (int trial = 0; trial < 80; ++trial) {
        const VineParams p(random_m(rng, 5, 5));
        const Multigraph g = vine_graph(p);
        const Integer c = vine_complexity(p);
        CHECK(complexity_mtt(g) == c);
        CHECK(determinant(vine_presentation(p)) == c);
        const GroupStructure group = degree_class_group(g);
        CHECK(vine_structure(p) == group);

        const IntMatrix relations = vine_relation_matrix(p);
        const IntMatrix reduced = reduced_presentation(g);
        for (std::size_t k = 0; k < p.size(); ++k) {
            std::vector<Integer> t(p.size());
            t[k] = 1;
            const Integer order = vine_generator_order(p, k);
            CHECK(element_order(relations, t) == order);

            // Class of (first vertex on path k) - A, with the last coordinate dropped.
            std::vector<Integer> v(g.vertex_count() - 1);
            const VertexIndex r = first_inner_vertex(p, k);
            if (r < v.size())
                v[r] += 1;
            v[0] -= 1;
            CHECK(element_order(reduced, v) == order);
            if (reduced.rows() <= 6)
                CHECK(oracle::brute_force_order(reduced, v, order.get_si()) == order);
            CHECK(vine_cyclic_by_tk(p, k) == (order == c));
        }
    }
}

TEST_CASE("gcd scaling of vine groups")
{
    std::mt19937_64 rng(0x38);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<unsigned long> m = random_m(rng, 5, 4);
        const unsigned long d = 1 + rng() % 4;
        std::vector<unsigned long> scaled(m);
        for (auto& x : scaled)
            x *= d;
        const GroupStructure base = vine_structure(VineParams(m));
        const GroupStructure group = degree_class_group(vine_graph(VineParams(scaled)));
        CHECK(vine_structure(VineParams(scaled)) == group);
        // Scaling by d multiplies every factor by d and pads with copies of d.
        const Integer g = [&] {
            Integer x = 0;
            for (unsigned long y : m)
                x = gcd(x, Integer(y));
            return x;
        }();
        if (g == 1) {
            std::vector<Integer> predicted;
            for (const Integer& f : base.invariant_factors)
                predicted.push_back(f * d);
            predicted.insert(predicted.end(), m.size() - 1 - base.invariant_factors.size(), Integer(d));
            CHECK(canonical_group(predicted) == group);
        }
    }
}

TEST_CASE("equal multiplicities and dollar curves against the graph")
{
    for (unsigned n = 2; n <= 5; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (unsigned long m = 1; m <= 4; ++m) {
                std::vector<unsigned long> ms(n, 1);
                std::fill(ms.begin(), ms.begin() + k, m);
                CHECK(vine_structure_equal_m(n, k, m) == degree_class_group(vine_graph(VineParams(ms))));
            }
    for (unsigned long a = 1; a <= 8; ++a)
        for (unsigned long b = 1; b <= 8; ++b)
            for (unsigned long c = 1; c <= 8; ++c) {
                const VineParams p({a, b, c});
                CHECK(dollar_structure(p) == vine_structure(p));
            }
}
