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

#include "nodaldcg/families.hpp"

#include "nodaldcg/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ndcg {

Multigraph banana_graph(unsigned k)
{
    if (k < 1)
        throw InvalidArgument("banana graph needs at least one edge");
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs(k, {0, 1});
    return Multigraph::from_pairs(2, pairs);
}

Multigraph cycle_graph(unsigned k)
{
    if (k < 1)
        throw InvalidArgument("cycle length must be at least 1");
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    for (unsigned i = 0; i < k; ++i)
        pairs.emplace_back(i, (i + 1) % k);
    return Multigraph::from_pairs(k, pairs);
}

void ChainOfCyclesParams::validate() const
{
    if (k.empty())
        throw InvalidArgument("chain of cycles needs at least one cycle");
    if (k.size() != h.size())
        throw InvalidArgument("k and h must have the same length");
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 2)
            throw InvalidArgument("cycle lengths must be at least 2");
        if (h[i] < 1 || h[i] >= k[i])
            throw InvalidArgument("gluing position h[" + std::to_string(i) + "] must satisfy 1 <= h < k");
    }
}

Multigraph chain_of_cycles(const ChainOfCyclesParams& p)
{
    p.validate();

    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    std::vector<VertexIndex> previous;
    VertexIndex next_vertex = 0;
    for (std::size_t j = 0; j < p.cycles(); ++j) {
        const unsigned len = p.k[j];
        std::vector<VertexIndex> cycle(len);
        if (j == 0) {
            for (unsigned i = 0; i < len; ++i)
                cycle[i] = next_vertex++;
            for (unsigned i = 0; i + 1 < len; ++i)
                pairs.emplace_back(cycle[i], cycle[i + 1]);
            pairs.emplace_back(cycle[len - 1], cycle[0]);
        } else {
            const unsigned h = p.h[j - 1];
            cycle.front() = previous[h - 1];
            cycle.back() = previous[h];
            for (unsigned i = 1; i + 1 < len; ++i)
                cycle[i] = next_vertex++;
            for (unsigned i = 0; i + 1 < len; ++i)
                pairs.emplace_back(cycle[i], cycle[i + 1]);
        }
        previous = std::move(cycle);
    }
    return Multigraph::from_pairs(next_vertex, pairs);
}

Integer cs_complexity(std::span<const unsigned> k)
{
    if (k.empty())
        throw InvalidArgument("cs_complexity needs at least one cycle");
    for (unsigned x : k)
        if (x < 2)
            throw InvalidArgument("cycle lengths must be at least 2");

    // c_0 = 1 makes c_2 = k2 k1 - 1 fall out of the same recursion
    Integer before = 1;
    Integer current = k[0];
    for (std::size_t i = 1; i < k.size(); ++i) {
        Integer next = Integer(k[i]) * current - before;
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

Integer IntPolynomial::operator()(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string to_string(const IntPolynomial& p, const std::string& var)
{
    std::string out;
    for (std::size_t d = p.coefficients.size(); d-- > 0;) {
        const Integer& c = p.coefficients[d];
        if (sgn(c) == 0)
            continue;
        const Integer mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        if (mag != 1 || d == 0)
            out += mag.get_str();
        if (d >= 1)
            out += var;
        if (d >= 2)
            out += "^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

IntPolynomial cs_equal_k_polynomial(unsigned n)
{
    if (n < 1)
        throw InvalidArgument("polynomial index must be positive");

    // a[m][l]: a^0_l = 1, a^m_l = sum_{j <= l} a^{m-1}_j
    const unsigned half = n / 2;
    std::vector<std::vector<Integer>> a(half + 1, std::vector<Integer>(n + 1, 1));
    for (unsigned m = 1; m <= half; ++m) {
        Integer running = 0;
        for (unsigned l = 0; l <= n; ++l) {
            running += a[m - 1][l];
            a[m][l] = running;
        }
    }

    IntPolynomial p;
    p.coefficients.assign(n + 1, 0);
    for (unsigned i = 0; i <= half; ++i) {
        const Integer& c = a[i][n - 2 * i];
        p.coefficients[n - 2 * i] = i % 2 == 0 ? c : Integer(-c);
    }
    return p;
}

VineParams::VineParams(std::vector<unsigned long> m) : m_(std::move(m))
{
    if (m_.size() < 2)
        throw InvalidArgument("a vine curve needs at least two nodes");
    for (unsigned long x : m_)
        if (x < 1)
            throw InvalidArgument("vine path lengths must be positive");
    std::sort(m_.begin(), m_.end(), std::greater<>());
}

Multigraph vine_graph(const VineParams& p)
{
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    VertexIndex next_vertex = 2;
    for (unsigned long len : p.m()) {
        VertexIndex at = 0;
        for (unsigned long i = 1; i < len; ++i) {
            pairs.emplace_back(at, next_vertex);
            at = next_vertex++;
        }
        pairs.emplace_back(at, 1);
    }
    return Multigraph::from_pairs(next_vertex, pairs);
}

namespace {

Integer product_except(std::span<const unsigned long> m, std::size_t skip)
{
    Integer p = 1;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (i != skip)
            p *= m[i];
    return p;
}

Integer gcd_of(std::span<const unsigned long> m)
{
    Integer g = 0;
    for (unsigned long x : m)
        g = gcd(g, Integer(x));
    return g;
}

} // namespace

Integer vine_complexity(const VineParams& p)
{
    Integer total = 0;
    for (std::size_t k = 0; k < p.size(); ++k)
        total += product_except(p.m(), k);
    return total;
}

Integer vine_generator_order(const VineParams& p, std::size_t k)
{
    if (k >= p.size())
        throw InvalidArgument("generator index out of range");
    Integer lcm_others = 1;
    for (std::size_t j = 0; j < p.size(); ++j)
        if (j != k)
            lcm_others = lcm(lcm_others, Integer(p[j]));
    const Integer numerator = vine_complexity(p) * lcm_others;
    Integer order;
    mpz_divexact(order.get_mpz_t(), numerator.get_mpz_t(), product_except(p.m(), k).get_mpz_t());
    return order;
}

bool vine_cyclic_by_tk(const VineParams& p, std::size_t k)
{
    if (k >= p.size())
        throw InvalidArgument("generator index out of range");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t l = i + 1; l < p.size(); ++l)
            if (i != k && l != k && gcd(Integer(p[i]), Integer(p[l])) != 1)
                return false;
    return true;
}

IntMatrix vine_presentation_matrix(std::span<const unsigned long> m)
{
    if (m.size() < 2)
        throw InvalidArgument("a vine curve needs at least two nodes");
    const std::size_t n = m.size() - 1;
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = Integer(m.back()) + (i == j ? Integer(m[i]) : Integer(0));
    return a;
}

IntMatrix vine_presentation(const VineParams& p) { return vine_presentation_matrix(p.m()); }

IntMatrix vine_relation_matrix(const VineParams& p)
{
    const std::size_t n = p.size();
    IntMatrix r(n, n * (n - 1) / 2 + 1);
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++col) {
            r(i, col) = p[i];
            r(j, col) = -Integer(p[j]);
        }
    for (std::size_t i = 0; i < n; ++i)
        r(i, col) = 1;
    return r;
}

GroupStructure vine_structure(const VineParams& p)
{
    const Integer d = gcd_of(p.m());
    std::vector<unsigned long> reduced(p.m().begin(), p.m().end());
    for (unsigned long& x : reduced)
        x /= d.get_ui();

    const std::vector<Integer> diagonal = smith_normal_form(vine_presentation_matrix(reduced)).diagonal;
    std::vector<Integer> orders;
    std::size_t nontrivial = 0;
    for (const Integer& x : diagonal)
        if (x > 1) {
            orders.push_back(d * x);
            ++nontrivial;
        }
    orders.insert(orders.end(), p.size() - 1 - nontrivial, d);
    return canonical_group(orders);
}

GroupStructure vine_structure_equal_m(unsigned n, unsigned k, unsigned long m)
{
    if (n < 2 || k < 1 || k > n || m < 1)
        throw InvalidArgument("need N >= 2, 1 <= k <= N and m >= 1");
    const Integer mm = m;
    if (k == 1) {
        const Integer order = 1 + mm * (n - 1);
        return canonical_group(std::span(&order, 1));
    }
    std::vector<Integer> orders(k - 2, mm);
    orders.push_back(mm * (k + mm * (n - k)));
    return canonical_group(orders);
}

GroupStructure dollar_structure(const VineParams& p)
{
    if (p.size() != 3)
        throw InvalidArgument("the dollar sign structure needs exactly three nodes");
    const Integer d = gcd_of(p.m());
    const Integer orders[] = {d, vine_complexity(p) / d};
    return canonical_group(orders);
}

} // namespace ndcg
