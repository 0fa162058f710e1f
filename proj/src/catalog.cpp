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

#include "nodaldcg/catalog.hpp"

#include "nodaldcg/dcg.hpp"
#include "nodaldcg/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ndcg {

namespace {

using Pairs = std::initializer_list<std::pair<VertexIndex, VertexIndex>>;

CatalogEntry entry(std::string label, std::size_t vertices, std::vector<unsigned> weights, Pairs edges,
                   unsigned genus, std::size_t nodes, long complexity,
                   std::initializer_list<long> factors = {})
{
    std::vector<Integer> f(factors.begin(), factors.end());
    return CatalogEntry{std::move(label),
                        Multigraph::from_pairs(vertices, edges, std::move(weights)),
                        genus,
                        nodes,
                        vertices,
                        complexity,
                        GroupStructure{std::move(f), 0}};
}

std::string summary(std::size_t nodes, std::size_t components, long long genus, bool stable,
                    const Integer& complexity, const GroupStructure& group)
{
    std::string g = to_string(group);
    g.erase(std::remove(g.begin(), g.end(), ' '), g.end());
    std::ostringstream os;
    os << "nodes=" << nodes << ",components=" << components << ",genus=" << genus
       << ",stable=" << (stable ? "yes" : "no") << ",complexity=" << complexity.get_str()
       << ",group=" << g;
    return os.str();
}

} // namespace

// Vertex order inside each entry follows the diagram left to right, top to bottom.
std::vector<CatalogEntry> genus2_table()
{
    return {
        entry("g2-01", 1, {2}, {}, 2, 0, 1),
        entry("g2-02", 1, {1}, {{0, 0}}, 2, 1, 1),
        entry("g2-03", 2, {1, 1}, {{0, 1}}, 2, 1, 1),
        entry("g2-04", 1, {0}, {{0, 0}, {0, 0}}, 2, 2, 1),
        entry("g2-05", 2, {0, 1}, {{0, 0}, {0, 1}}, 2, 2, 1),
        entry("g2-06", 2, {0, 0}, {{0, 0}, {0, 1}, {1, 1}}, 2, 3, 1),
        entry("g2-07", 2, {0, 0}, {{0, 1}, {0, 1}, {0, 1}}, 2, 3, 3, {3}),
    };
}

std::vector<CatalogEntry> genus3_table()
{
    return {
        entry("g3-01", 1, {3}, {}, 3, 0, 1),
        entry("g3-02", 1, {2}, {{0, 0}}, 3, 1, 1),
        entry("g3-03", 2, {2, 1}, {{0, 1}}, 3, 1, 1),
        entry("g3-04", 1, {1}, {{0, 0}, {0, 0}}, 3, 2, 1),
        entry("g3-05", 2, {1, 1}, {{0, 0}, {0, 1}}, 3, 2, 1),
        entry("g3-06", 2, {0, 2}, {{0, 0}, {0, 1}}, 3, 2, 1),
        entry("g3-07", 2, {1, 1}, {{0, 1}, {0, 1}}, 3, 2, 2, {2}),
        entry("g3-08", 3, {1, 1, 1}, {{0, 1}, {1, 2}}, 3, 2, 1),
        entry("g3-09", 1, {0}, {{0, 0}, {0, 0}, {0, 0}}, 3, 3, 1),
        entry("g3-10", 2, {0, 1}, {{0, 0}, {0, 0}, {0, 1}}, 3, 3, 1),
        entry("g3-11", 2, {1, 0}, {{0, 0}, {0, 1}, {1, 1}}, 3, 3, 1),
        entry("g3-12", 2, {0, 1}, {{0, 0}, {0, 1}, {0, 1}}, 3, 3, 2, {2}),
        entry("g3-13", 2, {0, 1}, {{0, 1}, {0, 1}, {0, 1}}, 3, 3, 3, {3}),
        entry("g3-14", 3, {0, 1, 1}, {{0, 0}, {0, 1}, {1, 2}}, 3, 3, 1),
        entry("g3-15", 3, {1, 0, 1}, {{0, 1}, {1, 1}, {1, 2}}, 3, 3, 1),
        entry("g3-16", 3, {1, 0, 1}, {{0, 1}, {1, 2}, {1, 2}}, 3, 3, 2, {2}),
        entry("g3-17", 2, {0, 0}, {{0, 0}, {0, 0}, {0, 1}, {1, 1}}, 3, 4, 1),
        entry("g3-18", 2, {0, 0}, {{0, 0}, {0, 1}, {0, 1}, {1, 1}}, 3, 4, 2, {2}),
        entry("g3-19", 2, {0, 0}, {{0, 0}, {0, 1}, {0, 1}, {0, 1}}, 3, 4, 3, {3}),
        entry("g3-20", 2, {0, 0}, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}, 3, 4, 4, {4}),
        entry("g3-21", 3, {0, 1, 0}, {{0, 0}, {0, 1}, {1, 2}, {2, 2}}, 3, 4, 1),
        entry("g3-22", 3, {0, 0, 1}, {{0, 0}, {0, 1}, {1, 1}, {1, 2}}, 3, 4, 1),
        entry("g3-23", 3, {0, 0, 1}, {{0, 0}, {0, 1}, {1, 2}, {1, 2}}, 3, 4, 2, {2}),
        entry("g3-24", 3, {1, 0, 0}, {{0, 1}, {0, 2}, {1, 2}, {1, 2}}, 3, 4, 5, {5}),
        entry("g3-25", 3, {1, 0, 0}, {{0, 1}, {1, 2}, {1, 2}, {1, 2}}, 3, 4, 3, {3}),
        entry("g3-26", 4, {1, 1, 0, 0}, {{0, 2}, {1, 2}, {2, 3}, {3, 3}}, 3, 4, 1),
        entry("g3-27", 3, {0, 0, 0}, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}, 3, 5, 1),
        entry("g3-28", 3, {0, 0, 0}, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 2}}, 3, 5, 2, {2}),
        entry("g3-29", 3, {0, 0, 0}, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {1, 2}}, 3, 5, 3, {3}),
        entry("g3-30", 3, {0, 0, 0}, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}}, 3, 5, 8, {8}),
        entry("g3-31", 3, {0, 0, 0}, {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 2}}, 3, 5, 5, {5}),
        entry("g3-32", 4, {1, 0, 0, 0}, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 3}}, 3, 5, 5, {5}),
        entry("g3-33", 4, {0, 0, 0, 1}, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 3}}, 3, 5, 2, {2}),
        entry("g3-34", 4, {1, 0, 0, 0}, {{0, 3}, {3, 2}, {3, 1}, {1, 1}, {2, 2}}, 3, 5, 1),
        entry("g3-35", 4, {0, 0, 0, 0}, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 3}}, 3, 6, 2, {2}),
        entry("g3-36", 4, {0, 0, 0, 0}, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 3}}, 3, 6, 5, {5}),
        entry("g3-37", 4, {0, 0, 0, 0}, {{0, 0}, {1, 1}, {2, 2}, {0, 3}, {3, 1}, {3, 2}}, 3, 6, 1),
        entry("g3-38", 4, {0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 2}, {1, 3}, {1, 3}, {2, 3}}, 3, 6, 12, {2, 6}),
        entry("g3-39", 4, {0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 3, 6, 16, {4, 4}),
    };
}

bool is_stable(const Multigraph& g)
{
    if (arithmetic_genus(g) < 2)
        throw InvalidArgument("stability is defined for arithmetic genus >= 2");
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (g.genus(v) == 0 && g.degree(v) < 3)
            return false;
    return true;
}

bool CatalogReport::all_pass() const noexcept { return failures() == 0; }

std::size_t CatalogReport::failures() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CatalogCheck& c) { return !c.pass; }));
}

std::string CatalogReport::to_text() const
{
    std::string out;
    for (const CatalogCheck& c : checks)
        out += c.label + (c.pass ? " PASS " : " FAIL ") + c.expected + " " + c.got + "\n";
    return out;
}

CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries)
{
    CatalogReport report;
    for (const CatalogEntry& e : entries) {
        CatalogCheck check;
        check.label = e.label;
        check.expected = summary(e.nodes, e.components, e.genus, true, e.expected_complexity,
                                 e.expected_group);
        try {
            const Multigraph& g = e.graph;
            const long long genus = arithmetic_genus(g);
            const bool stable = genus >= 2 && is_stable(g);
            const DcgReport dcg = dcg_report(g);
            check.got = summary(g.edge_count(), g.vertex_count(), genus, stable, dcg.complexity, dcg.group);
        } catch (const Error& err) {
            check.got = std::string("error:") + err.what();
            std::replace(check.got.begin(), check.got.end(), ' ', '_');
        }
        check.pass = check.got == check.expected;
        report.checks.push_back(std::move(check));
    }
    return report;
}

CatalogReport verify_catalog()
{
    std::vector<CatalogEntry> all = genus2_table();
    std::vector<CatalogEntry> g3 = genus3_table();
    all.insert(all.end(), std::make_move_iterator(g3.begin()), std::make_move_iterator(g3.end()));
    return verify_catalog(all);
}

} // namespace ndcg
