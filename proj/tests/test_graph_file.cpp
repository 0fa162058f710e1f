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

#include "nodaldcg/error.hpp"
#include "nodaldcg/families.hpp"
#include "nodaldcg/graph_file.hpp"

#include <random>

using namespace ndcg;

namespace {

std::size_t error_line(std::string_view text)
{
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("parsing a graph file")
{
    const Multigraph g = parse_graph("# theta with a weighted vertex\n"
                                     "vertices 3\n"
                                     "genus 2 1\n"
                                     "\n"
                                     "edge 0 1   # first\n"
                                     "edge 0 1\n"
                                     "edge 1 0\n"
                                     "edge 2 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 4);
    CHECK(g.genus(2) == 1);
    CHECK(g.loop_count() == 1);
    CHECK(g.edge(EdgeId{2}).u == 1);
}

TEST_CASE("parse errors carry the line number")
{
    CHECK(error_line("vertices 2\nedge 0 2\n") == 2);
    CHECK(error_line("vertices 2\nedge 0\n") == 2);
    CHECK(error_line("vertices 2\nfoo 1\n") == 2);
    CHECK(error_line("edge 0 1\nvertices 2\n") == 1);
    CHECK(error_line("vertices 2\nvertices 2\n") == 2);
    CHECK(error_line("vertices 2\ngenus 0 1\ngenus 0 2\n") == 3);
    CHECK(error_line("vertices 2\ngenus 3 1\n") == 2);
    CHECK(error_line("vertices x\n") == 1);
    CHECK(error_line("vertices 0\n") == 1);
    CHECK(error_line("vertices 2\nedge 0 -1\n") == 2);
    CHECK(error_line("# nothing\n") == 2);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), InvalidArgument);
}

TEST_CASE("format and parse round trip")
{
    std::mt19937_64 rng(0xf11e);
    std::vector<Multigraph> graphs = {cycle_graph(1), banana_graph(4), chain_of_cycles({{3, 4, 5}, {2, 2, 2}})};
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 1 + rng() % 6;
        Multigraph g = oracle::random_connected(rng, n, n - 1 + rng() % 4, rng() % 3);
        std::vector<unsigned> genus(n);
        for (auto& x : genus)
            x = static_cast<unsigned>(rng() % 3);
        graphs.push_back(Multigraph(n, {g.edges().begin(), g.edges().end()}, genus));
    }
    for (const Multigraph& g : graphs) {
        const Multigraph back = parse_graph(format_graph(g));
        CHECK(back.same_structure(g));
        CHECK(format_graph(back) == format_graph(g));
    }
}
