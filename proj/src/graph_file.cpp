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

#include "nodaldcg/graph_file.hpp"

#include "nodaldcg/error.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace ndcg {

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            words.push_back(line.substr(start, i - start));
    }
    return words;
}

std::size_t parse_index(std::string_view word, std::size_t line)
{
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
    return value;
}

} // namespace

Multigraph parse_graph(std::istream& in)
{
    std::optional<std::size_t> vertices;
    std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
    std::vector<unsigned> genus;
    std::vector<bool> genus_seen;

    std::string raw_line;
    std::size_t line = 0;
    while (std::getline(in, raw_line)) {
        ++line;
        std::string_view text = raw_line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos)
            text = text.substr(0, hash);
        const auto words = split_words(text);
        if (words.empty())
            continue;

        const std::string_view directive = words[0];
        if (directive == "vertices") {
            if (words.size() != 2)
                throw ParseError(line, "usage: vertices <count>");
            if (vertices)
                throw ParseError(line, "duplicate 'vertices' directive");
            vertices = parse_index(words[1], line);
            if (*vertices == 0)
                throw ParseError(line, "a graph needs at least one vertex");
            genus.assign(*vertices, 0);
            genus_seen.assign(*vertices, false);
        } else if (directive == "edge" || directive == "genus") {
            if (!vertices)
                throw ParseError(line, "'" + std::string(directive) + "' before 'vertices'");
            if (words.size() != 3)
                throw ParseError(line, "usage: " + std::string(directive)
                                           + (directive == "edge" ? " <u> <v>" : " <vertex> <genus>"));
            const std::size_t a = parse_index(words[1], line);
            const std::size_t b = parse_index(words[2], line);
            if (a >= *vertices)
                throw ParseError(line, "vertex " + std::to_string(a) + " out of range");
            if (directive == "edge") {
                if (b >= *vertices)
                    throw ParseError(line, "vertex " + std::to_string(b) + " out of range");
                pairs.emplace_back(a, b);
            } else {
                if (genus_seen[a])
                    throw ParseError(line, "genus of vertex " + std::to_string(a) + " given twice");
                if (b > 1'000'000)
                    throw ParseError(line, "genus too large");
                genus_seen[a] = true;
                genus[a] = static_cast<unsigned>(b);
            }
        } else {
            throw ParseError(line, "unknown directive '" + std::string(directive) + "'");
        }
    }
    if (!vertices)
        throw ParseError(line + 1, "missing 'vertices' directive");
    return Multigraph::from_pairs(*vertices, pairs, std::move(genus));
}

Multigraph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

Multigraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    return parse_graph(in);
}

std::string format_graph(const Multigraph& g)
{
    std::ostringstream os;
    os << "vertices " << g.vertex_count() << '\n';
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (g.genus(v) != 0)
            os << "genus " << v << ' ' << g.genus(v) << '\n';
    for (const Edge& e : g.edges())
        os << "edge " << e.u << ' ' << e.v << '\n';
    return os.str();
}

} // namespace ndcg
