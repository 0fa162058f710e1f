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

// Command-line front end. Talks to the library only through the C interface.

#include "nodaldcg/nodaldcg.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kParseFailure = 3,
};

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

void check(ndcg_status status)
{
    if (status == NDCG_OK)
        return;
    std::string message = ndcg_last_error();
    switch (status) {
    case NDCG_ERR_PARSE:
        throw CliError(kParseFailure, "parse error: " + message);
    case NDCG_ERR_INTERNAL:
        throw CliError(kVerificationFailed, "internal error: " + message);
    default:
        throw CliError(kInvalidInput, message);
    }
}

struct GraphDeleter {
    void operator()(ndcg_graph* g) const noexcept { ndcg_graph_free(g); }
};
using Graph = std::unique_ptr<ndcg_graph, GraphDeleter>;

// Takes ownership of a library-allocated string.
class LibString {
public:
    LibString() = default;
    LibString(const LibString&) = delete;
    LibString& operator=(const LibString&) = delete;
    ~LibString() { ndcg_string_free(ptr_); }

    char** out() noexcept { return &ptr_; }
    std::string str() const { return ptr_ ? ptr_ : ""; }

private:
    char* ptr_ = nullptr;
};

template <class F>
Graph make_graph(F&& build)
{
    ndcg_graph* raw = nullptr;
    check(build(&raw));
    return Graph(raw);
}

Graph load(const std::string& path)
{
    return make_graph([&](ndcg_graph** out) { return ndcg_graph_read_file(path.c_str(), out); });
}

struct Summary {
    std::string complexity;
    std::string group;
    std::size_t factors = 0;
};

ndcg_method parse_method(const std::string& name)
{
    if (name == "mtt")
        return NDCG_METHOD_MTT;
    if (name == "dc")
        return NDCG_METHOD_DELETION_CONTRACTION;
    return NDCG_METHOD_ENUMERATION;
}

Summary print_report(const ndcg_graph* g, ndcg_method method = NDCG_METHOD_MTT)
{
    if (!ndcg_graph_is_connected(g))
        throw CliError(kInvalidInput, "graph is disconnected; the degree class group needs a connected graph");

    long long betti = 0;
    long long genus = 0;
    check(ndcg_graph_first_betti(g, &betti));
    check(ndcg_graph_arithmetic_genus(g, &genus));

    Summary s;
    LibString complexity;
    LibString group;
    check(ndcg_complexity(g, method, 0, complexity.out()));
    check(ndcg_degree_class_group(g, group.out(), &s.factors));
    s.complexity = complexity.str();
    s.group = group.str();

    std::cout << "vertices " << ndcg_graph_vertex_count(g) << '\n'
              << "edges " << ndcg_graph_edge_count(g) << '\n'
              << "loops " << ndcg_graph_loop_count(g) << '\n'
              << "betti " << betti << '\n'
              << "genus " << genus << '\n'
              << "complexity " << s.complexity << '\n'
              << "group " << s.group << '\n';
    return s;
}

void print_graph(const ndcg_graph* g)
{
    LibString text;
    check(ndcg_graph_format(g, text.out()));
    std::cout << text.str();
}

int verdict(bool agree)
{
    std::cout << "verdict " << (agree ? "AGREE" : "DISAGREE") << '\n';
    return agree ? kSuccess : kVerificationFailed;
}

std::string cyclic_group_of_order(unsigned k) { return k == 1 ? "trivial" : "Z/" + std::to_string(k); }

// ---- commands --------------------------------------------------------------

int cmd_compute(const std::string& path, const std::string& method)
{
    const Graph g = load(path);
    print_report(g.get(), parse_method(method));
    return kSuccess;
}

int cmd_family_cs(const std::vector<unsigned>& k, std::vector<unsigned> h, bool emit)
{
    if (h.empty())
        h.assign(k.size(), 1);
    if (h.size() != k.size())
        throw CliError(kInvalidInput, "--k and --h must have the same length");
    const Graph g = make_graph([&](ndcg_graph** out) { return ndcg_chain_of_cycles(k.data(), h.data(), k.size(), out); });
    if (emit) {
        print_graph(g.get());
        return kSuccess;
    }
    const Summary s = print_report(g.get());
    LibString predicted;
    check(ndcg_cs_complexity(k.data(), k.size(), predicted.out()));
    std::cout << "predicted complexity " << predicted.str() << '\n'
              << "predicted cyclic yes\n"
              << "observed cyclic " << (s.factors <= 1 ? "yes" : "no") << '\n';
    return verdict(predicted.str() == s.complexity && s.factors <= 1);
}

int cmd_family_vine(const std::vector<unsigned long>& m, bool emit)
{
    const Graph g = make_graph([&](ndcg_graph** out) { return ndcg_vine_graph(m.data(), m.size(), out); });
    if (emit) {
        print_graph(g.get());
        return kSuccess;
    }
    const Summary s = print_report(g.get());

    LibString complexity;
    LibString structure;
    check(ndcg_vine_complexity(m.data(), m.size(), complexity.out()));
    check(ndcg_vine_structure(m.data(), m.size(), structure.out()));
    std::cout << "predicted complexity " << complexity.str() << '\n'
              << "predicted group " << structure.str() << '\n';
    bool agree = complexity.str() == s.complexity && structure.str() == s.group;

    if (m.size() == 3) {
        LibString dollar;
        check(ndcg_dollar_structure(m.data(), m.size(), dollar.out()));
        std::cout << "predicted dollar group " << dollar.str() << '\n';
        agree = agree && dollar.str() == s.group;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
        LibString order;
        int cyclic = 0;
        check(ndcg_vine_generator_order(m.data(), m.size(), k, order.out()));
        check(ndcg_vine_cyclic_by_tk(m.data(), m.size(), k, &cyclic));
        std::cout << "generator t" << k + 1 << " order " << order.str() << " generates "
                  << (cyclic ? "yes" : "no") << '\n';
        agree = agree && (cyclic != 0) == (order.str() == s.complexity);
    }
    return verdict(agree);
}

int cmd_family_simple(bool banana, unsigned k, bool emit)
{
    const Graph g = make_graph([&](ndcg_graph** out) { return banana ? ndcg_banana_graph(k, out) : ndcg_cycle_graph(k, out); });
    if (emit) {
        print_graph(g.get());
        return kSuccess;
    }
    const Summary s = print_report(g.get());
    std::cout << "predicted complexity " << k << '\n'
              << "predicted group " << cyclic_group_of_order(k) << '\n';
    return verdict(s.complexity == std::to_string(k) && s.group == cyclic_group_of_order(k));
}

int cmd_blowup(const std::string& path, std::optional<std::uint64_t> edge, unsigned times,
               const std::vector<unsigned>& vector)
{
    const Graph g = load(path);
    std::vector<std::uint64_t> ids;
    std::vector<unsigned> counts;
    if (edge) {
        if (times == 0)
            throw CliError(kInvalidInput, "--times must be positive");
        ids.push_back(*edge);
        counts.push_back(times);
    } else {
        if (vector.size() != ndcg_graph_edge_count(g.get()))
            throw CliError(kInvalidInput, "--vector needs one entry per edge ("
                                              + std::to_string(ndcg_graph_edge_count(g.get())) + ")");
        for (std::size_t i = 0; i < vector.size(); ++i) {
            std::uint64_t id = 0;
            check(ndcg_graph_edge(g.get(), i, &id, nullptr, nullptr));
            ids.push_back(id);
            counts.push_back(vector[i]);
        }
    }

    bool loop_in_support = false;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t p = 0; p < ndcg_graph_edge_count(g.get()); ++p) {
            std::uint64_t id = 0;
            std::size_t u = 0;
            std::size_t v = 0;
            check(ndcg_graph_edge(g.get(), p, &id, &u, &v));
            if (id == ids[i] && u == v && counts[i] > 0)
                loop_in_support = true;
        }
    }

    const Graph blown = make_graph([&](ndcg_graph** out) {
        return ndcg_multi_blow_up(g.get(), ids.data(), counts.data(), ids.size(), out);
    });
    const Summary s = print_report(blown.get());
    if (loop_in_support) {
        std::cout << "formula skipped: the blow-up support contains a loop\n";
        return kSuccess;
    }
    LibString formula;
    check(ndcg_blow_up_formula(g.get(), ids.data(), counts.data(), ids.size(), formula.out()));
    std::cout << "formula " << formula.str() << '\n';
    return verdict(formula.str() == s.complexity);
}

int cmd_catalog_verify(const std::string& corrupt)
{
    LibString report;
    std::size_t failures = 0;
    check(ndcg_catalog_verify(corrupt.empty() ? nullptr : corrupt.c_str(), report.out(), &failures));
    const std::string text = report.str();
    std::cout << text;
    std::size_t entries = 0;
    for (char c : text)
        entries += c == '\n';
    std::cout << "summary " << entries << " entries, " << failures << " failures\n";
    return failures == 0 ? kSuccess : kVerificationFailed;
}

int cmd_oracle(const std::string& path, std::size_t limit)
{
    const Graph g = load(path);
    LibString mtt;
    LibString dc;
    check(ndcg_complexity(g.get(), NDCG_METHOD_MTT, 0, mtt.out()));
    check(ndcg_complexity(g.get(), NDCG_METHOD_DELETION_CONTRACTION, 0, dc.out()));
    std::cout << "mtt " << mtt.str() << '\n' << "deletion-contraction " << dc.str() << '\n';
    bool agree = mtt.str() == dc.str();

    LibString enumerated;
    const ndcg_status status = ndcg_complexity(g.get(), NDCG_METHOD_ENUMERATION, limit, enumerated.out());
    if (status == NDCG_ERR_LIMIT) {
        std::cout << "enumeration skipped (" << ndcg_last_error() << ")\n";
    } else {
        check(status);
        std::cout << "enumeration " << enumerated.str() << '\n';
        agree = agree && enumerated.str() == mtt.str();
    }
    return verdict(agree);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Degree class groups and complexity of nodal curve dual graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ndcg_version()));

    std::string path;
    std::string method = "mtt";
    auto* compute = app.add_subcommand("compute", "Report complexity and degree class group of a graph file");
    compute->add_option("path", path, "Graph file")->required();
    compute->add_option("--method", method, "Complexity engine")
        ->check(CLI::IsMember({"mtt", "dc", "enum"}));

    bool emit = false;
    std::vector<unsigned> k_list;
    std::vector<unsigned> h_list;
    std::vector<unsigned long> m_list;
    unsigned k_single = 0;
    auto* family = app.add_subcommand("family", "Build a graph family and check its closed forms");
    family->require_subcommand(1);
    auto* cs = family->add_subcommand("cs", "Chain of cycles CS^n(k;h)");
    cs->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
    cs->add_option("--k", k_list, "Cycle lengths, comma separated")->required()->delimiter(',');
    cs->add_option("--h", h_list, "Gluing positions, comma separated (default all 1)")->delimiter(',');
    cs->add_flag("--emit", emit, "Write the graph file instead of the report");
    auto* vine = family->add_subcommand("vine", "Blown-up vine curve D_N(m)");
    vine->add_option("--m", m_list, "Path lengths, comma separated")->required()->delimiter(',');
    vine->add_flag("--emit", emit, "Write the graph file instead of the report");
    auto* cycle = family->add_subcommand("cycle", "k-cycle");
    cycle->add_option("--k", k_single, "Cycle length")->required();
    cycle->add_flag("--emit", emit, "Write the graph file instead of the report");
    auto* banana = family->add_subcommand("banana", "Two vertices joined by k edges");
    banana->add_option("--k", k_single, "Number of edges")->required();
    banana->add_flag("--emit", emit, "Write the graph file instead of the report");

    std::optional<std::uint64_t> edge;
    unsigned times = 1;
    std::vector<unsigned> blow_vector;
    auto* blowup = app.add_subcommand("blowup", "Blow up nodes and check the subset-sum formula");
    blowup->add_option("path", path, "Graph file")->required();
    auto* edge_opt = blowup->add_option("--edge", edge, "Edge to blow up (file order, 0-based)");
    blowup->add_option("--times", times, "Number of blow-ups at --edge")->needs(edge_opt);
    auto* vector_opt = blowup->add_option("--vector", blow_vector, "Blow-up count per edge, comma separated")
                           ->delimiter(',');
    edge_opt->excludes(vector_opt);
    vector_opt->excludes(edge_opt);

    std::string corrupt;
    auto* catalog = app.add_subcommand("catalog", "Stable graph tables of genus 2 and 3");
    catalog->require_subcommand(1);
    auto* verify = catalog->add_subcommand("verify", "Recompute every table entry");
    verify->add_option("--corrupt", corrupt, "Perturb one entry's expected complexity (checker self-test)");

    std::size_t limit = 24;
    auto* oracle = app.add_subcommand("oracle", "Cross-check the three complexity engines");
    oracle->add_option("path", path, "Graph file")->required();
    oracle->add_option("--limit", limit, "Edge limit for brute-force enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kInvalidInput;
    }

    try {
        if (*compute)
            return cmd_compute(path, method);
        if (*cs)
            return cmd_family_cs(k_list, h_list, emit);
        if (*vine)
            return cmd_family_vine(m_list, emit);
        if (*cycle)
            return cmd_family_simple(false, k_single, emit);
        if (*banana)
            return cmd_family_simple(true, k_single, emit);
        if (*blowup) {
            if (!edge && blow_vector.empty())
                throw CliError(kInvalidInput, "blowup needs --edge or --vector");
            return cmd_blowup(path, edge, times, blow_vector);
        }
        if (*verify)
            return cmd_catalog_verify(corrupt);
        if (*oracle)
            return cmd_oracle(path, limit);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code();
    }
    return kInvalidInput;
}
