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

#include "nodaldcg/nodaldcg.h"

#include "nodaldcg/catalog.hpp"
#include "nodaldcg/curve_ops.hpp"
#include "nodaldcg/dcg.hpp"
#include "nodaldcg/error.hpp"
#include "nodaldcg/families.hpp"
#include "nodaldcg/graph_file.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

struct ndcg_graph {
    ndcg::Multigraph graph;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0;

ndcg_status fail(ndcg_status status, const char* what, std::size_t line = 0)
{
    last_error = what;
    last_error_line = line;
    return status;
}

template <class F>
ndcg_status guarded(F&& body)
{
    try {
        last_error.clear();
        last_error_line = 0;
        body();
        return NDCG_OK;
    } catch (const ndcg::ParseError& e) {
        return fail(NDCG_ERR_PARSE, e.what(), e.line());
    } catch (const ndcg::DisconnectedGraph& e) {
        return fail(NDCG_ERR_DISCONNECTED, e.what());
    } catch (const ndcg::LimitExceeded& e) {
        return fail(NDCG_ERR_LIMIT, e.what());
    } catch (const ndcg::InfiniteOrder& e) {
        return fail(NDCG_ERR_INFINITE_ORDER, e.what());
    } catch (const ndcg::InvalidArgument& e) {
        return fail(NDCG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(NDCG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(NDCG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(NDCG_ERR_INTERNAL, "unknown error");
    }
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw ndcg::InvalidArgument(what);
}

char* duplicate(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(ndcg::Multigraph g, ndcg_graph** out)
{
    *out = new ndcg_graph{std::move(g)};
}

ndcg::BlowUpVector blow_up_vector(const uint64_t* ids, const unsigned* times, size_t count)
{
    require(count == 0 || (ids != nullptr && times != nullptr), "null blow-up vector");
    ndcg::BlowUpVector k;
    for (size_t i = 0; i < count; ++i)
        k[ndcg::EdgeId{ids[i]}] += times[i];
    return k;
}

ndcg::VineParams vine_params(const unsigned long* m, size_t n)
{
    require(m != nullptr || n == 0, "null vine vector");
    return ndcg::VineParams(std::vector<unsigned long>(m, m + n));
}

} // namespace

extern "C" {

const char* ndcg_version(void) { return NODALDCG_VERSION; }

const char* ndcg_status_name(ndcg_status status)
{
    switch (status) {
    case NDCG_OK: return "ok";
    case NDCG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NDCG_ERR_DISCONNECTED: return "disconnected graph";
    case NDCG_ERR_PARSE: return "parse error";
    case NDCG_ERR_LIMIT: return "limit exceeded";
    case NDCG_ERR_INFINITE_ORDER: return "infinite order";
    case NDCG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ndcg_last_error(void) { return last_error.c_str(); }

size_t ndcg_last_error_line(void) { return last_error_line; }

void ndcg_string_free(char* s) { std::free(s); }

ndcg_status ndcg_graph_parse(const char* text, ndcg_graph** out)
{
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        emit(ndcg::parse_graph(std::string_view(text)), out);
    });
}

ndcg_status ndcg_graph_read_file(const char* path, ndcg_graph** out)
{
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        emit(ndcg::read_graph_file(path), out);
    });
}

ndcg_status ndcg_graph_from_edges(size_t vertex_count, const size_t* endpoints, size_t edge_count,
                                  const unsigned* genus, ndcg_graph** out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        require(edge_count == 0 || endpoints != nullptr, "null endpoint array");
        std::vector<std::pair<ndcg::VertexIndex, ndcg::VertexIndex>> pairs;
        for (size_t i = 0; i < edge_count; ++i)
            pairs.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        std::vector<unsigned> weights;
        if (genus != nullptr)
            weights.assign(genus, genus + vertex_count);
        emit(ndcg::Multigraph::from_pairs(vertex_count, pairs, std::move(weights)), out);
    });
}

void ndcg_graph_free(ndcg_graph* g) { delete g; }

ndcg_status ndcg_graph_format(const ndcg_graph* g, char** out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = duplicate(ndcg::format_graph(g->graph));
    });
}

size_t ndcg_graph_vertex_count(const ndcg_graph* g) { return g ? g->graph.vertex_count() : 0; }
size_t ndcg_graph_edge_count(const ndcg_graph* g) { return g ? g->graph.edge_count() : 0; }
size_t ndcg_graph_loop_count(const ndcg_graph* g) { return g ? g->graph.loop_count() : 0; }

ndcg_status ndcg_graph_edge(const ndcg_graph* g, size_t position, uint64_t* id, size_t* u, size_t* v)
{
    return guarded([&] {
        require(g != nullptr, "null graph");
        require(position < g->graph.edge_count(), "edge position out of range");
        const ndcg::Edge& e = g->graph.edges()[position];
        if (id)
            *id = ndcg::raw(e.id);
        if (u)
            *u = e.u;
        if (v)
            *v = e.v;
    });
}

unsigned ndcg_graph_genus(const ndcg_graph* g, size_t vertex)
{
    return g && vertex < g->graph.vertex_count() ? g->graph.genus(vertex) : 0;
}

int ndcg_graph_is_connected(const ndcg_graph* g) { return g && ndcg::is_connected(g->graph) ? 1 : 0; }

ndcg_status ndcg_graph_first_betti(const ndcg_graph* g, long long* out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = ndcg::first_betti(g->graph);
    });
}

ndcg_status ndcg_graph_arithmetic_genus(const ndcg_graph* g, long long* out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = ndcg::arithmetic_genus(g->graph);
    });
}

ndcg_status ndcg_graph_is_stable(const ndcg_graph* g, int* out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = ndcg::is_stable(g->graph) ? 1 : 0;
    });
}

ndcg_status ndcg_loopless_reduction(const ndcg_graph* g, ndcg_graph** out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        emit(ndcg::loopless_reduction(g->graph), out);
    });
}

ndcg_status ndcg_normalise(const ndcg_graph* g, uint64_t edge, ndcg_graph** out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        emit(ndcg::normalise(g->graph, ndcg::EdgeId{edge}), out);
    });
}

ndcg_status ndcg_smooth(const ndcg_graph* g, uint64_t edge, ndcg_graph** out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        emit(ndcg::smooth(g->graph, ndcg::EdgeId{edge}), out);
    });
}

ndcg_status ndcg_wedge_sum(const ndcg_graph* g1, const ndcg_graph* g2, size_t v1, size_t v2,
                           ndcg_graph** out)
{
    return guarded([&] {
        require(g1 != nullptr && g2 != nullptr && out != nullptr, "null argument");
        emit(ndcg::wedge_sum(g1->graph, g2->graph, v1, v2), out);
    });
}

ndcg_status ndcg_blow_up(const ndcg_graph* g, uint64_t edge, unsigned times, ndcg_graph** out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        require(times >= 1, "blow-up count must be positive");
        emit(ndcg::blow_up(g->graph, ndcg::EdgeId{edge}, times), out);
    });
}

ndcg_status ndcg_multi_blow_up(const ndcg_graph* g, const uint64_t* ids, const unsigned* times,
                               size_t count, ndcg_graph** out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        emit(ndcg::multi_blow_up(g->graph, blow_up_vector(ids, times, count)), out);
    });
}

ndcg_status ndcg_blow_up_formula(const ndcg_graph* g, const uint64_t* ids, const unsigned* times,
                                 size_t count, char** out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = duplicate(
            ndcg::blow_up_complexity_formula(g->graph, blow_up_vector(ids, times, count)).get_str());
    });
}

ndcg_status ndcg_complexity(const ndcg_graph* g, ndcg_method method, size_t enumeration_limit, char** out)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        ndcg::Integer c;
        switch (method) {
        case NDCG_METHOD_MTT:
            c = ndcg::complexity_mtt(g->graph);
            break;
        case NDCG_METHOD_DELETION_CONTRACTION:
            c = ndcg::complexity_deletion_contraction(g->graph);
            break;
        case NDCG_METHOD_ENUMERATION:
            c = ndcg::complexity_enumeration(
                g->graph, enumeration_limit == 0 ? ndcg::default_enumeration_limit : enumeration_limit);
            break;
        default:
            throw ndcg::InvalidArgument("unknown complexity method");
        }
        *out = duplicate(c.get_str());
    });
}

ndcg_status ndcg_degree_class_group(const ndcg_graph* g, char** out, size_t* factor_count)
{
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        const ndcg::GroupStructure group = ndcg::degree_class_group(g->graph);
        *out = duplicate(ndcg::to_string(group));
        if (factor_count)
            *factor_count = group.invariant_factors.size();
    });
}

ndcg_status ndcg_banana_graph(unsigned k, ndcg_graph** out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        emit(ndcg::banana_graph(k), out);
    });
}

ndcg_status ndcg_cycle_graph(unsigned k, ndcg_graph** out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        emit(ndcg::cycle_graph(k), out);
    });
}

ndcg_status ndcg_chain_of_cycles(const unsigned* k, const unsigned* h, size_t n, ndcg_graph** out)
{
    return guarded([&] {
        require(out != nullptr && ((k != nullptr && h != nullptr) || n == 0), "null argument");
        emit(ndcg::chain_of_cycles({std::vector<unsigned>(k, k + n), std::vector<unsigned>(h, h + n)}),
             out);
    });
}

ndcg_status ndcg_cs_complexity(const unsigned* k, size_t n, char** out)
{
    return guarded([&] {
        require(out != nullptr && (k != nullptr || n == 0), "null argument");
        *out = duplicate(ndcg::cs_complexity(std::span(k, n)).get_str());
    });
}

ndcg_status ndcg_cs_polynomial(unsigned n, char** out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = duplicate(ndcg::to_string(ndcg::cs_equal_k_polynomial(n)));
    });
}

ndcg_status ndcg_vine_graph(const unsigned long* m, size_t n, ndcg_graph** out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        emit(ndcg::vine_graph(vine_params(m, n)), out);
    });
}

ndcg_status ndcg_vine_complexity(const unsigned long* m, size_t n, char** out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = duplicate(ndcg::vine_complexity(vine_params(m, n)).get_str());
    });
}

ndcg_status ndcg_vine_structure(const unsigned long* m, size_t n, char** out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = duplicate(ndcg::to_string(ndcg::vine_structure(vine_params(m, n))));
    });
}

ndcg_status ndcg_dollar_structure(const unsigned long* m, size_t n, char** out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = duplicate(ndcg::to_string(ndcg::dollar_structure(vine_params(m, n))));
    });
}

ndcg_status ndcg_vine_generator_order(const unsigned long* m, size_t n, size_t k, char** out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = duplicate(ndcg::vine_generator_order(vine_params(m, n), k).get_str());
    });
}

ndcg_status ndcg_vine_cyclic_by_tk(const unsigned long* m, size_t n, size_t k, int* out)
{
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = ndcg::vine_cyclic_by_tk(vine_params(m, n), k) ? 1 : 0;
    });
}

ndcg_status ndcg_catalog_verify(const char* corrupt_label, char** report, size_t* failures)
{
    return guarded([&] {
        require(report != nullptr, "null output");
        std::vector<ndcg::CatalogEntry> entries = ndcg::genus2_table();
        for (ndcg::CatalogEntry& e : ndcg::genus3_table())
            entries.push_back(std::move(e));
        if (corrupt_label != nullptr) {
            bool found = false;
            for (ndcg::CatalogEntry& e : entries)
                if (e.label == corrupt_label) {
                    e.expected_complexity += 1;
                    found = true;
                }
            require(found, "no catalog entry with that label");
        }
        const ndcg::CatalogReport r = ndcg::verify_catalog(entries);
        *report = duplicate(r.to_text());
        if (failures)
            *failures = r.failures();
    });
}

} // extern "C"
