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

#pragma once

#include "nodaldcg/int_matrix.hpp"
#include "nodaldcg/multigraph.hpp"

#include <string>
#include <vector>

namespace ndcg {

/// One row of the stable-graph tables: the dual graph and the tabulated values.
struct CatalogEntry {
    std::string label;
    Multigraph graph;
    unsigned genus;
    std::size_t nodes;
    std::size_t components;
    Integer expected_complexity;
    GroupStructure expected_group;
};

/// The seven stable graphs of genus 2, ordered by number of nodes.
std::vector<CatalogEntry> genus2_table();

/// The genus-3 rows, in table order.
std::vector<CatalogEntry> genus3_table();

/// Genus >= 2 required. Every genus-0 vertex needs half-edge degree >= 3 (a loop counts twice).
bool is_stable(const Multigraph& g);

struct CatalogCheck {
    std::string label;
    bool pass = false;
    std::string expected;
    std::string got;
};

struct CatalogReport {
    std::vector<CatalogCheck> checks;

    bool all_pass() const noexcept;
    std::size_t failures() const noexcept;
    /// One "label status expected got" line per entry; fields contain no spaces.
    std::string to_text() const;
};

/// Recomputes nodes, components, genus, stability, complexity and group for each entry.
CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries);

/// Both tables.
CatalogReport verify_catalog();

} // namespace ndcg
