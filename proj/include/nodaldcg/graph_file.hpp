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

#include "nodaldcg/multigraph.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace ndcg {

/**
 * Plain-text graph file:
 *
 *     # comment
 *     vertices 3
 *     genus 1 2
 *     edge 0 1
 *     edge 2 2
 *
 * `vertices` comes exactly once, before any `genus` or `edge` line. Indices
 * are 0-based; `edge u u` is a loop. Edge ids follow file order. Errors are
 * reported as ParseError with the 1-based line number.
 */
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::string& path);

/// Inverse of parse_graph up to edge ids; zero genus weights are omitted.
std::string format_graph(const Multigraph& g);

} // namespace ndcg
