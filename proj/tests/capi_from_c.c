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

/* The public header must compile as C. */
#include "nodaldcg/nodaldcg.h"

#include <stdio.h>

int main(void)
{
    ndcg_graph* g = NULL;
    char* group = NULL;
    int ok = ndcg_cycle_graph(5, &g) == NDCG_OK && ndcg_degree_class_group(g, &group, NULL) == NDCG_OK;
    if (ok)
        printf("%s %s\n", ndcg_version(), group);
    ndcg_string_free(group);
    ndcg_graph_free(g);
    return ok ? 0 : 1;
}
