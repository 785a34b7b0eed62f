/*
 * Copyright 2026 The lightsout Authors
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

#include "lightsout/digraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "lightsout/errors.hpp"

namespace lightsout {

namespace {

std::string arc_text(const Arc& a)
{
    return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

} // namespace

Digraph::Digraph(std::size_t n, std::vector<Arc> sorted_arcs)
    : n_(n), arcs_(std::move(sorted_arcs)), out_(n), in_(n), adj_(n * n, 0)
{
    for (const Arc& a : arcs_) {
        out_[a.tail].push_back(a.head);
        in_[a.head].push_back(a.tail);
        adj_[a.tail * n_ + a.head] = 1;
    }
    for (auto& list : in_) std::sort(list.begin(), list.end());
}

Digraph
Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs)
{
    if (n == 0) throw InputError("digraph needs at least one vertex");
    std::vector<Arc> sorted(arcs.begin(), arcs.end());
    for (const Arc& a : sorted) {
        if (a.tail >= n || a.head >= n) {
            throw InputError("arc " + arc_text(a) + " has an endpoint outside [0, " +
                             std::to_string(n) + ")");
        }
        if (a.tail == a.head) throw InputError("self-loop " + arc_text(a));
    }
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw InputError("duplicate arc " + arc_text(*dup));
    return Digraph(n, std::move(sorted));
}

bool
Digraph::has_arc(VertexId tail, VertexId head) const
{
    if (tail >= n_ || head >= n_) return false;
    return adj_[tail * n_ + head] != 0;
}

VertexOrdering::VertexOrdering(std::vector<VertexId> perm) : perm_(std::move(perm))
{
    const std::size_t n = perm_.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    pos_.assign(n, unset);
    for (std::size_t p = 0; p < n; ++p) {
        const VertexId v = perm_[p];
        if (v >= n || pos_[v] != unset) {
            throw InputError("ordering is not a permutation of [0, " + std::to_string(n) + ")");
        }
        pos_[v] = p;
    }
}

VertexOrdering
VertexOrdering::identity(std::size_t n)
{
    std::vector<VertexId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    return VertexOrdering(std::move(perm));
}

bool
is_tournament(const Digraph& d)
{
    const std::size_t n = d.order();
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
        }
    }
    return true;
}

SccDecomposition
strong_components(const Digraph& d)
{
    const std::size_t n = d.order();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);

    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> emitted;
    std::size_t counter = 0;

    // Explicit DFS frames: vertex plus position in its out-list.
    struct Frame {
        VertexId v;
        std::size_t next;
    };
    std::vector<Frame> frames;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!frames.empty()) {
            Frame& f = frames.back();
            auto outs = d.out_neighbors(f.v);
            if (f.next < outs.size()) {
                const VertexId w = outs[f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }

            const VertexId v = f.v;
            frames.pop_back();
            if (!frames.empty()) {
                const VertexId parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<VertexId> comp;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                emitted.push_back(std::move(comp));
            }
        }
    }

    // Tarjan completes sink components first.
    SccDecomposition out;
    out.components.assign(std::make_move_iterator(emitted.rbegin()),
                          std::make_move_iterator(emitted.rend()));
    out.component_of.assign(n, 0);
    for (std::size_t c = 0; c < out.components.size(); ++c) {
        for (VertexId v : out.components[c]) out.component_of[v] = c;
    }
    return out;
}

bool
is_strongly_connected(const Digraph& d)
{
    return strong_components(d).components.size() <= 1;
}

std::optional<VertexOrdering>
acyclic_ordering(const Digraph& d)
{
    const std::size_t n = d.order();
    std::vector<std::size_t> indegree(n);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> sources;
    for (VertexId v = 0; v < n; ++v) {
        indegree[v] = d.in_neighbors(v).size();
        if (indegree[v] == 0) sources.push(v);
    }

    std::vector<VertexId> perm;
    perm.reserve(n);
    while (!sources.empty()) {
        const VertexId v = sources.top();
        sources.pop();
        perm.push_back(v);
        for (VertexId w : d.out_neighbors(v)) {
            if (--indegree[w] == 0) sources.push(w);
        }
    }
    if (perm.size() != n) return std::nullopt;
    return VertexOrdering(std::move(perm));
}

bool
is_acyclic(const Digraph& d)
{
    return acyclic_ordering(d).has_value();
}

Subgraph
arc_induced_subgraph(const Digraph& d, std::span<const Arc> arcs)
{
    Subgraph out;
    if (arcs.empty()) return out;

    constexpr std::size_t absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> local(d.order(), absent);
    auto map_vertex = [&](VertexId v) {
        if (local[v] == absent) {
            local[v] = out.original.size();
            out.original.push_back(v);
        }
        return local[v];
    };

    std::vector<Arc> mapped;
    mapped.reserve(arcs.size());
    for (const Arc& a : arcs) {
        if (!d.has_arc(a.tail, a.head)) {
            throw InputError("arc " + arc_text(a) + " is not in the digraph");
        }
        const std::size_t t = map_vertex(a.tail);
        const std::size_t h = map_vertex(a.head);
        mapped.push_back({t, h});
    }
    out.graph = Digraph::from_arcs(out.original.size(), mapped);
    return out;
}

Subgraph
induced_subgraph(const Digraph& d, std::span<const VertexId> vertices)
{
    Subgraph out;
    if (vertices.empty()) return out;

    constexpr std::size_t absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> local(d.order(), absent);
    for (VertexId v : vertices) {
        if (v >= d.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
        if (local[v] != absent) throw InputError("vertex " + std::to_string(v) + " listed twice");
        local[v] = out.original.size();
        out.original.push_back(v);
    }

    std::vector<Arc> arcs;
    for (VertexId v : vertices) {
        for (VertexId w : d.out_neighbors(v)) {
            if (local[w] != absent) arcs.push_back({local[v], local[w]});
        }
    }
    out.graph = Digraph::from_arcs(out.original.size(), arcs);
    return out;
}

} // namespace lightsout
