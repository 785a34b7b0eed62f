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

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lightsout {

using VertexId = std::size_t;

/// Directed arc tail -> head. Ordered lexicographically (tail, then head).
struct Arc {
    VertexId tail = 0;
    VertexId head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/**
 * Simple digraph on vertices 0..n-1: no self-loops, no parallel arcs.
 *
 * Arcs are kept sorted, so two digraphs compare equal exactly when they
 * have the same order and arc set. The zero-vertex digraph is only produced
 * by default construction and by arc-induced subgraphs of the empty arc set.
 */
class Digraph {
  public:
    Digraph() = default;

    /// Validating constructor. Throws InputError on n == 0, a self-loop, a
    /// duplicate arc, or an endpoint outside [0, n).
    static Digraph from_arcs(std::size_t n, std::span<const Arc> arcs);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool has_arc(VertexId tail, VertexId head) const;

    /// Vertices dominated by v, ascending.
    std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
    /// Vertices dominating v, ascending.
    std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }

    friend bool operator==(const Digraph& a, const Digraph& b)
    {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

  private:
    Digraph(std::size_t n, std::vector<Arc> sorted_arcs);

    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::vector<char> adj_;  // row-major n x n
};

/// A permutation of [0, n): perm()[p] is the vertex at position p.
class VertexOrdering {
  public:
    VertexOrdering() = default;
    /// Throws InputError unless perm is a bijection on [0, perm.size()).
    explicit VertexOrdering(std::vector<VertexId> perm);

    static VertexOrdering identity(std::size_t n);

    std::size_t size() const noexcept { return perm_.size(); }
    const std::vector<VertexId>& perm() const noexcept { return perm_; }
    VertexId at(std::size_t position) const { return perm_[position]; }
    std::size_t position(VertexId v) const { return pos_[v]; }

    friend bool operator==(const VertexOrdering& a, const VertexOrdering& b)
    {
        return a.perm_ == b.perm_;
    }
    friend auto operator<=>(const VertexOrdering& a, const VertexOrdering& b)
    {
        return a.perm_ <=> b.perm_;
    }

  private:
    std::vector<VertexId> perm_;
    std::vector<std::size_t> pos_;
};

/// Strong components listed in an acyclic order: every arc between two
/// different components runs from the earlier one to the later one.
/// Vertices inside each component are ascending.
struct SccDecomposition {
    std::vector<std::vector<VertexId>> components;
    std::vector<std::size_t> component_of;  // vertex -> index into components
};

/// Subgraph together with the original id of each of its vertices.
struct Subgraph {
    Digraph graph;
    std::vector<VertexId> original;  // local id -> id in the parent digraph
};

bool is_tournament(const Digraph& d);
bool is_strongly_connected(const Digraph& d);
bool is_acyclic(const Digraph& d);

/// Tarjan's algorithm from the lowest unvisited vertex, neighbours ascending;
/// components are emitted in reverse completion order.
SccDecomposition strong_components(const Digraph& d);

/// Kahn's algorithm taking the smallest available source first; nullopt if
/// d has a cycle.
std::optional<VertexOrdering> acyclic_ordering(const Digraph& d);

/// Arc-induced subgraph: vertices are the endpoints of `arcs` in order of first appearance
/// (tail before head), arcs are exactly `arcs`. Throws InputError if some
/// arc is not in d.
Subgraph arc_induced_subgraph(const Digraph& d, std::span<const Arc> arcs);

/// Subdigraph induced by `vertices` (kept in the given order).
Subgraph induced_subgraph(const Digraph& d, std::span<const VertexId> vertices);

} // namespace lightsout
